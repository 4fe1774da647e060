#ifndef XIFAM_CROSSING_HPP
#define XIFAM_CROSSING_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "xifam/core.hpp"

namespace xifam {

// The defining rule d·|A∩B| = c·|B|, in integers.
inline bool satisfies_rule(Mask a, Mask b, Frac f) {
  return static_cast<long long>(f.d()) * popcount(a & b) ==
         static_cast<long long>(f.c()) * popcount(b);
}

// True iff every A in p.a and B in p.b satisfy the rule. Empty sides are
// vacuously valid.
bool is_cross_intersecting(const PairInstance& p);

// Symmetric variant: b·|A∩B| ∈ {a·|A|, a·|B|} for every cross pair.
bool is_symmetric_cross(const PairInstance& p);

inline bool symmetric_rule(Mask a, Mask b, Frac f) {
  const long long lhs = static_cast<long long>(f.d()) * popcount(a & b);
  return lhs == static_cast<long long>(f.c()) * popcount(a) ||
         lhs == static_cast<long long>(f.c()) * popcount(b);
}

struct ParityClasses {
  Family b1;  // |B| ≡ 0 (mod 2d)
  Family b2;  // |B| ≡ d (mod 2d)
};

// Throws InputError when some member size is not divisible by d.
ParityClasses partition_parity(const Family& b, Frac frac);

// Checks that <X_A, X_B> mod 2 is 1 exactly when B is in the odd class and
// c is odd. Throws ContractError when p is not a valid pair.
bool parity_identity_check(const PairInstance& p);

// The largest A-side compatible with b: every A ⊆ [n] meeting every member
// of b by the rule. Empty b yields the full power set.
Family a_max(const Family& b, Frac frac, int n);

// a_max maintained under push/pop of B-members. One instance belongs to one
// search worker at a time.
class AMaxTracker {
 public:
  AMaxTracker(int n, Frac frac);

  // Filters the current A-side by one more B-member.
  void push(Mask b);
  void pop();

  const std::vector<Mask>& current() const { return levels_[depth_]; }
  std::size_t size() const { return levels_[depth_].size(); }
  std::size_t depth() const { return depth_; }

 private:
  Frac frac_;
  std::size_t depth_ = 0;
  // levels_[i] is the A-side after i pushes; buffers past depth_ are reused.
  std::vector<std::vector<Mask>> levels_;
};

struct ClosureReport {
  bool delta_closed = false;         // ∅ ∈ B and B closed under Δ
  bool intersection_closed = false;  // B closed under ∩
  bool parity_table_ok = false;      // B1ΔB2 size class follows the parity table
  bool pairwise_mod_d_ok = false;    // d | |B1∩B2| for all pairs
  bool partition_ok = false;         // d | |B| for every member
};

ClosureReport closure_report(const Family& b, Frac frac);

// Nonempty members B with B'∩B ∈ {∅, B} for every member B'.
std::vector<Mask> primitive_sets(const Family& b);

class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StructureDecomposition {
  std::vector<Mask> blocks;                 // pairwise disjoint, nonempty
  std::size_t k = 0;                        // number of blocks
  std::vector<int> block_multipliers;       // |B_i| = d·ℓ_i; empty without a fraction
  int n0 = 0;                               // ground elements outside every block
};

// Requires b to be Δ- and ∩-closed and equal to the family of all unions of
// its primitive sets. With a fraction, every block size must be divisible
// by d. Any failure throws DecompositionError naming the first witness.
StructureDecomposition structure_decompose(const Family& b, std::optional<Frac> frac = {});

// All 2^k unions of the given disjoint blocks, over ground size n.
Family unions_of_blocks(int n, const std::vector<Mask>& blocks);

// 2^n0 · Π C(dℓ_i, cℓ_i) · 2^k. Throws ContractError when the multipliers
// are missing and ArithmeticError beyond 2^63.
std::uint64_t predicted_product(const StructureDecomposition& dec, Frac frac, int n);

}  // namespace xifam

#endif  // XIFAM_CROSSING_HPP
