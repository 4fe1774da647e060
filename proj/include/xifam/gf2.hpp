#ifndef XIFAM_GF2_HPP
#define XIFAM_GF2_HPP

#include <cstdint>
#include <vector>

#include "xifam/core.hpp"

namespace xifam::gf2 {

// <x, y> over GF(2): parity of |x ∩ y|.
inline int inner_product_mod2(Mask a, Mask b) { return std::popcount(a & b) & 1; }

struct BasisInfo {
  // Reduced row echelon form: every pivot (highest set bit of a row) is
  // zero in all other rows. Rows are sorted by decreasing pivot.
  std::vector<Mask> basis;
  int dim = 0;
};

BasisInfo basis_and_dim(const Family& v);
BasisInfo basis_and_dim(const std::vector<Mask>& vectors);

// A family equal to its own span: contains ∅ and is closed under Δ.
class Code {
 public:
  // Throws ContractError unless `f` is a linear code.
  static Code from_family(Family f);

  const Family& family() const { return words_; }
  int n() const { return words_.n(); }
  int dim() const { return dim_; }
  std::size_t size() const { return words_.size(); }

  bool operator==(const Code&) const = default;

 private:
  friend Code span(const Family& v);
  friend Code span_of_basis(int n, const BasisInfo& info);
  Code(Family words, int dim) : words_(std::move(words)), dim_(dim) {}

  Family words_;
  int dim_ = 0;
};

// Materializes every codeword; throws ContractError when dim > kMaxGroundSize.
Code span(const Family& v);
Code span_of_basis(int n, const BasisInfo& info);

bool is_linear_code(const Family& v);

Code dual(const Code& c);
// Validating overload: non-code input is a ContractError.
Code dual(const Family& f);

enum class ColumnTag { kAllZero, kBalanced };

// One tag per coordinate 1..n of the matrix whose rows are the codewords.
std::vector<ColumnTag> column_profile(const Code& c);
std::vector<ColumnTag> column_profile(const Family& f);

bool orthogonal_families(const Family& a, const Family& b);

// Families over n+1 coordinates; the appended coordinate is bit position n.
// Clearing that bit maps each lifted member back to its source member.
struct LiftedPair {
  Family a;
  Family b;
};

inline Mask drop_lifted_bit(Mask m, int n) { return m & full_mask(n); }

LiftedPair lift_pair(const PairInstance& p);

// A family whose appended coordinate is 1 everywhere spans at least
// twice its own size. Throws ContractError when some member has a 0 there.
bool span_doubling_check(const Family& a_prime);

}  // namespace xifam::gf2

#endif  // XIFAM_GF2_HPP
