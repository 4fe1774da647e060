#ifndef XIFAM_CORE_HPP
#define XIFAM_CORE_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace xifam {

// Largest ground set accepted from callers. Lifted families (one appended
// coordinate) may use one bit more.
inline constexpr int kMaxGroundSize = 24;
inline constexpr int kMaxLiftedSize = kMaxGroundSize + 1;

// Bit (i-1) is set iff element i belongs to the subset.
using Mask = std::uint32_t;

// Malformed caller input: out-of-range elements, bad fractions, bad arguments.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was handed a value that violates its precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ArithmeticError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline bool mask_fits(Mask m, int n) { return (m & ~full_mask(n)) == 0; }

// |a ∩ b|
inline int intersection_size(Mask a, Mask b) { return std::popcount(a & b); }

// a Δ b; GF(2) addition of characteristic vectors.
inline Mask symmetric_difference(Mask a, Mask b) { return a ^ b; }

// Elements are 1-indexed; throws InputError when an element is outside [1, n].
Mask mask_from_elements(int n, const std::vector<int>& elements);
std::vector<int> elements_of(Mask m);

// "{1,3}" style rendering, "{}" for the empty set.
std::string format_mask(Mask m);

void check_ground_size(int n, int cap = kMaxGroundSize);

// A deduplicated, strictly increasing collection of subsets of [n].
class Family {
 public:
  Family() = default;

  // Sorts and deduplicates. Accepts n up to kMaxLiftedSize so that lifted
  // families are representable; callers facing user input go through
  // make_family, which enforces kMaxGroundSize.
  static Family from_masks(int n, std::vector<Mask> masks);
  static Family power_set(int n);
  static Family singleton_empty(int n) { return from_masks(n, {0}); }

  int n() const { return n_; }
  const std::vector<Mask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Mask m) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::vector<std::vector<int>> element_lists() const;

  bool operator==(const Family&) const = default;

 private:
  Family(int n, std::vector<Mask> members) : n_(n), members_(std::move(members)) {}

  int n_ = 0;
  std::vector<Mask> members_;
};

Family make_family(int n, const std::vector<std::vector<int>>& sets);

// Irreducible c/d with 0 <= c <= d.
class Frac {
 public:
  static Frac reduced(long long c, long long d);

  int c() const { return c_; }
  int d() const { return d_; }
  std::string str() const { return std::to_string(c_) + "/" + std::to_string(d_); }

  bool operator==(const Frac&) const = default;

 private:
  Frac(int c, int d) : c_(c), d_(d) {}

  int c_ = 0;
  int d_ = 1;
};

inline Frac reduce_fraction(long long c, long long d) { return Frac::reduced(c, d); }

// Parses "c/d" (or a bare integer, read as c/1). When `reduced_from_input`
// is given it is set to true iff dividing out the gcd changed the values.
Frac parse_fraction(const std::string& text, bool* reduced_from_input = nullptr);

struct PairInstance {
  PairInstance(Frac f, Family a_side, Family b_side);

  int n() const { return a.n(); }
  std::uint64_t product() const {
    return static_cast<std::uint64_t>(a.size()) * static_cast<std::uint64_t>(b.size());
  }

  Frac frac;
  Family a;
  Family b;

  bool operator==(const PairInstance&) const = default;
};

}  // namespace xifam

#endif  // XIFAM_CORE_HPP
