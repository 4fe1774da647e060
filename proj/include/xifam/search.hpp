#ifndef XIFAM_SEARCH_HPP
#define XIFAM_SEARCH_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "xifam/core.hpp"

namespace xifam::search {

inline constexpr int kMaxCanonicalGround = 8;
inline constexpr int kMaxSymmetricGround = 4;

struct SearchConfig {
  std::uint64_t max_nodes = 100'000'000;
  int threads = 1;
  bool canonicalize = true;
  // Disabling pruning visits every subset of the candidate universe; used as
  // a cross-check of the bound.
  bool prune = true;
};

// Serialized pair, minimal over all ground-set permutations. Byte order is
// chosen so that lexicographic comparison matches mask-by-mask comparison.
struct CanonicalKey {
  std::vector<std::uint8_t> bytes;

  auto operator<=>(const CanonicalKey&) const = default;
  bool operator==(const CanonicalKey&) const = default;
};

struct CanonicalClass {
  CanonicalKey key;
  PairInstance representative;  // the permuted pair whose serialization is `key`
  std::size_t count = 0;        // maximal pairs found in this class
};

struct SearchResult {
  int n = 0;
  Frac frac = Frac::reduced(0, 1);
  std::uint64_t max_product = 0;
  // Sorted by (B, A) member lists.
  std::vector<PairInstance> maximal_pairs;
  // Sorted by key; empty unless canonicalization ran.
  std::vector<CanonicalClass> classes;
  bool canonicalized = false;
  std::uint64_t nodes_visited = 0;
  std::uint64_t pruned = 0;
  bool exhausted = false;
  // Some node produced a product above 2^n.
  bool bound_violation = false;
};

// Every S ⊆ [n] with d | |S|, ascending by mask value.
std::vector<Mask> divisible_universe(int n, Frac frac);

// All pairs (a_max(B), B) of maximum product, found by depth-first search
// over families B drawn from divisible_universe. Any maximal pair (A, B)
// has A ⊆ a_max(B), so the maximum over B of |a_max(B)|·|B| is the maximum
// product and each maximal pair appears with A = a_max(B).
SearchResult enumerate_maximal(int n, Frac frac, const SearchConfig& cfg = {});

// Throws InputError for n > kMaxCanonicalGround.
CanonicalKey canonical_form(const PairInstance& p);
CanonicalClass canonical_class(const PairInstance& p);

// Applies a permutation of [n] (perm[i] is the 0-based image of element i+1).
Mask permute_mask(Mask m, const std::vector<int>& perm);
PairInstance permute_pair(const PairInstance& p, const std::vector<int>& perm);

struct MatchReport {
  bool match = false;
  std::size_t predicted_count = 0;
  std::size_t found_count = 0;
  std::vector<CanonicalClass> missing;  // predicted, not found
  std::vector<CanonicalClass> extra;    // found, not predicted
};

// Throws ContractError unless r is exhausted and canonicalized.
MatchReport compare_with_predicted(const SearchResult& r);

struct SymmetricReport {
  int n = 0;
  Frac frac = Frac::reduced(0, 1);
  std::uint64_t best_product = 0;
  std::vector<PairInstance> witnesses;
  std::uint64_t nodes_visited = 0;
  std::uint64_t pruned = 0;
  bool exhausted = false;
};

// Exploratory maximum of |A|·|B| over symmetric pairs; n ≤ kMaxSymmetricGround.
SymmetricReport symmetric_max_search(int n, Frac frac, const SearchConfig& cfg = {});

}  // namespace xifam::search

#endif  // XIFAM_SEARCH_HPP
