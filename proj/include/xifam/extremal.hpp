#ifndef XIFAM_EXTREMAL_HPP
#define XIFAM_EXTREMAL_HPP

#include <vector>

#include "xifam/core.hpp"

namespace xifam::extremal {

// (2^[n], {∅}); valid for every fraction.
PairInstance gen_trivial(int n, Frac frac);

// c/d = 0: (2^[k], 2^{k+1..n}).
PairInstance gen_zero(int n, int k);

// c/d = 1: ({[k] ∪ T : T ⊆ {k+1..n}}, 2^[k]).
PairInstance gen_one(int n, int k);

// c/d = 1/2 with pairs {2i−1, 2i}, i ≤ k: A meets each pair once, B is a
// union of whole pairs and avoids every element above 2k.
PairInstance gen_half(int n, int k);

// Largest k accepted by the generator for this fraction (0 when only the
// trivial pair exists).
int max_class_index(int n, Frac frac);

// The k-th characterized maximal pair; throws InputError if k is out of range.
PairInstance gen_class(int n, Frac frac, int k);

// Every maximal pair up to ground-set permutation.
std::vector<PairInstance> predicted_classes(int n, Frac frac);

}  // namespace xifam::extremal

#endif  // XIFAM_EXTREMAL_HPP
