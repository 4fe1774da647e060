#ifndef XIFAM_NUMTHEORY_HPP
#define XIFAM_NUMTHEORY_HPP

#include <cstdint>
#include <vector>

namespace xifam::numtheory {

// ν_p(C(n, k)) by Legendre's floor sum:
//   Σ_{p^i ≤ n} (⌊n/p^i⌋ − ⌊k/p^i⌋ − ⌊(n−k)/p^i⌋).
// Throws InputError when k > n or either argument is negative.
int nu_p_binom(std::int64_t n, std::int64_t k, std::int64_t p);

// The 2-adic valuation of C(n, k); never exceeds ⌊log2 n⌋.
int nu2_binom(std::int64_t n, std::int64_t k);

// Whether C(n, k) is a power of two, decided from odd-prime valuations
// without forming C(n, k).
bool is_pow2_binom(std::int64_t n, std::int64_t k);

// The closed-form answer: k = 0, k = n, or (k, n) ∈ {(1, 2^m), (2^m − 1, 2^m)}.
// The k = n case is C(n, n) = C(n, 0) = 1.
bool characterize_pow2(std::int64_t n, std::int64_t k);

// Right-hand side exactly as usually stated, without the k = n mirror case;
// it disagrees with is_pow2_binom precisely at k = n ≥ 2.
bool characterize_pow2_as_stated(std::int64_t n, std::int64_t k);

bool is_power_of_two(std::int64_t x);

// Primes ≤ limit, ascending (sieve of Eratosthenes).
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

}  // namespace xifam::numtheory

#endif  // XIFAM_NUMTHEORY_HPP
