#include "xifam/numtheory.hpp"

#include <algorithm>
#include <string>

#include "xifam/core.hpp"

namespace xifam::numtheory {

namespace {

void check_binom_args(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    throw InputError("binomial arguments need 0 <= k <= n, got n=" + std::to_string(n) +
                     " k=" + std::to_string(k));
  }
}

// Per-thread cache of primes up to the largest n seen so far.
const std::vector<std::int64_t>& cached_primes(std::int64_t limit) {
  thread_local std::vector<std::int64_t> primes;
  thread_local std::int64_t sieved_to = 1;
  if (limit > sieved_to) {
    sieved_to = std::max<std::int64_t>(limit, 2 * sieved_to);
    primes = primes_up_to(sieved_to);
  }
  return primes;
}

}  // namespace

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

int nu_p_binom(std::int64_t n, std::int64_t k, std::int64_t p) {
  check_binom_args(n, k);
  int total = 0;
  for (std::int64_t q = p; q <= n; q *= p) {
    total += static_cast<int>(n / q - k / q - (n - k) / q);
    if (q > n / p) break;
  }
  return total;
}

int nu2_binom(std::int64_t n, std::int64_t k) { return nu_p_binom(n, k, 2); }

bool is_pow2_binom(std::int64_t n, std::int64_t k) {
  check_binom_args(n, k);
  for (std::int64_t p : cached_primes(n)) {
    if (p > n) break;
    if (p == 2) continue;
    if (nu_p_binom(n, k, p) != 0) return false;
  }
  return true;
}

bool is_power_of_two(std::int64_t x) { return x > 0 && (x & (x - 1)) == 0; }

bool characterize_pow2_as_stated(std::int64_t n, std::int64_t k) {
  if (k == 0) return true;
  return is_power_of_two(n) && (k == 1 || k == n - 1);
}

bool characterize_pow2(std::int64_t n, std::int64_t k) {
  return k == n || characterize_pow2_as_stated(n, k);
}

}  // namespace xifam::numtheory
