#include "xifam/extremal.hpp"

#include <string>

namespace xifam::extremal {

namespace {

void check_k(int k, int hi, const char* what) {
  if (k < 0 || k > hi) {
    throw InputError(std::string(what) + ": k=" + std::to_string(k) + " outside [0, " +
                     std::to_string(hi) + "]");
  }
}

// All submasks of `support`.
std::vector<Mask> submasks(Mask support) {
  std::vector<Mask> out;
  for (Mask s = support;; s = (s - 1) & support) {
    out.push_back(s);
    if (s == 0) break;
  }
  return out;
}

}  // namespace

PairInstance gen_trivial(int n, Frac frac) {
  check_ground_size(n);
  return PairInstance(frac, Family::power_set(n), Family::singleton_empty(n));
}

PairInstance gen_zero(int n, int k) {
  check_ground_size(n);
  check_k(k, n, "gen_zero");
  const Mask low = full_mask(k);
  const Mask high = full_mask(n) & ~low;
  return PairInstance(Frac::reduced(0, 1), Family::from_masks(n, submasks(low)),
                      Family::from_masks(n, submasks(high)));
}

PairInstance gen_one(int n, int k) {
  check_ground_size(n);
  check_k(k, n, "gen_one");
  const Mask low = full_mask(k);
  const Mask high = full_mask(n) & ~low;
  std::vector<Mask> a;
  for (Mask t : submasks(high)) a.push_back(low | t);
  return PairInstance(Frac::reduced(1, 1), Family::from_masks(n, std::move(a)),
                      Family::from_masks(n, submasks(low)));
}

PairInstance gen_half(int n, int k) {
  check_ground_size(n);
  check_k(k, n / 2, "gen_half");
  const Mask paired = full_mask(2 * k);
  const Mask free_part = full_mask(n) & ~paired;

  // A: one element from each pair, anything outside the pairs.
  std::vector<Mask> picks{0};
  for (int i = 0; i < k; ++i) {
    std::vector<Mask> next;
    next.reserve(picks.size() * 2);
    for (Mask p : picks) {
      next.push_back(p | (Mask{1} << (2 * i)));
      next.push_back(p | (Mask{1} << (2 * i + 1)));
    }
    picks = std::move(next);
  }
  std::vector<Mask> a;
  for (Mask p : picks) {
    for (Mask t : submasks(free_part)) a.push_back(p | t);
  }

  // B: unions of whole pairs.
  std::vector<Mask> b{0};
  for (int i = 0; i < k; ++i) {
    const Mask pair = Mask{3} << (2 * i);
    const std::size_t half = b.size();
    for (std::size_t j = 0; j < half; ++j) b.push_back(b[j] | pair);
  }
  return PairInstance(Frac::reduced(1, 2), Family::from_masks(n, std::move(a)),
                      Family::from_masks(n, std::move(b)));
}

int max_class_index(int n, Frac frac) {
  if (frac == Frac::reduced(0, 1) || frac == Frac::reduced(1, 1)) return n;
  if (frac == Frac::reduced(1, 2)) return n / 2;
  return 0;
}

PairInstance gen_class(int n, Frac frac, int k) {
  check_ground_size(n);
  check_k(k, max_class_index(n, frac), ("class index for " + frac.str()).c_str());
  if (frac == Frac::reduced(0, 1)) return gen_zero(n, k);
  if (frac == Frac::reduced(1, 1)) return gen_one(n, k);
  if (frac == Frac::reduced(1, 2)) return gen_half(n, k);
  return gen_trivial(n, frac);
}

std::vector<PairInstance> predicted_classes(int n, Frac frac) {
  std::vector<PairInstance> out;
  for (int k = 0; k <= max_class_index(n, frac); ++k) out.push_back(gen_class(n, frac, k));
  return out;
}

}  // namespace xifam::extremal
