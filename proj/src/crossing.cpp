#include "xifam/crossing.hpp"

#include <algorithm>
#include <limits>

#include "xifam/gf2.hpp"

namespace xifam {

bool is_cross_intersecting(const PairInstance& p) {
  for (Mask b : p.b) {
    for (Mask a : p.a) {
      if (!satisfies_rule(a, b, p.frac)) return false;
    }
  }
  return true;
}

bool is_symmetric_cross(const PairInstance& p) {
  for (Mask b : p.b) {
    for (Mask a : p.a) {
      if (!symmetric_rule(a, b, p.frac)) return false;
    }
  }
  return true;
}

ParityClasses partition_parity(const Family& b, Frac frac) {
  const int d = frac.d();
  std::vector<Mask> even;
  std::vector<Mask> odd;
  for (Mask m : b) {
    const int size = popcount(m);
    if (size % d != 0) {
      throw InputError("|" + format_mask(m) + "| = " + std::to_string(size) +
                       " is not divisible by d = " + std::to_string(d));
    }
    (size % (2 * d) == 0 ? even : odd).push_back(m);
  }
  return {Family::from_masks(b.n(), std::move(even)), Family::from_masks(b.n(), std::move(odd))};
}

bool parity_identity_check(const PairInstance& p) {
  if (!is_cross_intersecting(p)) {
    throw ContractError("parity identity needs a valid " + p.frac.str() +
                        "-cross-intersecting pair");
  }
  if (p.a.empty()) return true;
  const ParityClasses classes = partition_parity(p.b, p.frac);
  const bool c_odd = (p.frac.c() % 2) != 0;
  for (Mask a : p.a) {
    for (Mask b : classes.b1) {
      if (gf2::inner_product_mod2(a, b) != 0) return false;
    }
    for (Mask b : classes.b2) {
      if (gf2::inner_product_mod2(a, b) != (c_odd ? 1 : 0)) return false;
    }
  }
  return true;
}

Family a_max(const Family& b, Frac frac, int n) {
  check_ground_size(n);
  if (b.n() != n && !b.empty()) {
    throw InputError("B family has ground size " + std::to_string(b.n()) + ", expected " +
                     std::to_string(n));
  }
  std::vector<Mask> out;
  const Mask limit = full_mask(n);
  for (Mask a = 0;; ++a) {
    const bool ok = std::all_of(b.begin(), b.end(),
                                [&](Mask m) { return satisfies_rule(a, m, frac); });
    if (ok) out.push_back(a);
    if (a == limit) break;
  }
  return Family::from_masks(n, std::move(out));
}

AMaxTracker::AMaxTracker(int n, Frac frac) : frac_(frac) {
  check_ground_size(n);
  levels_.emplace_back(Family::power_set(n).members());
}

void AMaxTracker::push(Mask b) {
  if (depth_ + 1 == levels_.size()) levels_.emplace_back();
  const auto& parent = levels_[depth_];
  auto& child = levels_[depth_ + 1];
  child.clear();
  const long long target = static_cast<long long>(frac_.c()) * popcount(b);
  const long long d = frac_.d();
  for (Mask a : parent) {
    if (d * popcount(a & b) == target) child.push_back(a);
  }
  ++depth_;
}

void AMaxTracker::pop() {
  if (depth_ == 0) throw ContractError("AMaxTracker::pop at depth 0");
  --depth_;
}

ClosureReport closure_report(const Family& b, Frac frac) {
  const int d = frac.d();
  ClosureReport r;
  r.delta_closed = b.contains(0);
  r.intersection_closed = true;
  r.pairwise_mod_d_ok = true;
  r.partition_ok = std::all_of(b.begin(), b.end(), [&](Mask m) { return popcount(m) % d == 0; });
  r.parity_table_ok = r.partition_ok;

  const auto& m = b.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i; j < m.size(); ++j) {
      const Mask x = m[i];
      const Mask y = m[j];
      if (r.delta_closed && !b.contains(x ^ y)) r.delta_closed = false;
      if (r.intersection_closed && !b.contains(x & y)) r.intersection_closed = false;
      if (popcount(x & y) % d != 0) r.pairwise_mod_d_ok = false;
      if (r.parity_table_ok) {
        const bool x_odd = popcount(x) % (2 * d) == d;
        const bool y_odd = popcount(y) % (2 * d) == d;
        const int expected = (x_odd == y_odd) ? 0 : d;
        if (popcount(x ^ y) % (2 * d) != expected) r.parity_table_ok = false;
      }
    }
  }
  return r;
}

std::vector<Mask> primitive_sets(const Family& b) {
  std::vector<Mask> out;
  for (Mask cand : b) {
    if (cand == 0) continue;
    const bool primitive = std::all_of(b.begin(), b.end(), [&](Mask other) {
      const Mask meet = other & cand;
      return meet == 0 || meet == cand;
    });
    if (primitive) out.push_back(cand);
  }
  return out;
}

Family unions_of_blocks(int n, const std::vector<Mask>& blocks) {
  std::vector<Mask> out{0};
  for (Mask block : blocks) {
    const std::size_t half = out.size();
    for (std::size_t i = 0; i < half; ++i) out.push_back(out[i] | block);
  }
  return Family::from_masks(n, std::move(out));
}

StructureDecomposition structure_decompose(const Family& b, std::optional<Frac> frac) {
  const ClosureReport closure = closure_report(b, frac.value_or(Frac::reduced(0, 1)));
  if (!closure.delta_closed) throw DecompositionError("family is not closed under symmetric difference");
  if (!closure.intersection_closed) throw DecompositionError("family is not closed under intersection");

  StructureDecomposition dec;
  dec.blocks = primitive_sets(b);
  dec.k = dec.blocks.size();

  Mask covered = 0;
  for (Mask block : dec.blocks) {
    if ((covered & block) != 0) {
      throw DecompositionError("primitive set " + format_mask(block) + " overlaps another");
    }
    covered |= block;
  }
  dec.n0 = b.n() - popcount(covered);

  const Family rebuilt = unions_of_blocks(b.n(), dec.blocks);
  if (rebuilt != b) {
    for (Mask m : b) {
      if (!rebuilt.contains(m)) {
        throw DecompositionError("member " + format_mask(m) + " is not a union of primitive sets");
      }
    }
    throw DecompositionError("family lacks some union of primitive sets");
  }

  if (frac) {
    const int d = frac->d();
    for (Mask block : dec.blocks) {
      const int size = popcount(block);
      if (size % d != 0) {
        throw DecompositionError("block " + format_mask(block) + " has size " +
                                 std::to_string(size) + ", not divisible by d = " +
                                 std::to_string(d));
      }
      dec.block_multipliers.push_back(size / d);
    }
  }
  return dec;
}

namespace {

constexpr std::uint64_t kProductLimit = std::uint64_t{1} << 63;

std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out) || out > kProductLimit) {
    throw ArithmeticError("predicted product exceeds 2^63");
  }
  return out;
}

std::uint64_t binomial(int top, int bottom) {
  bottom = std::min(bottom, top - bottom);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= bottom; ++i) {
    acc = acc * static_cast<unsigned>(top - bottom + i) / static_cast<unsigned>(i);
    if (acc > kProductLimit) throw ArithmeticError("binomial coefficient exceeds 2^63");
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

std::uint64_t predicted_product(const StructureDecomposition& dec, Frac frac, int n) {
  if (dec.block_multipliers.size() != dec.k) {
    throw ContractError("decomposition carries no block multipliers for " + frac.str());
  }
  int covered = 0;
  for (int l : dec.block_multipliers) covered += frac.d() * l;
  if (covered + dec.n0 != n) {
    throw ContractError("decomposition does not cover ground size " + std::to_string(n));
  }
  if (dec.n0 >= 63 || dec.k >= 63) throw ArithmeticError("predicted product exceeds 2^63");

  std::uint64_t product = std::uint64_t{1} << dec.n0;
  for (int l : dec.block_multipliers) {
    product = checked_mul(product, binomial(frac.d() * l, frac.c() * l));
  }
  return checked_mul(product, std::uint64_t{1} << dec.k);
}

}  // namespace xifam
