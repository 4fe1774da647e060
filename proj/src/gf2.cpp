#include "xifam/gf2.hpp"

#include <algorithm>
#include <string>

#include "xifam/crossing.hpp"

namespace xifam::gf2 {

namespace {

int pivot_of(Mask row) { return 31 - std::countl_zero(row); }

}  // namespace

BasisInfo basis_and_dim(const std::vector<Mask>& vectors) {
  // rows[p] holds the row whose pivot is bit p, or 0.
  Mask rows[32] = {};
  int dim = 0;
  for (Mask v : vectors) {
    for (int p = 31; p >= 0 && v != 0; --p) {
      if (((v >> p) & 1U) != 0 && rows[p] != 0) v ^= rows[p];
    }
    if (v == 0) continue;
    const int p = pivot_of(v);
    // Clear the new pivot from every existing row.
    for (Mask& r : rows) {
      if (r != 0 && ((r >> p) & 1U) != 0) r ^= v;
    }
    rows[p] = v;
    ++dim;
  }
  BasisInfo info;
  info.dim = dim;
  for (int p = 31; p >= 0; --p) {
    if (rows[p] != 0) info.basis.push_back(rows[p]);
  }
  return info;
}

BasisInfo basis_and_dim(const Family& v) { return basis_and_dim(v.members()); }

Code span_of_basis(int n, const BasisInfo& info) {
  if (info.dim > kMaxGroundSize) {
    throw ContractError("refusing to materialize a span of dimension " + std::to_string(info.dim));
  }
  std::vector<Mask> words{0};
  words.reserve(std::size_t{1} << info.dim);
  for (Mask b : info.basis) {
    const std::size_t half = words.size();
    for (std::size_t i = 0; i < half; ++i) words.push_back(words[i] ^ b);
  }
  return Code(Family::from_masks(n, std::move(words)), info.dim);
}

Code span(const Family& v) { return span_of_basis(v.n(), basis_and_dim(v)); }

bool is_linear_code(const Family& v) {
  if (!v.contains(0)) return false;
  const int dim = basis_and_dim(v).dim;
  return dim < 63 && v.size() == (std::size_t{1} << dim);
}

Code Code::from_family(Family f) {
  if (!is_linear_code(f)) {
    throw ContractError("family of " + std::to_string(f.size()) + " sets is not a linear code");
  }
  const int dim = basis_and_dim(f).dim;
  return Code(std::move(f), dim);
}

Code dual(const Code& c) {
  const int n = c.n();
  const BasisInfo info = basis_and_dim(c.family());
  Mask pivots = 0;
  for (Mask r : info.basis) pivots |= Mask{1} << pivot_of(r);

  // Each free coordinate f gives one null-space vector: x_f = 1 and, for
  // the row with pivot p, x_p = row_f (other pivot entries are zero in RREF).
  BasisInfo dual_info;
  for (int f = 0; f < n; ++f) {
    if (((pivots >> f) & 1U) != 0) continue;
    Mask x = Mask{1} << f;
    for (Mask r : info.basis) {
      if (((r >> f) & 1U) != 0) x |= Mask{1} << pivot_of(r);
    }
    dual_info.basis.push_back(x);
  }
  dual_info.dim = static_cast<int>(dual_info.basis.size());
  return span_of_basis(n, dual_info);
}

Code dual(const Family& f) { return dual(Code::from_family(f)); }

std::vector<ColumnTag> column_profile(const Code& c) {
  const int n = c.n();
  std::vector<std::size_t> ones(static_cast<std::size_t>(n), 0);
  for (Mask w : c.family()) {
    for (int e : elements_of(w)) ++ones[static_cast<std::size_t>(e - 1)];
  }
  std::vector<ColumnTag> tags;
  tags.reserve(ones.size());
  for (std::size_t col = 0; col < ones.size(); ++col) {
    if (ones[col] == 0) {
      tags.push_back(ColumnTag::kAllZero);
    } else if (2 * ones[col] == c.size()) {
      tags.push_back(ColumnTag::kBalanced);
    } else {
      throw ContractError("column " + std::to_string(col + 1) + " has " +
                          std::to_string(ones[col]) + " ones among " +
                          std::to_string(c.size()) + " codewords");
    }
  }
  return tags;
}

std::vector<ColumnTag> column_profile(const Family& f) {
  return column_profile(Code::from_family(f));
}

bool orthogonal_families(const Family& a, const Family& b) {
  for (Mask x : a) {
    for (Mask y : b) {
      if (inner_product_mod2(x, y) != 0) return false;
    }
  }
  return true;
}

LiftedPair lift_pair(const PairInstance& p) {
  if (!is_cross_intersecting(p)) {
    throw ContractError("lift_pair needs a valid " + p.frac.str() + "-cross-intersecting pair");
  }
  const int n = p.n();
  const Mask top = Mask{1} << n;
  const bool c_odd = (p.frac.c() % 2) != 0;
  const int d = p.frac.d();

  std::vector<Mask> a_lifted;
  a_lifted.reserve(p.a.size());
  for (Mask a : p.a) a_lifted.push_back(a | top);

  // Odd class (|B| ≡ d mod 2d) gets a 1 appended when c is odd, everything
  // else a 0. With A nonempty every |B| is divisible by d, so this matches
  // partition_parity; with A empty the classification is immaterial.
  std::vector<Mask> b_lifted;
  b_lifted.reserve(p.b.size());
  for (Mask b : p.b) {
    const bool odd_class = popcount(b) % (2 * d) == d;
    b_lifted.push_back(c_odd && odd_class ? (b | top) : b);
  }
  return {Family::from_masks(n + 1, std::move(a_lifted)),
          Family::from_masks(n + 1, std::move(b_lifted))};
}

bool span_doubling_check(const Family& a_prime) {
  const int n = a_prime.n() - 1;
  const Mask top = Mask{1} << n;
  for (Mask m : a_prime) {
    if ((m & top) == 0) {
      throw ContractError("member " + format_mask(m) + " lacks the appended coordinate");
    }
  }
  const int dim = basis_and_dim(a_prime).dim;
  return (std::uint64_t{1} << dim) >= 2 * static_cast<std::uint64_t>(a_prime.size());
}

}  // namespace xifam::gf2
