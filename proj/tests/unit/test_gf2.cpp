#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "xifam/crossing.hpp"
#include "xifam/gf2.hpp"

using namespace xifam;
using namespace xifam::gf2;

namespace {

Family fam(int n, std::vector<std::vector<int>> sets) { return make_family(n, sets); }
Mask m(std::initializer_list<int> elems) { return mask_from_elements(25, std::vector<int>(elems)); }

Family random_family(std::mt19937& rng, int n, int count) {
  std::vector<Mask> v;
  for (int i = 0; i < count; ++i) v.push_back(static_cast<Mask>(rng()) & full_mask(n));
  return Family::from_masks(n, v);
}

}  // namespace

TEST_CASE("inner_product_mod2") {
  CHECK(inner_product_mod2(m({1}), m({1, 2})) == 1);
  CHECK(inner_product_mod2(m({1, 2}), m({1, 2})) == 0);
  CHECK(inner_product_mod2(0, m({1, 2, 3})) == 0);
}

TEST_CASE("span examples") {
  CHECK(span(fam(3, {{1, 2}, {2, 3}})).family() == fam(3, {{}, {1, 2}, {2, 3}, {1, 3}}));
  CHECK(span(Family::from_masks(4, {})).family() == fam(4, {{}}));
  CHECK(span(fam(2, {{1}, {2}, {1, 2}})).family() == Family::power_set(2));
}

TEST_CASE("span agrees with closure oracle, exhaustive over families at n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t families = std::uint64_t{1} << (1U << n);
    for (std::uint64_t pick = 0; pick < families; ++pick) {
      std::vector<Mask> v;
      for (Mask s = 0; s <= full_mask(n); ++s) {
        if ((pick >> s) & 1U) v.push_back(s);
      }
      const Family f = Family::from_masks(n, v);
      REQUIRE(span(f).family().members() == oracle::to_masks(oracle::closure(oracle::to_fam(f))));
    }
  }
}

TEST_CASE("basis_and_dim") {
  CHECK(basis_and_dim(fam(3, {{1, 2}, {2, 3}, {1, 3}})).dim == 2);
  CHECK(basis_and_dim(fam(3, {{}})).dim == 0);
  CHECK(basis_and_dim(fam(3, {{1}})).dim == 1);
}

TEST_CASE("span is idempotent, extensive, and has 2^dim members") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const Family f = random_family(rng, n, static_cast<int>(rng() % 8));
    const Code c = span(f);
    CHECK(span(c.family()).family() == c.family());
    CHECK(c.family().contains(0));
    for (Mask x : f) CHECK(c.family().contains(x));
    CHECK(c.size() == (std::size_t{1} << basis_and_dim(f).dim));
  }
}

TEST_CASE("|span| = 2^dim, exhaustive at n <= 4 and sampled at n = 5") {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t families = std::uint64_t{1} << (1U << n);
    for (std::uint64_t pick = 0; pick < families; ++pick) {
      std::vector<Mask> v;
      for (Mask s = 0; s <= full_mask(n); ++s) {
        if ((pick >> s) & 1U) v.push_back(s);
      }
      const Family f = Family::from_masks(n, v);
      REQUIRE(span(f).size() == (std::size_t{1} << basis_and_dim(f).dim));
    }
  }
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20000; ++trial) {
    const Family f = random_family(rng, 5, static_cast<int>(rng() % 33));
    REQUIRE(span(f).size() == (std::size_t{1} << basis_and_dim(f).dim));
  }
}

TEST_CASE("basis rows are reduced and independent") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const BasisInfo info = basis_and_dim(random_family(rng, n, 10));
    CHECK(static_cast<int>(info.basis.size()) == info.dim);
    for (std::size_t i = 0; i < info.basis.size(); ++i) {
      const int pivot = 31 - std::countl_zero(info.basis[i]);
      for (std::size_t j = 0; j < info.basis.size(); ++j) {
        if (i != j) CHECK(((info.basis[j] >> pivot) & 1U) == 0);
      }
    }
  }
}

TEST_CASE("is_linear_code") {
  CHECK(is_linear_code(fam(2, {{}, {1, 2}})));
  CHECK_FALSE(is_linear_code(fam(2, {{1}, {2}})));
  CHECK_FALSE(is_linear_code(fam(2, {{}, {1}, {2}})));
  CHECK_THROWS_AS(Code::from_family(fam(2, {{}, {1}, {2}})), ContractError);
}

TEST_CASE("dual examples") {
  CHECK(dual(fam(2, {{}, {1, 2}})).family() == fam(2, {{}, {1, 2}}));
  CHECK(dual(fam(3, {{}, {1, 2}})).family() == fam(3, {{}, {1, 2}, {3}, {1, 2, 3}}));
  CHECK(dual(fam(2, {{}})).family() == Family::power_set(2));
  CHECK_THROWS_AS(dual(fam(2, {{1}})), ContractError);
}

TEST_CASE("dual matches the scanning oracle and is an involution") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Code c = span(random_family(rng, n, static_cast<int>(rng() % 6)));
    const Code d = dual(c);
    REQUIRE(d.family().members() == oracle::to_masks(oracle::dual_by_scan(n, oracle::to_fam(c.family()))));
    CHECK(d.dim() == n - c.dim());
    CHECK(dual(d) == c);
  }
}

TEST_CASE("column_profile") {
  using enum ColumnTag;
  CHECK(column_profile(fam(3, {{}})) == std::vector<ColumnTag>{kAllZero, kAllZero, kAllZero});
  CHECK(column_profile(fam(2, {{}, {1, 2}})) == std::vector<ColumnTag>{kBalanced, kBalanced});
  CHECK(column_profile(span(fam(2, {{1}}))) == std::vector<ColumnTag>{kBalanced, kAllZero});
  CHECK_THROWS_AS(column_profile(fam(2, {{1}})), ContractError);
}

TEST_CASE("column_profile never needs a third tag on spans") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 16);
    CHECK_NOTHROW(column_profile(span(random_family(rng, n, static_cast<int>(rng() % 7)))));
  }
}

TEST_CASE("orthogonal_families") {
  CHECK(orthogonal_families(fam(2, {{1}}), fam(2, {{2}})));
  CHECK_FALSE(orthogonal_families(fam(2, {{1}}), fam(2, {{1, 2}})));
  CHECK(orthogonal_families(fam(3, {{1}, {2, 3}, {1, 2, 3}}), fam(3, {{}})));
}

TEST_CASE("lift_pair examples") {
  const int n3 = 3;
  const Mask top3 = Mask{1} << n3;
  const PairInstance p(Frac::reduced(1, 3), fam(3, {{1}}), fam(3, {{1, 2, 3}}));
  const LiftedPair l = lift_pair(p);
  CHECK(l.a.n() == 4);
  CHECK(l.a.members() == std::vector<Mask>{m({1}) | top3});
  CHECK(l.b.members() == std::vector<Mask>{m({1, 2, 3}) | top3});
  CHECK(orthogonal_families(l.a, l.b));

  const PairInstance trivial(Frac::reduced(2, 5), Family::power_set(3), fam(3, {{}}));
  const LiftedPair lt = lift_pair(trivial);
  CHECK(lt.b.members() == std::vector<Mask>{0});
  CHECK(orthogonal_families(lt.a, lt.b));

  const Mask top2 = Mask{1} << 2;
  const PairInstance half(Frac::reduced(1, 2), fam(2, {{1}}), fam(2, {{}, {1, 2}}));
  const LiftedPair lh = lift_pair(half);
  CHECK(lh.b.members() == std::vector<Mask>{0, m({1, 2}) | top2});
  CHECK(lh.a.members() == std::vector<Mask>{m({1}) | top2});
  CHECK(orthogonal_families(lh.a, lh.b));
  for (Mask x : lh.b) CHECK(half.b.contains(drop_lifted_bit(x, 2)));

  const PairInstance invalid(Frac::reduced(1, 2), fam(2, {{1}}), fam(2, {{1}}));
  CHECK_THROWS_AS(lift_pair(invalid), ContractError);
}

TEST_CASE("lift_pair with even c appends 0 to every B-vector") {
  // c/d = 2/3: |A ∩ {1,2,3}| = 2.
  const PairInstance p(Frac::reduced(2, 3), fam(3, {{1, 2}, {1, 3}, {2, 3}}), fam(3, {{}, {1, 2, 3}}));
  REQUIRE(is_cross_intersecting(p));
  const LiftedPair l = lift_pair(p);
  CHECK(l.b.members() == p.b.members());
  CHECK(orthogonal_families(l.a, l.b));
  // Without lifting the families are already orthogonal when c is even.
  CHECK(orthogonal_families(p.a, p.b));
}

TEST_CASE("span_doubling_check") {
  const Mask top = Mask{1} << 2;
  CHECK(span_doubling_check(Family::from_masks(3, {m({1}) | top, m({2}) | top})));
  CHECK(span_doubling_check(Family::from_masks(3, {top})));
  CHECK(span_doubling_check(Family::from_masks(3, {m({1}) | top, m({2}) | top, m({1, 2}) | top})));
  CHECK_THROWS_AS(span_doubling_check(Family::from_masks(3, {m({1})})), ContractError);
}

TEST_CASE("span_doubling_check holds for random all-ones-column families") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Mask top = Mask{1} << n;
    std::vector<Mask> v;
    const int count = 1 + static_cast<int>(rng() % 10);
    for (int i = 0; i < count; ++i) v.push_back((static_cast<Mask>(rng()) & full_mask(n)) | top);
    CHECK(span_doubling_check(Family::from_masks(n + 1, v)));
  }
}
