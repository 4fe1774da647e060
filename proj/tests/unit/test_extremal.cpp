#include <doctest.h>

#include <set>

#include "xifam/crossing.hpp"
#include "xifam/extremal.hpp"
#include "xifam/search.hpp"

using namespace xifam;
using namespace xifam::extremal;

namespace {
Family fam(int n, std::vector<std::vector<int>> sets) { return make_family(n, sets); }
Mask m(std::initializer_list<int> elems) { return mask_from_elements(24, std::vector<int>(elems)); }

const std::vector<Frac> kFracs = {Frac::reduced(0, 1), Frac::reduced(1, 1), Frac::reduced(1, 2),
                                  Frac::reduced(1, 3), Frac::reduced(2, 3), Frac::reduced(3, 4)};
}  // namespace

TEST_CASE("gen_trivial") {
  const PairInstance p = gen_trivial(3, Frac::reduced(1, 3));
  CHECK(p.a.size() == 8);
  CHECK(p.b.size() == 1);
  CHECK(p.product() == 8);
  CHECK(gen_trivial(1, Frac::reduced(1, 2)).a == fam(1, {{}, {1}}));
  CHECK(gen_trivial(1, Frac::reduced(1, 2)).b == fam(1, {{}}));
  CHECK(gen_trivial(4, Frac::reduced(1, 3)).a == gen_trivial(4, Frac::reduced(5, 7)).a);
}

TEST_CASE("gen_zero") {
  const PairInstance p = gen_zero(3, 1);
  CHECK(p.a.size() == 2);
  CHECK(p.b.size() == 4);
  CHECK(p.product() == 8);
  CHECK(gen_zero(3, 3).a == Family::power_set(3));
  CHECK(gen_zero(3, 3).b == fam(3, {{}}));
  CHECK(gen_zero(3, 0).a == fam(3, {{}}));
  CHECK(gen_zero(3, 0).b == Family::power_set(3));
  CHECK_THROWS_AS(gen_zero(3, 4), InputError);
  CHECK_THROWS_AS(gen_zero(3, -1), InputError);
}

TEST_CASE("gen_one") {
  const PairInstance p = gen_one(3, 2);
  CHECK(p.a == fam(3, {{1, 2}, {1, 2, 3}}));
  CHECK(p.b == Family::from_masks(3, {0, m({1}), m({2}), m({1, 2})}));
  CHECK(p.product() == 8);
  CHECK(gen_one(3, 0).a == Family::power_set(3));
  CHECK(gen_one(3, 0).b == fam(3, {{}}));
  CHECK(gen_one(3, 3).a == fam(3, {{1, 2, 3}}));
  CHECK(gen_one(3, 3).b == Family::power_set(3));
  CHECK_THROWS_AS(gen_one(2, 3), InputError);
}

TEST_CASE("gen_half") {
  const PairInstance p = gen_half(2, 1);
  CHECK(p.a == fam(2, {{1}, {2}}));
  CHECK(p.b == fam(2, {{}, {1, 2}}));
  CHECK(p.product() == 4);
  CHECK(gen_half(4, 0).a == Family::power_set(4));
  CHECK(gen_half(4, 0).b == fam(4, {{}}));
  const PairInstance five = gen_half(5, 2);
  CHECK(five.a.size() == 8);
  CHECK(five.b.size() == 4);
  CHECK_THROWS_AS(gen_half(5, 3), InputError);
}

TEST_CASE("predicted_classes counts") {
  CHECK(predicted_classes(4, Frac::reduced(1, 2)).size() == 3);
  CHECK(predicted_classes(3, Frac::reduced(1, 3)).size() == 1);
  CHECK(predicted_classes(4, Frac::reduced(0, 1)).size() == 5);
  CHECK(predicted_classes(4, Frac::reduced(1, 1)).size() == 5);
  CHECK_THROWS_AS(gen_class(3, Frac::reduced(1, 3), 1), InputError);
}

TEST_CASE("generated pairs are valid, maximum, and have product 2^n") {
  for (int n = 1; n <= 7; ++n) {
    for (const Frac& frac : kFracs) {
      for (const PairInstance& p : predicted_classes(n, frac)) {
        CHECK(p.frac == frac);
        CHECK(is_cross_intersecting(p));
        CHECK(p.product() == (std::uint64_t{1} << n));
        CHECK(a_max(p.b, frac, n) == p.a);
        CHECK(parity_identity_check(p));
      }
    }
  }
}

TEST_CASE("gen_half B realizes the closure structure") {
  const Frac half = Frac::reduced(1, 2);
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= n / 2; ++k) {
      const Family b = gen_half(n, k).b;
      const ClosureReport r = closure_report(b, half);
      CHECK(r.delta_closed);
      CHECK(r.intersection_closed);
      CHECK(r.parity_table_ok);
      CHECK(r.pairwise_mod_d_ok);
      const StructureDecomposition dec = structure_decompose(b, half);
      std::vector<Mask> expected;
      for (int i = 0; i < k; ++i) expected.push_back(Mask{3} << (2 * i));
      CHECK(dec.blocks == expected);
      CHECK(dec.n0 == n - 2 * k);
      CHECK(predicted_product(dec, half, n) == (std::uint64_t{1} << n));
    }
  }
}

TEST_CASE("distinct class indices give distinct canonical classes") {
  for (int n = 1; n <= 6; ++n) {
    for (const Frac& frac : kFracs) {
      std::set<search::CanonicalKey> keys;
      const auto classes = predicted_classes(n, frac);
      for (const auto& p : classes) keys.insert(search::canonical_form(p));
      CHECK(keys.size() == classes.size());
    }
  }
}
