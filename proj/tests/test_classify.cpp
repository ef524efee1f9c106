#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "posetform/classify.hpp"

using namespace posetform;

TEST_CASE("wattle generation from a rational") {
  ZetaResult k = zeta_generate(rat(3, 2));
  CHECK(k.spec.orders == std::vector<int>{2, 2});
  CHECK(k.spec.r == rat(3, 2));
  CHECK(k.stationary == RatVec{rat(1, 2), Rat(1), Rat(1), rat(1, 2)});
  CHECK(isomorphic(k.poset, wattle({2, 2})));

  CHECK(zeta_generate(rat(7, 3)).spec.orders == std::vector<int>{3, 3, 3});
  CHECK(zeta_generate(rat(8, 3)).spec.orders == std::vector<int>{3, 4, 3});
  CHECK(zeta_generate(rat(5, 3)).spec.orders == std::vector<int>{2, 3, 2});

  ZetaResult line = zeta_generate(Rat(4));  // t = 1: plain chain
  CHECK(line.poset == chain(4));
  CHECK(line.stationary == RatVec(4, Rat(1)));

  CHECK_THROWS_AS(zeta_generate(rat(1, 2)), BadRational);
}

TEST_CASE("stationary vectors satisfy the wattle balance conditions") {
  for (auto r : {rat(3, 2), rat(5, 3), rat(7, 3), rat(8, 3), rat(7, 2), rat(9, 4)}) {
    ZetaResult z = zeta_generate(r);
    CHECK(wattle_conditions(z.spec.orders, z.stationary));
    QuadraticForm f = form_of_poset(z.poset);
    RatVec g = gradient(f, z.stationary);
    for (const Rat& gi : g) CHECK(gi == 1 + r);  // every partial is 1+r
    CHECK(vec_sum(z.stationary) == z.spec.t * r);      // total mass t*r
    Rat sum_check = 0;
    auto base = wattle_base(z.spec.orders);
    for (std::size_t c = 0; c < z.spec.orders.size(); ++c) {
      Rat chain_sum = 0;
      for (int j = 0; j < z.spec.orders[c]; ++j)
        chain_sum += z.stationary[base[c] + j];
      CHECK(chain_sum == r);  // each chain carries r
      sum_check += chain_sum;
    }
    CHECK(sum_check == vec_sum(z.stationary));
    // perturbing any single coordinate breaks the balance
    for (std::size_t i = 0; i < z.stationary.size(); ++i) {
      RatVec y = z.stationary;
      y[i] += rat(1, 7);
      CHECK(!wattle_conditions(z.spec.orders, y));
    }
  }
}

TEST_CASE("shape recognition") {
  Recognition k = recognize(wattle({2, 2}));
  CHECK(k.shape == Shape::RSet);
  REQUIRE(k.wattle.has_value());
  CHECK(k.wattle->r == rat(3, 2));

  Recognition w = recognize(wattle({2, 2, 3}));
  CHECK(w.shape == Shape::Wattle);
  REQUIRE(w.wattle.has_value());
  CHECK(w.wattle->r == rat(5, 3));

  // <2,3,2> is exactly zeta(5/3), hence an r-set
  CHECK(recognize(wattle({2, 3, 2})).shape == Shape::RSet);

  CHECK(recognize(chain(7)).shape == Shape::Chain);
  CHECK(recognize(fence(2, 3)).shape == Shape::Other);
  CHECK(recognize(crown(3)).shape == Shape::Other);
  CHECK(recognize(standard_star({2, 2, 2})).shape == Shape::Other);
  CHECK_THROWS_AS(recognize(antichain(2)), NotConnected);
}

TEST_CASE("recognition inverts generation") {
  for (int l = 3; l <= 12; ++l)
    for (int t = 2; t <= 4; ++t) {
      if (l <= t) continue;
      Rat r = rat(l, t);
      if (r.get_den() != t) continue;  // keep l/t in lowest terms
      ZetaResult z = zeta_generate(r);
      Recognition rec = recognize(z.poset);
      CHECK(rec.shape == Shape::RSet);
      REQUIRE(rec.wattle.has_value());
      CHECK(rec.wattle->r == r);
    }
}

TEST_CASE("distinct rationals give non-isomorphic wattles") {
  std::map<std::string, Rat> seen;
  for (int l = 2; l <= 12; ++l)
    for (int t = 1; t <= 4; ++t) {
      Rat r = rat(l, t);
      if (r <= 1 || r.get_den() != t) continue;
      std::string key = canonical_key(zeta_generate(r).poset);
      auto [it, fresh] = seen.emplace(key, r);
      CHECK(fresh);
    }
}

TEST_CASE("critical lists") {
  auto one = critical_list_I();
  REQUIRE(one.size() == 5);
  for (const Poset& p : one) CHECK(p_value(p) == 4);
  auto two = critical_list_II();
  REQUIRE(two.size() == 6);
  const Rat expected[] = {Rat(5),      rat(13, 3), rat(25, 6),
                          rat(41, 10), rat(85, 21), rat(61, 15)};
  for (std::size_t i = 0; i < two.size(); ++i)
    CHECK(p_value(two[i]) == expected[i]);
}

TEST_CASE("utmost posets") {
  for (const Poset& p : critical_list_I()) CHECK(is_utmost(p));
  for (const Poset& p : critical_list_II()) CHECK(is_utmost(p));
  Poset k = wattle({2, 2});
  CHECK(is_utmost(disjoint_union(k, chain(4))));
  CHECK(p_value(disjoint_union(k, chain(5))) == rat(61, 15));
  CHECK(is_utmost(disjoint_union(k, chain(5))));
  CHECK(!is_utmost(primitive({1, 2, 4})));  // P = 59/15 < 4
  CHECK(!is_utmost(chain(3)));
  CHECK(is_utmost(antichain(4), 16, true));  // subset re-check agrees
}

TEST_CASE("representation type") {
  CHECK(rep_type(chain(9)) == RepType::Finite);
  CHECK(rep_type(antichain(4)) == RepType::Tame);
  CHECK(rep_type(antichain(5)) == RepType::Wild);
  CHECK(rep_type(primitive({1, 2, 5})) == RepType::Tame);
  CHECK(rep_type(primitive({1, 2, 6})) == RepType::Wild);
  CHECK(rep_type(example4_fixture()) == RepType::Finite);
  CHECK(rep_type(wattle({2, 2})) == RepType::Finite);
}

TEST_CASE("full classification of the base wattle") {
  Classification c = classify(wattle({2, 2}));
  CHECK(c.shape == Shape::RSet);
  REQUIRE(c.r.has_value());
  CHECK(*c.r == rat(3, 2));
  CHECK(c.p_value == rat(12, 5));
  CHECK(c.rep == RepType::Finite);
  CHECK(c.antimonotonous);
  CHECK(!c.c_witness.has_value());
  CHECK(c.p_faithful);
  CHECK(!c.in_list_I);
  CHECK(!c.utmost);

  Classification w = classify(crown(2));
  CHECK(!w.antimonotonous);
  REQUIRE(w.c_witness.has_value());
  CHECK(!w.p_faithful);
}

TEST_CASE("utmost faithful posets are exactly the critical lists") {
  auto one = critical_list_I();
  auto two = critical_list_II();
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      Classification c = classify(p);
      bool in_lists = c.in_list_I || c.in_list_II;
      CHECK((c.utmost && c.p_faithful) == in_lists);
      if (c.in_list_I) {
        bool found = false;
        for (const Poset& q : one) found = found || isomorphic(p, q);
        CHECK(found);
      }
    }
}
