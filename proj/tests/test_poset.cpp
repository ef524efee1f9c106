#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "posetform/io.hpp"

using namespace posetform;

TEST_CASE("closure is computed and idempotent") {
  Poset p = Poset::from_relations(3, {{1, 2}, {2, 3}});
  CHECK(p.less(0, 2));
  Poset again = Poset::from_relations(3, p.relations());
  CHECK(p == again);
  CHECK_THROWS_AS(Poset::from_relations(2, {{1, 2}, {2, 1}}), CycleInOrder);
  CHECK_THROWS_AS(Poset::from_relations(2, {{1, 3}}), IndexOutOfRange);
}

TEST_CASE("census of isomorphism classes") {
  const int expected[] = {1, 2, 5, 16, 63, 318};
  for (int n = 1; n <= 6; ++n)
    CHECK(enumerate_posets(n).size() == static_cast<std::size_t>(expected[n - 1]));
  CHECK_THROWS_AS(enumerate_posets(9), CapExceeded);
}

TEST_CASE("hasse reduction closes back to the order") {
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      Hasse h = hasse(p);
      std::vector<std::pair<int, int>> pairs;
      for (auto [a, b] : h.quiver.arrows) pairs.emplace_back(a, b);
      CHECK(Poset::from_pairs0(p.n(), pairs) == p);
    }
}

TEST_CASE("structure report examples") {
  Poset k = wattle({2, 2});
  StructureReport rep = structure(k);
  CHECK(rep.connected);
  CHECK(rep.width == 2);
  CHECK(rep.junction_points.size() == 2);
  REQUIRE(rep.junction_components.size() == 1);
  CHECK(rep.junction_components[0].size() == 2);
  CHECK(!rep.cyclic);

  StructureReport w4 = structure(crown(2));
  CHECK(w4.cyclic);
  CHECK(w4.junction_points.size() == 4);
  REQUIRE(w4.simple_cycle.has_value());
  CHECK(w4.simple_cycle->size() == 4);

  StructureReport z5 = structure(chain(5));
  CHECK(z5.width == 1);
  CHECK(z5.junction_points.empty());
  CHECK(!z5.cyclic);
  CHECK(z5.terminal_points.size() == 2);
}

TEST_CASE("gamma classification") {
  CHECK(gamma_class(chain(4)).kind == GammaKind::Chain);
  CHECK(gamma_class(wattle({2, 2})).kind == GammaKind::An);
  CHECK(gamma_class(crown(3)).kind == GammaKind::CycleATilde);
  CHECK(gamma_class(standard_star({2, 2, 3})).kind == GammaKind::Dn);
  CHECK(gamma_class(standard_star({2, 3, 3})).kind == GammaKind::E6);
  CHECK(gamma_class(standard_star({2, 3, 4})).kind == GammaKind::E7);
  CHECK(gamma_class(standard_star({2, 3, 5})).kind == GammaKind::E8);
  CHECK(gamma_class(standard_star({3, 3, 3})).kind == GammaKind::ExtendedE6);
  CHECK(gamma_class(standard_star({2, 4, 4})).kind == GammaKind::ExtendedE7);
  CHECK(gamma_class(standard_star({2, 3, 6})).kind == GammaKind::ExtendedE8);
  CHECK(gamma_class(standard_star({2, 3, 7})).kind == GammaKind::Star);
  for (int n = 4; n <= 8; ++n) {
    CHECK(gamma_class(standard_dn(n)).kind == (n == 4 ? GammaKind::Dn : GammaKind::Dn));
    CHECK(gamma_class(standard_dtilde(n)).kind == GammaKind::ExtendedD);
    CHECK(standard_dtilde(n).n() == n + 1);
  }
}

TEST_CASE("standard orientation properties") {
  for (const auto& arms :
       std::vector<std::vector<int>>{{2, 2, 2}, {2, 3, 5}, {3, 3, 3}, {2, 2, 2, 2}}) {
    Poset p = standard_star(arms);
    Hasse h = hasse(p);
    auto deg = h.graph.degree();
    for (int v = 0; v < p.n(); ++v) {
      int in = 0, out = 0;
      for (auto [a, b] : h.quiver.arrows) {
        if (b == v) ++in;
        if (a == v) ++out;
      }
      if (deg[v] >= 3) CHECK((in == 0 || out == 0));
      if (deg[v] == 2) CHECK((in == 1 && out == 1));
    }
  }
}

TEST_CASE("antiisomorphism involution preserves the graph") {
  for (const Poset& p : enumerate_posets(5)) {
    Poset q = antiisomorph(p);
    CHECK(antiisomorph(q) == p);
    CHECK(hasse(p).graph.edges == hasse(q).graph.edges);
  }
}

TEST_CASE("reorientation keeps the graph") {
  for (const Poset& p : enumerate_posets(4)) {
    if (structure(p).cyclic) continue;
    for (auto [a, b] : hasse(p).quiver.arrows) {
      try {
        Poset q = reorient(p, a, b);
        CHECK(hasse(q).graph.edges == hasse(p).graph.edges);
      } catch (const InvalidArrow&) {
        // flip would change the reduction; skipped by contract
      }
    }
  }
}

TEST_CASE("families have the advertised relations") {
  Poset w4 = crown(2);
  CHECK(w4.n() == 4);
  CHECK(w4.relations().size() == 4);  // s_i^- < s_i^+ and cyclic successor
  CHECK(fence(2, 3).n() == 5);
  CHECK(fence(3, 2).n() == 5);
  CHECK(isomorphic(fence(3, 2), antiisomorph(fence(2, 3))));
  CHECK(family_V().relations().size() == 5);  // four covers plus h- < h+
  CHECK(wattle({2, 3, 2}).n() == 7);
  CHECK_THROWS_AS(wattle({2, 1, 2}), BadParams);
  CHECK_THROWS_AS(crown(1), BadParams);
  CHECK(primitive({1, 2, 5}).n() == 8);
}

TEST_CASE("induced subposets and isomorphism") {
  Poset k = wattle({2, 2});
  CHECK(contains_induced(chain(4), chain(3)).has_value());
  CHECK(!contains_induced(chain(4), antichain(2)).has_value());
  CHECK(contains_induced(fence(2, 3), k).has_value());
  CHECK(!contains_induced(k, crown(2)).has_value());
  CHECK(isomorphic(k, antiisomorph(k)));
  CHECK(!isomorphic(wattle({2, 2, 3}), wattle({2, 3, 2})));
  CHECK(isomorphic(wattle({2, 2, 3}), antiisomorph(wattle({3, 2, 2}))));
}

TEST_CASE("width by maximum antichain") {
  CHECK(poset_width(chain(6)) == 1);
  CHECK(poset_width(antichain(5)) == 5);
  CHECK(poset_width(crown(3)) == 3);
  CHECK(poset_width(example4_fixture()) == 3);
}

TEST_CASE("poset text format round trip") {
  Poset p = wattle({2, 3, 2});
  Poset q = parse_poset_text(poset_to_text(p));
  CHECK(p == q);
  CHECK_THROWS_AS(parse_poset_text("1 < 2\n"), ParseError);
  CHECK_THROWS_AS(parse_poset_text("n 2\n1 < 3\n"), ParseError);
  CHECK_THROWS_AS(parse_poset_text("n 2\n1 << 2\n"), ParseError);
  Poset c = parse_poset_text("# comment\nn 3\n1 < 2 # tail\n2 < 3\n");
  CHECK(c == chain(3));
}

TEST_CASE("dsl expressions") {
  CHECK(parse_dsl("zeta(7/3) + chain(4)").n() == 13);
  CHECK(parse_dsl("chain(4)+zeta(3/2)").n() == 8);
  CHECK(isomorphic(parse_dsl("v"), family_V()));
  CHECK(parse_dsl("star(2,3,5)").n() == 8);
  CHECK(parse_dsl("dn(6)").n() == 6);
  CHECK(parse_dsl("dtilde(5)").n() == 6);
  CHECK(parse_dsl("example4").n() == 6);
  CHECK_THROWS_AS(parse_dsl("zeta(1/2)"), ParseError);
  CHECK_THROWS_AS(parse_dsl("frobnicate(3)"), ParseError);
  CHECK_THROWS_AS(parse_dsl("chain(2) +"), ParseError);
  CHECK_THROWS_AS(parse_dsl("chain(0)"), ParseError);
}
