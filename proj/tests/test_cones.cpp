#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "posetform/cones.hpp"
#include "posetform/simplex_min.hpp"

using namespace posetform;

namespace {

Poset example2_star() { return Poset::from_relations(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}); }

bool same_ray(const RatVec& a, const RatVec& b) {
  return primitive_integer(a) == primitive_integer(b) ||
         primitive_integer(a) == vec_neg(primitive_integer(b));
}

}  // namespace

TEST_CASE("crown witnesses match the worked example") {
  QuadraticForm f = form_of_poset(crown(2));
  // St(f) contains (1,1,1,1), C(f) contains (1,1,-1,-1)
  auto st = stationary_cone(f);
  REQUIRE(st.has_value());
  CHECK(same_ray(st->vector, {Rat(1), Rat(1), Rat(1), Rat(1)}));
  CHECK(st->cone == ConeKind::StPlus);
  auto c = c_cone(f);
  REQUIRE(c.has_value());
  CHECK(verify_witness(f, *c));
  CHECK(verify_witness(f, make_witness(f, {Rat(1), Rat(1), Rat(-1), Rat(-1)},
                                       ConeKind::Cminus)));
  CHECK_THROWS_AS(make_witness(f, {Rat(1), Rat(1), Rat(1), Rat(1)}, ConeKind::Cminus),
                  InvalidWitness);
}

TEST_CASE("antimonotonous posets have no C witness") {
  CHECK(!c_cone(form_of_poset(wattle({2, 2}))).has_value());
  CHECK(!c_cone(form_of_poset(chain(4))).has_value());
  CHECK(!c_cone(form_of_poset(example4_fixture())).has_value());
  CHECK(!c_tilde(form_of_poset(example4_fixture())).has_value());
  auto st = stationary_cone(form_of_poset(example4_fixture()));
  REQUIRE(st.has_value());
  CHECK(same_ray(st->vector, {Rat(1), Rat(2), Rat(1), Rat(1), Rat(2), Rat(1)}));
}

TEST_CASE("relaxed cones are empty exactly when C is") {
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      QuadraticForm f = form_of_poset(p);
      auto c = c_cone(f);
      auto hat = hat_cones(f);
      CHECK(c.has_value() == hat.has_value());
      if (hat) {
        ConeWitness folded = hat_to_c(f, *hat);
        CHECK((folded.cone == ConeKind::Cminus || folded.cone == ConeKind::Cplus));
        CHECK(verify_witness(f, folded));
      }
      if (c) CHECK(verify_witness(f, *c));
    }
}

TEST_CASE("direct sums inherit C from either summand") {
  std::mt19937 rng(31);
  auto pool4 = enumerate_posets(4);
  std::uniform_int_distribution<std::size_t> pick(0, pool4.size() - 1);
  for (int it = 0; it < 100; ++it) {
    QuadraticForm f1 = form_of_poset(pool4[pick(rng)]);
    QuadraticForm f2 = form_of_poset(pool4[pick(rng)]);
    QuadraticForm sum = direct_sum(f1, f2);
    bool expect = c_cone(f1).has_value() || c_cone(f2).has_value();
    auto got = c_cone(sum);
    CHECK(got.has_value() == expect);
    if (got) CHECK(verify_witness(sum, *got));
  }
}

TEST_CASE("stationary and C-with-gradient never coexist") {
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      QuadraticForm f = form_of_poset(p);
      CHECK(!(stationary_cone(f).has_value() && c_tilde(f).has_value()));
    }
}

TEST_CASE("nonsingular dichotomy") {
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      QuadraticForm f = form_of_poset(p);
      if (determinant(f.A) == 0) continue;
      Dichotomy d = nonsingular_dichotomy(f);
      CHECK(d.st.has_value() != d.c.has_value());
      if (d.st) CHECK(verify_witness(f, *d.st));
      if (d.c) CHECK(verify_witness(f, *d.c));
      CHECK(d.st.has_value() == stationary_cone(f).has_value());
      CHECK(d.c.has_value() == c_cone(f).has_value());
    }
  // hand-built indefinite diagonal form: St empty, C = span(e_2)
  QuadraticForm g{2, RatMat{{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}}};
  Dichotomy d = nonsingular_dichotomy(g);
  CHECK(!d.st.has_value());
  REQUIRE(d.c.has_value());
  CHECK(verify_witness(g, *d.c));
  CHECK(!stationary_cone(g).has_value());
}

TEST_CASE("dynkin vectors of the five-point star") {
  QuadraticForm f = form_of_poset(example2_star());
  RatVec d{Rat(-2), Rat(1), Rat(1), Rat(1), Rat(1)};
  for (int m = 0; m < 5; ++m) {
    DynkinSearch s = dynkin_vector(f, m);
    CHECK(s.exhaustive);
    REQUIRE(s.witness.has_value());
    CHECK(same_ray(s.witness->vector, d));
    CHECK(s.witness->pivot == m);
    CHECK(s.witness->pivot_gradient == 0);
  }
  // pivot a leaf: fold to (-2,1,1,1,-1); pivot the root: (-4,1,1,1,1)
  DynkinWitness leaf{d, 4, Rat(0)};
  ConeWitness c1 = dynkin_to_c(f, leaf);
  CHECK(verify_witness(f, c1));
  CHECK(same_ray(c1.vector, {Rat(-2), Rat(1), Rat(1), Rat(1), Rat(-1)}));
  DynkinWitness root{d, 0, Rat(0)};
  ConeWitness c2 = dynkin_to_c(f, root);
  CHECK(verify_witness(f, c2));
  CHECK(same_ray(c2.vector, {Rat(-4), Rat(1), Rat(1), Rat(1), Rat(1)}));
}

TEST_CASE("closed-form dynkin vectors on standard stars") {
  std::vector<Poset> stars;
  for (int n = 4; n <= 8; ++n) {
    stars.push_back(standard_dn(n));
    stars.push_back(standard_dtilde(n));
  }
  for (auto arms : std::vector<std::vector<int>>{
           {2, 3, 3}, {2, 3, 4}, {2, 3, 5}, {3, 3, 3}, {2, 4, 4}, {2, 3, 6}})
    stars.push_back(standard_star(arms));
  for (const Poset& p : stars) {
    QuadraticForm f = form_of_poset(p);
    DynkinWitness w = closed_form_dynkin(p);
    RatVec g = gradient(f, w.vector);
    for (int j = 0; j < f.n; ++j)
      if (j != w.pivot) CHECK(g[j] == 0);
    CHECK(g[w.pivot] == w.pivot_gradient);
    CHECK(w.vector == primitive_integer(w.vector));
    GammaKind kind = gamma_class(p).kind;
    bool extended = kind == GammaKind::ExtendedD || kind == GammaKind::ExtendedE6 ||
                    kind == GammaKind::ExtendedE7 || kind == GammaKind::ExtendedE8;
    CHECK((extended ? w.pivot_gradient == 0 : w.pivot_gradient > 0));
    // search at the same pivot agrees up to sign
    DynkinSearch s = dynkin_vector(f, w.pivot);
    REQUIRE(s.witness.has_value());
    if (s.exhaustive) CHECK(same_ray(s.witness->vector, w.vector));
    if (!extended) {
      ConeWitness c = dynkin_to_c(f, w);
      CHECK(verify_witness(f, c));
    }
  }
  CHECK_THROWS_AS(closed_form_dynkin(chain(4)), WrongShape);
}

TEST_CASE("dynkin terminal points survive reorientation") {
  for (int n = 2; n <= 5; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      StructureReport rep = structure(p);
      if (rep.cyclic || !rep.connected) continue;
      QuadraticForm f = form_of_poset(p);
      for (int m : rep.terminal_points) {
        DynkinSearch base = dynkin_vector(f, m);
        if (!base.exhaustive) continue;
        for (auto [a, b] : hasse(p).quiver.arrows) {
          try {
            Poset q = reorient(p, a, b);
            DynkinSearch moved = dynkin_vector(form_of_poset(q), m);
            if (moved.exhaustive)
              CHECK(base.witness.has_value() == moved.witness.has_value());
          } catch (const InvalidArrow&) {
          }
        }
      }
    }
}

TEST_CASE("isolated pivot is rejected") {
  QuadraticForm f = form_of_poset(antichain(2));
  DynkinWitness w{{Rat(0), Rat(1)}, 1, Rat(2)};
  CHECK_THROWS_AS(dynkin_to_c(f, w), IsolatedPivot);
}

TEST_CASE("embedded-pattern witnesses") {
  Poset v = family_V();
  ConeWitness wv = lemma9_witness(v, {0, 1, 2, 3});
  CHECK(verify_witness(form_of_poset(v), wv));

  for (int k = 2; k <= 4; ++k) {
    Poset w = crown(k);
    std::vector<int> id(w.n());
    for (int i = 0; i < w.n(); ++i) id[i] = i;
    ConeWitness ww = lemma10_witness(w, id);
    CHECK(verify_witness(form_of_poset(w), ww));
  }

  Poset fe = fence(2, 3);
  ConeWitness wf = lemma11_witness(fe, {0, 1, 2, 3, 4});
  CHECK(verify_witness(form_of_poset(fe), wf));
  CHECK(same_ray(wf.vector, {Rat(-2), Rat(-2), Rat(1), Rat(2), Rat(1)}));

  Poset fd = fence(3, 2);
  std::vector<int> idd{0, 1, 2, 3, 4};
  ConeWitness wd = lemma11_witness(fd, idd);
  CHECK(verify_witness(form_of_poset(fd), wd));
}
