#include <doctest.h>

#include "plifs/build.hpp"
#include "plifs/engine.hpp"
#include "plifs/errors.hpp"

#include "oracles.hpp"

using namespace plifs;

namespace {
const Ambient kCircle = Ambient::circle();

IFSystem triadic() {
  return make_triadic_pair(Arc(Rational(1, 4), Rational(3, 4)),
                           Arc(Rational(1, 8), Rational(7, 8)), kCircle);
}
ArcSet iprime_set() { return ArcSet::single(kCircle, Arc(Rational(1, 4), Rational(3, 4))); }
} // namespace

TEST_CASE("step of the triadic pair") {
  ArcSet next = step(triadic(), iprime_set());
  REQUIRE(next.size() == 2);
  CHECK(next.arcs()[0] == Arc(Rational(1, 4), Rational(5, 12)));
  CHECK(next.arcs()[1] == Arc(Rational(7, 12), Rational(3, 4)));
}

TEST_CASE("step of an identity-only system") {
  IFSystem ident(kCircle, {{"id", PLMap::identity(kCircle)}});
  testor::Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    ArcSet a = rng.arcset(kCircle);
    CHECK(step(ident, a) == a);
  }
}

TEST_CASE("step of the three-branch system subdivides into fifths") {
  IFSystem fgh = make_three_branch(Arc(Rational(1, 4), Rational(3, 4)),
                                   Arc(Rational(1, 8), Rational(7, 8)), kCircle);
  ArcSet next = step(fgh, iprime_set());
  REQUIRE(next.size() == 3);
  CHECK(next.arcs()[0] == Arc(Rational(1, 4), Rational(7, 20)));
  CHECK(next.arcs()[1] == Arc(Rational(9, 20), Rational(11, 20)));
  CHECK(next.arcs()[2] == Arc(Rational(13, 20), Rational(3, 4)));
}

TEST_CASE("iterate at depth 0 echoes the seed") {
  IterationTrace tr = iterate(triadic(), iprime_set(), 0);
  REQUIRE(tr.levels.size() == 1);
  CHECK(tr.levels[0] == iprime_set());
}

TEST_CASE("triadic level 3 has 8 arcs of length 1/54") {
  IterationTrace tr = iterate(triadic(), iprime_set(), 3);
  const ArcSet &l3 = tr.levels[3];
  REQUIRE(l3.size() == 8);
  for (const auto &a : l3.arcs()) CHECK(a.length() == Rational(1, 54));
}

TEST_CASE("three-branch level 2 has 9 arcs of total length |I'|(3/5)^2") {
  IFSystem fgh = make_three_branch(Arc(Rational(1, 4), Rational(3, 4)),
                                   Arc(Rational(1, 8), Rational(7, 8)), kCircle);
  IterationTrace tr = iterate(fgh, iprime_set(), 2);
  CHECK(tr.levels[2].size() == 9);
  CHECK(tr.levels[2].total_length() == Rational(1, 2) * Rational(9, 25));
}

TEST_CASE("nestedness and exact hausdorff decay of the triadic trace") {
  IterationTrace tr = iterate(triadic(), iprime_set(), 7);
  for (int k = 0; k + 1 <= 7; ++k) {
    CHECK(subset_of(tr.levels[k + 1], tr.levels[k]));
    // farthest point of level k from level k+1 is a removed middle-third
    // midpoint: d_H = |I'| * 3^-(k+1) / 2
    Rational d = hausdorff_distance(tr.levels[k], tr.levels[k + 1]);
    CHECK(d == Rational(1, 2) * Rational(3).pow(-(k + 1)) / Rational(2));
  }
  for (int k = 0; k + 2 <= 7; ++k)
    CHECK(hausdorff_distance(tr.levels[k + 1], tr.levels[k + 2]) <
          hausdorff_distance(tr.levels[k], tr.levels[k + 1]));
}

TEST_CASE("iterate reports overflow and keeps the partial trace") {
  EngineLimits tight;
  tight.max_arcs = 4;
  IterationTrace tr = iterate(triadic(), iprime_set(), 8, tight);
  CHECK(tr.overflow);
  CHECK(tr.levels.size() == 3); // 1, 2, 4 arcs fit; 8 would not
}

TEST_CASE("brute-force word union equals iterate") {
  IFSystem fgh = make_three_branch(Arc(Rational(1, 4), Rational(3, 4)),
                                   Arc(Rational(1, 8), Rational(7, 8)), kCircle);
  IterationTrace tr = iterate(fgh, iprime_set(), 4);
  for (int k = 0; k <= 4; ++k) CHECK(tr.levels[k] == brute_force_level(fgh, iprime_set(), k));
}

TEST_CASE("orbit of length zero is the start point") {
  Orbit o = orbit_closure(triadic(), Rational(1, 3), 0);
  REQUIRE(o.points.size() == 1);
  CHECK(o.points[0] == Rational(1, 3));
}

TEST_CASE("triadic orbit of 1/4 collapses fixed-endpoint words") {
  Orbit o = orbit_closure(triadic(), Rational(1, 4), 2);
  // f(1/4) = 1/4, so strictly fewer than 1 + 2 + 4 points
  REQUIRE(o.points.size() == 4);
  CHECK(o.points[0] == Rational(1, 4));
  CHECK(o.points[1] == Rational(13, 36)); // f(g(1/4))
  CHECK(o.points[2] == Rational(7, 12));  // g(1/4)
  CHECK(o.points[3] == Rational(25, 36)); // g(g(1/4))
}

TEST_CASE("T-pair iterates pull toward the fixed endpoint") {
  IFSystem tp = make_T_pair(Arc(Rational(1, 4), Rational(3, 4)),
                            Arc(Rational(3, 16), Rational(13, 16)), kCircle);
  const PLMap &tminus = tp.generators()[0].map;
  Rational x(3, 4);
  Rational prev = x;
  for (int n = 1; n <= 8; ++n) {
    x = tminus.eval(x);
    CHECK(x < prev); // monotone decay toward a = 1/4
    prev = x;
  }
  CHECK(x == Rational(1, 4) + Rational(3, 4).pow(8) * Rational(1, 2));
  CHECK(x - Rational(1, 4) <= Rational(1, 10));
}

TEST_CASE("forward invariance") {
  IFSystem tri = triadic();
  IterationTrace tr = iterate(tri, iprime_set(), 5);
  for (int k = 0; k <= 5; ++k) CHECK(check_forward_invariance(tri, tr.levels[k]));
  CHECK(check_forward_invariance(tri, ArcSet::full(kCircle)));
  // only the left branch is not invariant: g maps it to the right
  CHECK(!check_forward_invariance(
      tri, ArcSet::single(kCircle, Arc(Rational(1, 4), Rational(5, 12)))));
}

TEST_CASE("backward property") {
  IFSystem tri = triadic();
  IterationTrace tr = iterate(tri, iprime_set(), 6);
  Arc window(Rational(1, 4), Rational(3, 4));
  // level-consistent backward property: pulled-back level-k sets stay
  // inside level k-1 within the window
  for (int k = 1; k <= 6; ++k)
    CHECK(check_backward_property(tri, tr.levels[k], window, tr.levels[k - 1]));
  CHECK(check_backward_property(tri, ArcSet::full(kCircle), window));
  // the right branch alone fails: g pulls it back over all of I'
  ArcSet right = ArcSet::single(kCircle, Arc(Rational(7, 12), Rational(3, 4)));
  CHECK(!check_backward_property(tri, right, window));
}

TEST_CASE("density checks") {
  IFSystem tri = triadic();
  // any target containing the start point is trivially 0-dense
  CHECK(check_density(tri, Rational(1, 2),
                      ArcSet::single(kCircle, Arc(Rational(1, 2), Rational(1, 2))),
                      Rational(1, 100), 0));
  IterationTrace tr = iterate(tri, iprime_set(), 6);
  // from the central gap the orbit reaches every level-6 cell
  CHECK(check_density(tri, Rational(1, 2), tr.levels[6], Rational(1, 100), 12));
  // eps must be positive
  CHECK_THROWS_AS(check_density(tri, Rational(1, 2), tr.levels[6], Rational(0), 2), Error);
}

TEST_CASE("density cap fails loudly") {
  IFSystem tp = make_T_pair(Arc(Rational(1, 4), Rational(3, 4)),
                            Arc(Rational(3, 16), Rational(13, 16)), kCircle);
  EngineLimits tight;
  tight.max_orbit_points = 10;
  CHECK_THROWS_AS(check_density(tp, Rational(1, 2), iprime_set(), Rational(1, 1000), 16, tight),
                  Error);
}

TEST_CASE("orbit word-count sanity") {
  IFSystem tri = triadic();
  Orbit o = orbit_closure(tri, Rational(1, 2), 6);
  long bound = 0, power = 1;
  for (int j = 0; j <= 6; ++j) {
    bound += power;
    power *= 2;
  }
  CHECK(static_cast<long>(o.points.size()) <= bound);
}

TEST_CASE("ambient mismatch is rejected") {
  IFSystem tri = triadic();
  ArcSet wrong = ArcSet::single(Ambient::interval(0, 1), Arc(Rational(1, 4), Rational(1, 2)));
  CHECK_THROWS_AS(step(tri, wrong), Error);
  CHECK_THROWS_AS(orbit_closure(IFSystem(Ambient::interval(0, 1),
                                         {{"id", PLMap::identity(Ambient::interval(0, 1))}}),
                                Rational(3, 2), 2),
                  Error);
}
