#include <doctest.h>

#include "plifs/build.hpp"
#include "plifs/errors.hpp"
#include "plifs/json_io.hpp"

using namespace plifs;

namespace {
const Ambient kCircle = Ambient::circle();
const Arc kIprime(Rational(1, 4), Rational(3, 4));
const Arc kIsupp(Rational(1, 8), Rational(7, 8));

ArcSet single(const Arc &a) { return ArcSet::single(kCircle, a); }
} // namespace

TEST_CASE("triadic pair endpoints and identity region") {
  IFSystem pair = make_triadic_pair(kIprime, kIsupp, kCircle);
  const PLMap &f = pair.generators()[0].map, &g = pair.generators()[1].map;
  CHECK(f.eval(Rational(3, 4)) == Rational(5, 12));
  CHECK(f.eval(Rational(1, 4)) == Rational(1, 4));
  CHECK(g.eval(Rational(3, 4)) == Rational(3, 4));
  CHECK(f.eval(Rational(15, 16)) == Rational(15, 16));
  CHECK(g.eval(Rational(15, 16)) == Rational(15, 16));
  CHECK(f.has_fixed_point());
  CHECK_THROWS_AS(make_triadic_pair(kIprime, kIprime, kCircle), Error);
}

TEST_CASE("three-branch gaps at canonical coordinates") {
  Arc gap0, gap1;
  IFSystem fgh = make_three_branch(kIprime, kIsupp, kCircle, &gap0, &gap1);
  CHECK(gap0 == Arc(Rational(7, 20), Rational(9, 20)));
  CHECK(gap1 == Arc(Rational(11, 20), Rational(13, 20)));
  const PLMap &f = fgh.generators()[0].map, &g = fgh.generators()[1].map,
              &h = fgh.generators()[2].map;
  CHECK(f.eval(Rational(1, 4)) == Rational(1, 4));
  CHECK(h.eval(Rational(3, 4)) == Rational(3, 4));
  CHECK(image_arcset(g, single(kIprime)) == single(Arc(Rational(9, 20), Rational(11, 20))));
}

TEST_CASE("T pair covers its interval") {
  IFSystem tp = make_T_pair(kIprime, Arc(Rational(3, 16), Rational(13, 16)), kCircle);
  const PLMap &tminus = tp.generators()[0].map, &tplus = tp.generators()[1].map;
  CHECK(image_arcset(tminus, single(kIprime)) == single(Arc(Rational(1, 4), Rational(5, 8))));
  CHECK(image_arcset(tplus, single(kIprime)) == single(Arc(Rational(3, 8), Rational(3, 4))));
  CHECK(tminus.eval(Rational(1, 4)) == Rational(1, 4));
  CHECK(set_union(image_arcset(tminus, single(kIprime)), image_arcset(tplus, single(kIprime))) ==
        single(kIprime));
  // ratios below 1/2 cannot cover
  CHECK_THROWS_AS(make_T_pair(kIprime, kIsupp, kCircle, Rational(1, 3)), Error);
}

TEST_CASE("contracting triple pair satisfies the chain inclusions") {
  Arc ihat(Rational(1, 10), Rational(9, 10));
  Arc m1(Rational(1, 8), Rational(3, 8)), m0(Rational(7, 16), Rational(9, 16)),
      p1(Rational(5, 8), Rational(7, 8));
  Ambient unit = Ambient::interval(0, 1);
  IFSystem pair =
      make_contracting_triple_pair(ihat, Arc(Rational(0), Rational(1)), {m1, m0, p1},
                                   Rational(1, 2), unit);
  const PLMap &f = pair.generators()[0].map, &g = pair.generators()[1].map;
  ArcSet s_m1 = ArcSet::single(unit, m1), s_m0 = ArcSet::single(unit, m0),
         s_p1 = ArcSet::single(unit, p1);
  CHECK(subset_of(image_arcset(f, s_m1), s_m1));
  CHECK(subset_of(image_arcset(f, s_m0), s_m1));
  CHECK(subset_of(image_arcset(g, s_p1), s_p1));
  CHECK(subset_of(image_arcset(g, s_m0), s_p1));
  CHECK(subset_of(image_arcset(g, s_m1), s_m0));
  // strict interiors: the images stay away from the target endpoints
  ArcSet f_m0 = image_arcset(f, s_m0);
  CHECK(m1.lo < f_m0.arcs()[0].lo);
  CHECK(f_m0.arcs()[0].hi < m1.hi);
  ArcSet f_p1 = image_arcset(f, s_p1);
  CHECK(subset_of(f_p1, s_m0));
  CHECK(m0.lo < f_p1.arcs()[0].lo);
  CHECK(f_p1.arcs()[0].hi < m0.hi);
  // slope audit over the three arcs: everything contracted below 1/2
  for (const Arc *a : {&m1, &m0, &p1}) {
    for (const PLMap *m : {&f, &g}) {
      Rational rise = m->eval(a->hi) - m->eval(a->lo);
      CHECK(rise / a->length() < Rational(1, 2));
    }
  }
  // the f and g images inside int(I_0) stay disjoint (mirror construction)
  CHECK(arc_gap(unit, f_p1.arcs()[0], image_arcset(g, s_m1).arcs()[0]) > Rational(0));
  CHECK(f.eval(Rational(0)) == Rational(0));
  CHECK(f.eval(Rational(1)) == Rational(1));
  CHECK_THROWS_AS(make_contracting_triple_pair(ihat, Arc(Rational(0), Rational(1)),
                                               {m1, m0, p1}, Rational(2), unit),
                  Error);
  // asymmetric data is rejected
  CHECK_THROWS_AS(make_contracting_triple_pair(ihat, Arc(Rational(0), Rational(1)),
                                               {m1, m0, Arc(Rational(5, 8), Rational(3, 4))},
                                               Rational(1, 2), unit),
                  Error);
}

TEST_CASE("contracting pair has a Cantor-evidence trace") {
  Arc ihat(Rational(1, 10), Rational(9, 10));
  Arc m1(Rational(1, 8), Rational(3, 8)), m0(Rational(7, 16), Rational(9, 16)),
      p1(Rational(5, 8), Rational(7, 8));
  IFSystem pair = make_contracting_triple_pair(ihat, Arc(Rational(1, 64), Rational(63, 64)),
                                               {m1, m0, p1}, Rational(1, 2), kCircle);
  ArcSet seed = canonicalize(kCircle, {m1, m0, p1});
  IterationTrace tr = iterate(pair, seed, 6);
  for (int k = 0; k < 6; ++k) CHECK(subset_of(tr.levels[k + 1], tr.levels[k]));
  // backward property within the window I-hat, level-consistent form
  for (int k = 1; k <= 6; ++k)
    CHECK(check_backward_property(pair, tr.levels[k], ihat, tr.levels[k - 1]));
  // orbits of interior gap points accumulate on the trace
  Rational gap_pt = Rational(3, 8) + Rational(1, 32);
  CHECK(check_density(pair, gap_pt, tr.levels[5], Rational(1, 100), 10));
  Decomposition d = decompose(tr);
  CHECK(d.interior.empty_set());
  CHECK(d.exp_growth);
}

TEST_CASE("h squeezes the complement of J into I") {
  Arc J(Rational(29, 32), Rational(31, 32)), Jp(Rational(117, 128), Rational(119, 128));
  Arc target(Rational(11, 24), Rational(13, 24));
  PLMap h = make_h(Jp, J, target, kCircle);
  CHECK(h.eval(Rational(118, 128)) == Rational(118, 128)); // identity on J'
  // midpoint of the complement of J lands in I
  Rational mid = (Rational(31, 32) + Rational(29, 32) + 1) / Rational(2); // lift midpoint
  CHECK(target.lo < h.eval(mid));
  CHECK(h.eval(mid) < target.hi);
  // degree-1 lift: the normalized breakpoints advance by exactly one
  CHECK(h.breakpoints().back().y - h.breakpoints().front().y == Rational(1));
  CHECK(h.has_fixed_point());
  // the whole complement maps into the closure of I
  ArcSet comp = set_complement(ArcSet::single(kCircle, J));
  CHECK(subset_of(image_arcset(h, comp), ArcSet::single(kCircle, target)));
  CHECK_THROWS_AS(make_h(Jp, J, Arc(Rational(15, 16), Rational(63, 64)), kCircle), Error);
}

TEST_CASE("push map canonical iterates") {
  Ambient unit = Ambient::interval(0, 1);
  PLMap phi = make_push_map(Arc(Rational(0), Rational(1)), Sink::hi, unit);
  CHECK(phi.eval(Rational(0)) == Rational(0));
  CHECK(phi.eval(Rational(1)) == Rational(1));
  Rational x(1, 16);
  for (int i = 0; i < 4; ++i) x = phi.eval(x);
  CHECK(x == Rational(1) - Rational(15, 256));
  for (long i = 1; i < 16; ++i)
    CHECK(phi.eval(Rational(i, 16)) > Rational(i, 16)); // strictly toward the sink
  PLMap back = make_push_map(Arc(Rational(1, 4), Rational(3, 4)), Sink::lo, kCircle);
  CHECK(back.eval(Rational(1, 4)) == Rational(1, 4));
  CHECK(back.eval(Rational(3, 4)) == Rational(3, 4));
  CHECK(back.eval(Rational(1, 2)) < Rational(1, 2));
  CHECK(back.eval(Rational(7, 8)) == Rational(7, 8));
}

TEST_CASE("bundles carry the declared shapes") {
  const int gens[8] = {0, 2, 4, 5, 6, 5, 4, 5};
  const ClassLabel classes[8] = {ClassLabel::Finite,
                                 ClassLabel::Cantor,
                                 ClassLabel::WholeSpace,
                                 ClassLabel::InteriorPlusCantorPlusN_boundaryMeetsN,
                                 ClassLabel::InteriorPlusCantorPlusN_boundaryMeetsN,
                                 ClassLabel::InteriorPlusN,
                                 ClassLabel::InteriorPlusN,
                                 ClassLabel::InteriorPlusCantor_Cantorval};
  for (int n = 1; n <= 7; ++n) {
    ExampleBundle b = build_example(n);
    CHECK(b.ifs.size() == gens[n]);
    CHECK(b.declared == classes[n]);
    for (const auto &g : b.ifs.generators()) CHECK(g.map.has_fixed_point());
    CHECK(!b.seed.empty_set());
    // traces are monotone: either contracting into the seed or growing over it
    ArcSet next = step(b.ifs, b.seed);
    CHECK((subset_of(b.seed, next) || subset_of(next, b.seed)));
  }
  ExampleBundle fin = build_example(1, true);
  CHECK(fin.ifs.size() == 1);
  CHECK(fin.declared == ClassLabel::Finite);
}

TEST_CASE("example 2 containments hold exactly") {
  ExampleBundle b = build_example(2);
  const PLMap &h1 = b.ifs.generators()[2].map, &h2 = b.ifs.generators()[3].map;
  Arc J(Rational(7, 16), Rational(9, 16));
  ArcSet outside = set_complement(single(kIprime));
  CHECK(subset_of(outside, image_arcset(h1, single(J))));
  CHECK(subset_of(image_arcset(h2, outside), single(J)));
}

TEST_CASE("example 4 wiring: the push chain clears its T support") {
  ExampleBundle b = build_example(4);
  const PLMap &phi = b.ifs.generators()[2].map;
  Arc I1(b.constants[2].second, b.constants[3].second);
  Arc I1hat(b.constants[4].second, b.constants[5].second);
  ArcSet chain = ArcSet::single(kCircle, I1);
  for (int n = 1; n <= 6; ++n) {
    chain = image_arcset(phi, chain);
    CHECK(arc_gap(kCircle, chain.arcs()[0], I1) > Rational(0));
  }
  // phi(I1) clears even the closure of the T support
  ArcSet first = image_arcset(phi, ArcSet::single(kCircle, I1));
  CHECK(arc_gap(kCircle, first.arcs()[0], I1hat) > Rational(0));
  // phi^n(I1) -> b
  Rational b_pt = b.n_witnesses[0];
  Rational gap_prev = b_pt - image_arcset(phi, ArcSet::single(kCircle, I1)).arcs()[0].hi;
  ArcSet cur = image_arcset(phi, ArcSet::single(kCircle, I1));
  for (int n = 2; n <= 8; ++n) {
    cur = image_arcset(phi, cur);
    Rational gap = b_pt - cur.arcs()[0].hi;
    CHECK(gap < gap_prev);
    CHECK(gap > Rational(0));
    gap_prev = gap;
  }
}

TEST_CASE("example 5 intertwines H with the push chain") {
  ExampleBundle b = build_example(5);
  const PLMap &H = b.ifs.generators()[2].map, &psi = b.ifs.generators()[3].map;
  Arc I(Rational(0), Rational(1, 16)), I0(Rational(1, 8), Rational(9, 64));
  CHECK(image_arcset(H, ArcSet::single(kCircle, I0)) == ArcSet::single(kCircle, I));
  ArcSet psiI0 = image_arcset(psi, ArcSet::single(kCircle, I0));
  // H carries I and every psi^n(I0), n >= 1, into psi(I0)
  CHECK(subset_of(image_arcset(H, ArcSet::single(kCircle, I)), psiI0));
  ArcSet cur = psiI0;
  for (int n = 1; n <= 6; ++n) {
    CHECK(subset_of(image_arcset(H, cur), psiI0));
    cur = image_arcset(psi, cur);
  }
}

TEST_CASE("example 6 chain accumulates at the marked point") {
  ExampleBundle b = build_example(6);
  IterationTrace tr = iterate(b.ifs, b.seed, 8);
  Rational w = b.n_witnesses[0];
  Rational prev(1);
  for (int k = 4; k <= 8; ++k) {
    Rational d = point_to_set_distance(w, tr.levels[k]);
    CHECK(d > Rational(0));
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("example 7 constants and covering condition") {
  ExampleBundle b = build_example(7);
  Example7Constants k = example7_constants(kIprime);
  CHECK(k.a == Rational(1, 4));
  CHECK(k.c == Rational(7, 20));
  CHECK(k.d == Rational(9, 20));
  CHECK(k.b == Rational(11, 20));
  CHECK(k.x0 == Rational(27, 100));
  CHECK(k.y0 == Rational(53, 100));
  const PLMap &tplus = b.ifs.generators()[3].map, &tminus = b.ifs.generators()[4].map;
  // T+ is the identity at a and outside [a,d]
  CHECK(tplus.eval(k.a) == k.a);
  CHECK(tplus.eval(Rational(1, 8)) == Rational(1, 8));
  CHECK(tplus.eval(Rational(7, 10)) == Rational(7, 10));
  CHECK(tplus.eval(k.d) == k.d);
  // psi part maps [a,x0] onto [a,c]
  CHECK(tplus.eval(k.x0) == k.c);
  // r1 feeds [c,d]
  ArcSet r1_img = image_arcset(tplus, ArcSet::single(kCircle, Arc(k.x0, k.c)));
  CHECK(subset_of(r1_img, ArcSet::single(kCircle, Arc(k.c, k.d))));
  // covering: T+([c,d]) u T-([c,d]) = [c,d]
  ArcSet i0 = ArcSet::single(kCircle, Arc(k.c, k.d));
  CHECK(set_union(image_arcset(tplus, i0), image_arcset(tminus, i0)) == i0);
  // the matched structure sends K cap [a,x0] gap endpoints into K cap [a,c]
  CHECK(tminus.eval(k.y0) == k.d);
  CHECK(tminus.eval(k.b) == k.b);
}

TEST_CASE("4.1 properties for the triadic pair: backward window and gap density") {
  ExampleBundle b = build_example(1);
  IterationTrace tr = iterate(b.ifs, b.seed, 6);
  for (int kk = 1; kk <= 6; ++kk)
    CHECK(check_backward_property(b.ifs, tr.levels[kk], kIprime, tr.levels[kk - 1]));
  CHECK(check_density(b.ifs, Rational(1, 2), tr.levels[6], Rational(1, 100), 12));
}

TEST_CASE("a finite union of pushed intervals is its own minimal approximation") {
  // two generators each fixing one interval setwise and the identity
  // elsewhere: the trace never moves off the union
  Arc i1(Rational(1, 8), Rational(1, 4)), i2(Rational(1, 2), Rational(5, 8));
  IFSystem ifs(kCircle, {{"p1", make_push_map(i1, Sink::hi, kCircle)},
                         {"p2", make_push_map(i2, Sink::lo, kCircle)}});
  ArcSet seed = canonicalize(kCircle, {i1, i2});
  IterationTrace tr = iterate(ifs, seed, 5);
  for (const auto &level : tr.levels) CHECK(level == seed);
}

TEST_CASE("gap matcher base case and starvation") {
  GapData tri = triadic_gap_data(kIprime, 5);
  PsiMap psi0 = gap_matching_homeomorphism(tri, tri, 0);
  CHECK(psi0.pts.size() == 4); // host corners + the single matched gap
  CHECK(psi0.matches.size() == 1);
  // data with no secondary family starves at level 1
  GapData primary_only = tri;
  for (auto &g : primary_only.gaps) g.family = GapFamily::primary;
  CHECK_THROWS_AS(gap_matching_homeomorphism(primary_only, primary_only, 1), Error);
}

TEST_CASE("psi of the matcher evaluates monotonically") {
  Example7Constants k = example7_constants(kIprime);
  GapData data = three_branch_gap_data(kIprime, 7);
  PsiMap psi = gap_matching_homeomorphism(restrict_gap_data(data, Arc(k.a, k.x0)),
                                    restrict_gap_data(data, Arc(k.a, k.c)), 4);
  CHECK(psi.eval(k.a) == k.a);
  CHECK(psi.eval(k.x0) == k.c);
  Rational prev = psi.eval(k.a);
  for (long i = 1; i <= 20; ++i) {
    Rational x = k.a + (k.x0 - k.a) * Rational(i, 20);
    Rational y = psi.eval(x);
    CHECK(prev < y);
    prev = y;
  }
  CHECK_THROWS_AS(psi.eval(k.b), Error);
}

TEST_CASE("rotation conjugation preserves the classification") {
  ExampleBundle b = build_example(1);
  ExampleBundle rot = rotate_bundle(b, Rational(3, 7));
  Decomposition d = decompose(iterate(rot.ifs, rot.seed, 6));
  CHECK(classify(d, rot.meta()).label == ClassLabel::Cantor);
  // the rotated seed wraps across 0 for this offset
  ExampleBundle rot2 = rotate_bundle(b, Rational(5, 8));
  CHECK(rot2.seed.arcs()[0].wraps);
  Decomposition d2 = decompose(iterate(rot2.ifs, rot2.seed, 6));
  CHECK(classify(d2, rot2.meta()).label == ClassLabel::Cantor);
}

TEST_CASE("bundle json mentions the generators and class") {
  std::string j = bundle_to_json(build_example(3));
  CHECK(j.find("\"fK\"") != std::string::npos);
  CHECK(j.find("\"Tplus\"") != std::string::npos);
  CHECK(j.find("InteriorPlusCantorPlusN_boundaryMeetsN") != std::string::npos);
}
