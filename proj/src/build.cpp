#include "plifs/build.hpp"

#include <algorithm>
#include <deque>

#include "plifs/errors.hpp"

namespace plifs {

namespace {

Rational half(const Rational &x) { return x / Rational(2); }

void require_inside_ambient(const Arc &a, const Ambient &amb, const char *what) {
  if (a.wraps) fail(Errc::invalid_geometry, std::string(what) + " must not wrap");
  Rational lo = amb.is_circle() ? Rational(0) : amb.lo;
  Rational hi = amb.is_circle() ? Rational(1) : amb.hi;
  if (a.lo < lo || hi < a.hi || !(a.lo < a.hi))
    fail(Errc::invalid_geometry, std::string(what) + " outside ambient or trivial");
}

void require_strict_nesting(const Arc &inner, const Arc &outer, const char *what) {
  if (!(outer.lo < inner.lo) || !(inner.hi < outer.hi))
    fail(Errc::invalid_geometry, std::string(what) + " must be strictly inside its support");
}

// identity outside the span of the given pieces
PLMap support_map(const Ambient &amb, std::vector<Breakpoint> pieces) {
  Rational lo = amb.is_circle() ? Rational(0) : amb.lo;
  Rational hi = amb.is_circle() ? Rational(1) : amb.hi;
  std::vector<Breakpoint> pts;
  if (pieces.front().x != lo) pts.push_back({lo, lo});
  pts.insert(pts.end(), pieces.begin(), pieces.end());
  if (pieces.back().x != hi) pts.push_back({hi, hi});
  return PLMap::from_breakpoints(std::move(pts), amb);
}

} // namespace

IFSystem make_triadic_pair(const Arc &I_prime, const Arc &I, const Ambient &amb) {
  require_inside_ambient(I, amb, "I");
  require_inside_ambient(I_prime, amb, "I'");
  require_strict_nesting(I_prime, I, "I'");
  const Rational &a = I_prime.lo, &b = I_prime.hi;
  const Rational &A = I.lo, &B = I.hi;
  Rational third = (b - a) / Rational(3);
  PLMap f = support_map(amb, {{A, A}, {a, a}, {b, a + third}, {B, B}});
  PLMap g = support_map(amb, {{A, A}, {a, b - third}, {b, b}, {B, B}});
  return IFSystem(amb, {{"f", f}, {"g", g}});
}

IFSystem make_three_branch(const Arc &I_prime, const Arc &I, const Ambient &amb, Arc *gap0,
                           Arc *gap1) {
  require_inside_ambient(I, amb, "I");
  require_inside_ambient(I_prime, amb, "I'");
  require_strict_nesting(I_prime, I, "I'");
  const Rational &a = I_prime.lo, &b = I_prime.hi;
  const Rational &A = I.lo, &B = I.hi;
  Rational L = (b - a) / Rational(5);
  PLMap f = support_map(amb, {{A, A}, {a, a}, {b, a + L}, {B, B}});
  PLMap g = support_map(amb, {{A, A}, {a, a + L * 2}, {b, a + L * 3}, {B, B}});
  PLMap h = support_map(amb, {{A, A}, {a, a + L * 4}, {b, b}, {B, B}});
  if (gap0) *gap0 = Arc(a + L, a + L * 2);
  if (gap1) *gap1 = Arc(a + L * 3, a + L * 4);
  return IFSystem(amb, {{"f", f}, {"g", g}, {"h", h}});
}

IFSystem make_contracting_triple_pair(const Arc &I_hat, const Arc &I,
                                      const std::array<Arc, 3> &sub,
                                      const Rational &lambda_bound, const Ambient &amb) {
  if (!(Rational(0) < lambda_bound) || !(lambda_bound < Rational(1)))
    fail(Errc::infeasible_slopes, "lambda bound must lie in (0,1)");
  require_inside_ambient(I, amb, "I");
  require_inside_ambient(I_hat, amb, "I-hat");
  if (I.lo > I_hat.lo || I_hat.hi > I.hi)
    fail(Errc::invalid_geometry, "I-hat must sit inside I");
  const Arc &m1 = sub[0], &m0 = sub[1], &p1 = sub[2];
  for (const Arc *s : {&m1, &m0, &p1}) require_inside_ambient(*s, amb, "sub-arc");
  if (!(I_hat.lo < m1.lo) || !(m1.hi < m0.lo) || !(m0.hi < p1.lo) || !(p1.hi < I_hat.hi))
    fail(Errc::invalid_geometry, "sub-arcs must be disjoint and ordered inside I-hat");
  if (!(I.lo < m1.lo) || !(p1.hi < I.hi))
    fail(Errc::invalid_geometry, "sub-arcs must leave room to the identity region");
  // the pair is built as an exact mirror couple, which keeps every level
  // of the iteration reflection-symmetric and the backward property exact;
  // the data must be symmetric about the center of I_0
  Rational M = half(m0.lo + m0.hi);
  auto mirrored = [&](const Rational &x, const Rational &y) { return x + y == M + M; };
  if (!mirrored(m1.lo, p1.hi) || !mirrored(m1.hi, p1.lo) || !mirrored(I_hat.lo, I_hat.hi) ||
      !mirrored(I.lo, I.hi))
    fail(Errc::invalid_geometry, "sub-arcs, I-hat and I must mirror about the center of I_0");

  const Rational &A = I.lo, &B = I.hi;
  Rational len1 = m1.length(), len0 = m0.length(), len3 = p1.length();
  Rational c1 = half(m1.lo + m1.hi);

  // f chains I_1 -> I_0 -> I_-1 -> I_-1; its image inside int(I_0) fills
  // only the left quarter zone, so the mirrored g-image stays disjoint
  Rational f_p1 = c1 - lambda_bound * len1 / Rational(4);
  Rational f_q1 = c1 + lambda_bound * len1 / Rational(4);
  Rational gap_f = m1.hi - f_q1;
  Rational w2 = half(min(lambda_bound * len0, gap_f));
  Rational t2 = f_q1 + half(gap_f);
  Rational w3 = half(min(lambda_bound * len3, len0 / Rational(4)));
  Rational c_left = M - len0 / Rational(4);
  Rational f_q3 = c_left + half(w3);
  // anchor: up to the edge of I-hat, f stays below the mirrored g-images,
  // so pulled-back levels windowed to I-hat never meet the g-territory
  Rational eps = half(half(len0) - w3);
  std::vector<Breakpoint> fp = {{A, A},
                                {m1.lo, f_p1},
                                {m1.hi, f_q1},
                                {m0.lo, t2 - half(w2)},
                                {m0.hi, t2 + half(w2)},
                                {p1.lo, c_left - half(w3)},
                                {p1.hi, f_q3},
                                {I_hat.hi, f_q3 + eps},
                                {B, B}};
  std::vector<Breakpoint> gp;
  for (auto it = fp.rbegin(); it != fp.rend(); ++it)
    gp.push_back({M + M - it->x, M + M - it->y});
  return IFSystem(amb, {{"f", support_map(amb, fp)}, {"g", support_map(amb, gp)}});
}

IFSystem make_T_pair(const Arc &I_prime, const Arc &I, const Ambient &amb,
                     const Rational &ratio) {
  require_inside_ambient(I, amb, "I");
  require_inside_ambient(I_prime, amb, "I'");
  require_strict_nesting(I_prime, I, "I'");
  if (ratio < Rational(1, 2) || !(ratio < Rational(1)))
    fail(Errc::invalid_geometry, "T-pair ratio must lie in [1/2,1) for the covering condition");
  const Rational &a = I_prime.lo, &b = I_prime.hi;
  const Rational &A = I.lo, &B = I.hi;
  Rational reach = ratio * (b - a);
  PLMap tminus = support_map(amb, {{A, A}, {a, a}, {b, a + reach}, {B, B}});
  PLMap tplus = support_map(amb, {{A, A}, {a, b - reach}, {b, b}, {B, B}});
  return IFSystem(amb, {{"Tminus", tminus}, {"Tplus", tplus}});
}

PLMap make_h(const Arc &J_prime, const Arc &J, const Arc &I, const Ambient &amb) {
  if (!amb.is_circle()) fail(Errc::invalid_geometry, "h is a circle construction");
  require_inside_ambient(J, amb, "J");
  require_inside_ambient(J_prime, amb, "J'");
  require_inside_ambient(I, amb, "I");
  require_strict_nesting(J_prime, J, "J'");
  Rational s, e;
  if (J.hi < I.lo) {
    s = I.lo;
    e = I.hi;
    if (!(e < J.lo + 1)) fail(Errc::invalid_geometry, "I touches J around the circle");
  } else if (I.hi < J.lo) {
    s = I.lo + 1;
    e = I.hi + 1;
  } else {
    fail(Errc::invalid_geometry, "J meets I");
  }
  std::vector<Breakpoint> pts = {{J.lo, e - 1},
                                 {J_prime.lo, J_prime.lo},
                                 {J_prime.hi, J_prime.hi},
                                 {J.hi, s},
                                 {J.lo + 1, e}};
  return PLMap::from_breakpoints(std::move(pts), amb);
}

PLMap make_push_map(const Arc &interval, Sink sink, const Ambient &amb) {
  require_inside_ambient(interval, amb, "push interval");
  const Rational &u = interval.lo, &v = interval.hi;
  Rational L = v - u;
  std::vector<Breakpoint> pieces;
  if (sink == Sink::hi)
    pieces = {{u, u}, {u + L / Rational(16), u + L * Rational(17, 32)}, {v, v}};
  else
    pieces = {{u, u}, {v - L / Rational(16), v - L * Rational(17, 32)}, {v, v}};
  return support_map(amb, std::move(pieces));
}

GapData triadic_gap_data(const Arc &I_prime, int depth) {
  GapData out;
  out.host = I_prime;
  struct Cell {
    Rational u, v;
    int level;
  };
  std::deque<Cell> cells{{I_prime.lo, I_prime.hi, 0}};
  while (!cells.empty()) {
    Cell c = cells.front();
    cells.pop_front();
    Rational third = (c.v - c.u) / Rational(3);
    out.gaps.push_back({Arc(c.u + third, c.v - third),
                        c.level % 2 == 0 ? GapFamily::primary : GapFamily::secondary});
    if (c.level + 1 <= depth) {
      cells.push_back({c.u, c.u + third, c.level + 1});
      cells.push_back({c.v - third, c.v, c.level + 1});
    }
  }
  return out;
}

GapData three_branch_gap_data(const Arc &I_prime, int depth) {
  GapData out;
  out.host = I_prime;
  struct Cell {
    Rational u, v;
    int level;
  };
  std::deque<Cell> cells{{I_prime.lo, I_prime.hi, 0}};
  while (!cells.empty()) {
    Cell c = cells.front();
    cells.pop_front();
    Rational L = (c.v - c.u) / Rational(5);
    out.gaps.push_back({Arc(c.u + L, c.u + L * 2), GapFamily::primary});
    out.gaps.push_back({Arc(c.u + L * 3, c.u + L * 4), GapFamily::secondary});
    if (c.level + 1 <= depth) {
      cells.push_back({c.u, c.u + L, c.level + 1});
      cells.push_back({c.u + L * 2, c.u + L * 3, c.level + 1});
      cells.push_back({c.u + L * 4, c.v, c.level + 1});
    }
  }
  return out;
}

GapData restrict_gap_data(const GapData &g, const Arc &host) {
  GapData out;
  out.host = host;
  for (const auto &t : g.gaps)
    if (host.lo < t.gap.lo && t.gap.hi < host.hi) out.gaps.push_back(t);
  return out;
}

Example7Constants example7_constants(const Arc &I_prime) {
  Example7Constants k;
  Rational L = I_prime.length() / Rational(5);
  k.a = I_prime.lo;
  k.c = k.a + L;
  k.d = k.a + L * 2;
  k.b = k.a + L * 3;
  k.x0 = k.a + L / Rational(5);              // f(c): K ∩ [a,x0] is Cantor
  k.y0 = k.a + L * Rational(14, 5);          // g(h(a)): K ∩ [y0,b] is Cantor
  k.e_plus = k.d - Rational(3, 4) * L;       // r2+ image end, covering with r2-
  k.e_minus = k.c + Rational(3, 4) * L;
  return k;
}

PLMap make_example7_T(bool plus, const Arc &I_prime, const Arc &I, const Ambient &amb,
                      int psi_depth) {
  require_inside_ambient(I, amb, "I");
  require_inside_ambient(I_prime, amb, "I'");
  require_strict_nesting(I_prime, I, "I'");
  Example7Constants k = example7_constants(I_prime);
  GapData data = three_branch_gap_data(I_prime, psi_depth + 3);
  std::vector<Breakpoint> pieces;
  if (plus) {
    PsiMap psi = gap_matching_homeomorphism(restrict_gap_data(data, Arc(k.a, k.x0)),
                                      restrict_gap_data(data, Arc(k.a, k.c)), psi_depth);
    pieces = psi.pts;                // (a,a) ... (x0, c)
    pieces.push_back({k.c, k.e_plus}); // r1: [x0,c] -> [c, e+]
    pieces.push_back({k.d, k.d});      // r2: [c,d] -> [e+, d]
  } else {
    pieces.push_back({k.c, k.c});        // r2: [c,d] -> [c, e-]
    pieces.push_back({k.d, k.e_minus});  // r1: [d,y0] -> [e-, d]
    PsiMap psi = gap_matching_homeomorphism(restrict_gap_data(data, Arc(k.y0, k.b)),
                                      restrict_gap_data(data, Arc(k.d, k.b)), psi_depth);
    pieces.insert(pieces.end(), psi.pts.begin(), psi.pts.end()); // (y0,d) ... (b,b)
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Breakpoint &x, const Breakpoint &y) { return x.x < y.x; });
  return support_map(amb, std::move(pieces));
}

namespace {

ExampleBundle example1_finite() {
  Ambient amb = Ambient::circle();
  Arc iprime(Rational(1, 4), Rational(3, 4));
  PLMap f = make_push_map(iprime, Sink::hi, amb);
  ExampleBundle b(1, "example1-finite", IFSystem(amb, {{"f", f}}),
                  ArcSet::single(amb, Arc(Rational(3, 4), Rational(3, 4))), ClassLabel::Finite);
  b.density_points = {Rational(3, 4)};
  b.constants = {{"a", Rational(1, 4)}, {"b", Rational(3, 4)}};
  return b;
}

ExampleBundle example2() {
  Ambient amb = Ambient::circle();
  Arc iprime(Rational(1, 4), Rational(3, 4));
  Arc isupp(Rational(3, 16), Rational(13, 16));
  IFSystem tpair = make_T_pair(iprime, isupp, amb, Rational(1, 2));
  // H1 maps J = [7/16,9/16] over the closed complement of I'; fixed point 5/16
  PLMap h1 = PLMap::from_breakpoints({{Rational(0), Rational(115, 384)},
                                      {Rational(5, 16), Rational(5, 16)},
                                      {Rational(7, 16), Rational(23, 32)},
                                      {Rational(9, 16), Rational(41, 32)},
                                      {Rational(1), Rational(499, 384)}},
                                     amb),
        // H2 maps the complement of I' strictly into J; fixed point 5/8
      h2 = PLMap::from_breakpoints({{Rational(0), Rational(1, 2)},
                                    {Rational(1, 4), Rational(35, 64)},
                                    {Rational(5, 8), Rational(5, 8)},
                                    {Rational(3, 4), Rational(93, 64)},
                                    {Rational(1), Rational(3, 2)}},
                                   amb);
  std::vector<Generator> gens = tpair.generators();
  std::vector<Generator> ordered = {gens[1], gens[0], {"H1", h1}, {"H2", h2}};
  ExampleBundle b(2, "example2-whole-circle", IFSystem(amb, ordered),
                  ArcSet::single(amb, iprime), ClassLabel::WholeSpace);
  b.density_points = {Rational(1, 2), Rational(1, 4), Rational(3, 8), Rational(5, 8),
                      Rational(15, 16)};
  b.constants = {{"a", Rational(1, 4)},      {"b", Rational(3, 4)},
                 {"J.lo", Rational(7, 16)},  {"J.hi", Rational(9, 16)},
                 {"I.lo", Rational(3, 16)},  {"I.hi", Rational(13, 16)}};
  return b;
}

struct TriadicBase {
  IFSystem pair;
  Arc iprime;     // hull of K
  Arc middle_gap; // the central complementary component of K
};

TriadicBase triadic_base(const Ambient &amb) {
  Arc iprime(Rational(1, 4), Rational(3, 4));
  Arc isupp(Rational(1, 8), Rational(7, 8));
  IFSystem pair = make_triadic_pair(iprime, isupp, amb);
  Rational third = iprime.length() / Rational(3);
  return {pair, iprime, Arc(iprime.lo + third, iprime.hi - third)};
}

ExampleBundle example3() {
  Ambient amb = Ambient::circle();
  TriadicBase base = triadic_base(amb);
  Arc gap = base.middle_gap; // [5/12, 7/12]
  Rational quarter = gap.length() / Rational(4);
  Arc iprime3(gap.lo + quarter, gap.hi - quarter); // [11/24, 13/24]
  IFSystem tpair = make_T_pair(iprime3, gap, amb);
  Arc J(Rational(29, 32), Rational(31, 32)), Jp(Rational(117, 128), Rational(119, 128));
  PLMap h = make_h(Jp, J, iprime3, amb);
  std::vector<Generator> gens = {{"fK", base.pair.generators()[0].map},
                                 {"gK", base.pair.generators()[1].map},
                                 {"h", h},
                                 tpair.generators()[1],
                                 tpair.generators()[0]};
  ExampleBundle b(3, "example3-cantor-plus-intervals", IFSystem(amb, gens),
                  ArcSet::single(amb, iprime3),
                  ClassLabel::InteriorPlusCantorPlusN_boundaryMeetsN);
  b.density_points = {Rational(1, 2)};
  b.n_witnesses = {}; // N = boundary of the interval copies
  b.interior_witness = ArcSet::single(amb, iprime3);
  b.constants = {{"Iprime.lo", iprime3.lo}, {"Iprime.hi", iprime3.hi},
                 {"gap.lo", gap.lo},        {"gap.hi", gap.hi},
                 {"J.lo", J.lo},            {"J.hi", J.hi}};
  return b;
}

ExampleBundle example4() {
  Ambient amb = Ambient::circle();
  TriadicBase base = triadic_base(amb);
  Arc gap = base.middle_gap;
  Rational quarter = gap.length() / Rational(4);
  Arc iprime4(gap.lo + quarter, gap.hi - quarter); // [a,b] = [11/24, 13/24]
  Rational L = iprime4.length();
  PLMap phi = make_push_map(iprime4, Sink::hi, amb);
  Arc I1(iprime4.lo + L / Rational(8), iprime4.lo + L / Rational(4));
  Arc I1hat(iprime4.lo + L / Rational(16), iprime4.lo + L * Rational(5, 16));
  IFSystem tpair = make_T_pair(I1, I1hat, amb);
  Arc J(Rational(29, 32), Rational(31, 32)), Jp(Rational(117, 128), Rational(119, 128));
  PLMap h = make_h(Jp, J, I1, amb);
  std::vector<Generator> gens = {{"fK", base.pair.generators()[0].map},
                                 {"gK", base.pair.generators()[1].map},
                                 {"phi", phi},
                                 {"h", h},
                                 tpair.generators()[1],
                                 tpair.generators()[0]};
  ExampleBundle b(4, "example4-witness-off-boundary", IFSystem(amb, gens),
                  ArcSet::single(amb, I1), ClassLabel::InteriorPlusCantorPlusN_boundaryMeetsN);
  b.density_points = {I1.lo + half(I1.length())};
  b.n_witnesses = {iprime4.hi}; // b, the accumulation point of phi^n(I1)
  b.interior_witness = ArcSet::single(amb, I1);
  b.constants = {{"a", iprime4.lo}, {"b", iprime4.hi}, {"I1.lo", I1.lo},
                 {"I1.hi", I1.hi},  {"I1hat.lo", I1hat.lo}, {"I1hat.hi", I1hat.hi}};
  return b;
}

ExampleBundle example5() {
  Ambient amb = Ambient::circle();
  PLMap psi = make_push_map(Arc(Rational(1, 16), Rational(1)), Sink::hi, amb);
  Arc I(Rational(0), Rational(1, 16));
  Arc I0(Rational(1, 8), Rational(9, 64));
  Arc I1(Rational(31, 256), Rational(37, 256));
  IFSystem tpair = make_T_pair(I0, I1, amb);
  Arc J(Rational(17, 256), Rational(25, 256)), Jp(Rational(19, 256), Rational(23, 256));
  PLMap h = make_h(Jp, J, I0, amb);
  // H stretches I0 exactly onto I and sends [9/16, 1] u I into psi(I0)
  PLMap H = PLMap::from_breakpoints({{Rational(0), Rational(289, 512)},
                                     {Rational(1, 16), Rational(145, 256)},
                                     {Rational(1, 8), Rational(1)},
                                     {Rational(9, 64), Rational(17, 16)},
                                     {Rational(9, 16), Rational(1601, 1024)},
                                     {Rational(1), Rational(801, 512)}},
                                    amb);
  std::vector<Generator> gens = {tpair.generators()[1], tpair.generators()[0],
                                 {"H", H},
                                 {"psi", psi},
                                 {"h", h}};
  ExampleBundle b(5, "example5-interval-union", IFSystem(amb, gens), ArcSet::single(amb, I0),
                  ClassLabel::InteriorPlusN);
  b.density_points = {I0.lo + half(I0.length())};
  b.interior_witness = canonicalize(amb, {I0, I});
  b.constants = {{"I.lo", I.lo},   {"I.hi", I.hi},   {"I0.lo", I0.lo},
                 {"I0.hi", I0.hi}, {"I1.lo", I1.lo}, {"I1.hi", I1.hi}};
  return b;
}

ExampleBundle example6() {
  Ambient amb = Ambient::circle();
  PLMap psi = make_push_map(Arc(Rational(0), Rational(1)), Sink::hi, amb);
  Arc I(Rational(1, 8), Rational(3, 16));
  Arc iprime(Rational(9, 64), Rational(11, 64));
  IFSystem tpair = make_T_pair(iprime, I, amb);
  Arc J(Rational(1, 4), Rational(3, 8)), Jp(Rational(9, 32), Rational(11, 32));
  PLMap h = make_h(Jp, J, iprime, amb);
  std::vector<Generator> gens = {{"psi", psi},
                                 {"h", h},
                                 tpair.generators()[1],
                                 tpair.generators()[0]};
  ExampleBundle b(6, "example6-intervals-to-a-point", IFSystem(amb, gens),
                  ArcSet::single(amb, iprime), ClassLabel::InteriorPlusN);
  b.density_points = {iprime.lo + half(iprime.length())};
  b.n_witnesses = {Rational(0)}; // the sink 0 = 1, accumulated by psi^n(I')
  b.interior_witness = ArcSet::single(amb, iprime);
  b.constants = {{"I.lo", I.lo}, {"I.hi", I.hi}, {"Iprime.lo", iprime.lo},
                 {"Iprime.hi", iprime.hi}};
  return b;
}

} // namespace

ExampleBundle build_example1_at(const Arc &I_prime, const Arc &I) {
  Ambient amb = Ambient::circle();
  IFSystem pair = make_triadic_pair(I_prime, I, amb);
  ExampleBundle b(1, "example1-cantor", pair, ArcSet::single(amb, I_prime), ClassLabel::Cantor);
  b.density_points = {I_prime.lo + half(I_prime.length())};
  b.constants = {{"a", I_prime.lo}, {"b", I_prime.hi}, {"I.lo", I.lo}, {"I.hi", I.hi}};
  return b;
}

ExampleBundle build_example7_at(const Arc &I_prime, const Arc &I, int psi_depth) {
  Ambient amb = Ambient::circle();
  Arc gap0, gap1;
  IFSystem fgh = make_three_branch(I_prime, I, amb, &gap0, &gap1);
  Example7Constants k = example7_constants(I_prime);
  PLMap tplus = make_example7_T(true, I_prime, I, amb, psi_depth);
  PLMap tminus = make_example7_T(false, I_prime, I, amb, psi_depth);
  std::vector<Generator> gens = fgh.generators();
  gens.push_back({"Tplus", tplus});
  gens.push_back({"Tminus", tminus});
  ExampleBundle b(7, "example7-cantorval", IFSystem(amb, gens),
                  ArcSet::single(amb, Arc(k.c, k.d)), ClassLabel::InteriorPlusCantor_Cantorval);
  b.density_points = {k.c + half(k.d - k.c)};
  b.interior_witness = ArcSet::single(amb, Arc(k.c, k.d));
  b.constants = {{"a", k.a},   {"b", k.b},   {"c", k.c},           {"d", k.d},
                 {"x0", k.x0}, {"y0", k.y0}, {"e_plus", k.e_plus}, {"e_minus", k.e_minus}};
  return b;
}

ExampleBundle build_example(int n, bool finite_variant, int psi_depth) {
  switch (n) {
    case 1:
      if (finite_variant) return example1_finite();
      return build_example1_at(Arc(Rational(1, 4), Rational(3, 4)),
                               Arc(Rational(1, 8), Rational(7, 8)));
    case 2: return example2();
    case 3: return example3();
    case 4: return example4();
    case 5: return example5();
    case 6: return example6();
    case 7:
      return build_example7_at(Arc(Rational(1, 4), Rational(3, 4)),
                               Arc(Rational(1, 8), Rational(7, 8)), psi_depth);
    default: fail(Errc::invalid_geometry, "example number must be 1..7");
  }
}

PLMap rotate_map(const PLMap &m, const Rational &t) {
  if (!m.ambient().is_circle()) fail(Errc::invalid_geometry, "rotation conjugation needs a circle");
  std::vector<Breakpoint> pts;
  for (const auto &p : m.breakpoints()) pts.push_back({p.x + t, p.y + t});
  return PLMap::from_breakpoints(std::move(pts), m.ambient());
}

ArcSet rotate_arcset(const ArcSet &s, const Rational &t) {
  if (!s.ambient().is_circle()) fail(Errc::invalid_geometry, "rotation conjugation needs a circle");
  if (s.is_full()) return s;
  std::vector<Arc> arcs;
  for (const auto &a : s.arcs()) {
    Rational lo = (a.lo + t).frac();
    Rational hi = lo + a.length();
    if (hi <= Rational(1))
      arcs.emplace_back(lo, hi, false);
    else
      arcs.emplace_back(lo, hi - 1, true);
  }
  return canonicalize(s.ambient(), std::move(arcs));
}

ExampleBundle rotate_bundle(const ExampleBundle &b, const Rational &t) {
  std::vector<Generator> gens;
  for (const auto &g : b.ifs.generators()) gens.push_back({g.name, rotate_map(g.map, t)});
  ExampleBundle out(b.number, b.name + "-rotated", IFSystem(b.ifs.ambient(), gens),
                    rotate_arcset(b.seed, t), b.declared);
  for (const auto &p : b.density_points) out.density_points.push_back((p + t).frac());
  for (const auto &w : b.n_witnesses) out.n_witnesses.push_back((w + t).frac());
  if (!b.interior_witness.empty_set()) out.interior_witness = rotate_arcset(b.interior_witness, t);
  out.constants = b.constants;
  return out;
}

} // namespace plifs
