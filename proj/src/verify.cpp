#include "plifs/verify.hpp"

#include <chrono>
#include <random>

#include <json.hpp>

#include "plifs/errors.hpp"

namespace plifs {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
  bool ok = true;
  std::string why;

  void expect(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

// ---- criterion 1: triadic convergence, exact counts and lengths ----------

void criterion1(Checker &c) {
  ExampleBundle b = build_example(1);
  IterationTrace tr = iterate(b.ifs, b.seed, 8);
  c.expect(!tr.overflow, "overflow");
  Rational hull = Rational(1, 2); // |I'|
  long count = 1;
  Rational len = hull;
  for (int k = 0; k <= 8; ++k) {
    const ArcSet &level = tr.levels[static_cast<size_t>(k)];
    c.expect(level.size() == count, "level " + std::to_string(k) + " component count");
    for (const auto &a : level.arcs())
      c.expect(a.length() == len, "level " + std::to_string(k) + " component length");
    count *= 2;
    len = len / Rational(3);
  }
}

// ---- criterion 2: backward property and density ---------------------------

void criterion2(Checker &c) {
  ExampleBundle b = build_example(1);
  IterationTrace tr = iterate(b.ifs, b.seed, 6);
  Arc window(Rational(1, 4), Rational(3, 4));
  for (int k = 1; k <= 6; ++k)
    c.expect(check_backward_property(b.ifs, tr.levels[static_cast<size_t>(k)], window,
                                     tr.levels[static_cast<size_t>(k - 1)]),
             "backward property at k=" + std::to_string(k));
  c.expect(check_backward_property(b.ifs, ArcSet::full(b.ifs.ambient()), window),
           "backward property on the full ambient");
  c.expect(check_density(b.ifs, Rational(1, 2), tr.levels[6], Rational(1, 100), 12),
           "density of O(1/2) in level 6");
}

// ---- criterion 3: interval minimality and Cantor powers --------------------

void criterion3(Checker &c) {
  Ambient amb = Ambient::circle();
  Arc iprime(Rational(1, 4), Rational(3, 4));
  IFSystem tp = make_T_pair(iprime, Arc(Rational(3, 16), Rational(13, 16)), amb);
  ArcSet target = ArcSet::single(amb, iprime);
  c.expect(check_density(tp, Rational(1, 2), target, Rational(1, 100), 16),
           "orbit of the midpoint 1/100-dense in I'");

  const PLMap &tm = tp.generators()[0].map, &tpm = tp.generators()[1].map;
  PLMap tm4 = compose(compose(compose(tm, tm), tm), tm);
  PLMap tp4 = compose(compose(compose(tpm, tpm), tpm), tpm);
  IFSystem powered(amb, {{"Tminus4", tm4}, {"Tplus4", tp4}});
  IterationTrace tr = iterate(powered, target, 6);
  for (size_t j = 0; j + 1 < tr.stats.size(); ++j)
    c.expect(tr.stats[j + 1].max_len < tr.stats[j].max_len,
             "powered pair max component length must shrink at level " + std::to_string(j + 1));
  Decomposition d = decompose(tr);
  c.expect(d.interior.empty_set() && d.exp_growth, "powered pair shows Cantor evidence");
}

// ---- criterion 4: example 2 orbits dense in the circle ---------------------

void criterion4(Checker &c) {
  ExampleBundle b = build_example(2);
  ArcSet circle = ArcSet::full(b.ifs.ambient());
  for (const auto &p : b.density_points)
    c.expect(check_density(b.ifs, p, circle, Rational(1, 100), 16),
             "orbit of " + p.str() + " 1/100-dense in the circle");
}

// ---- criterion 5: classification matrix + 200 perturbations ---------------

void matrix_case(Checker &c, const ExampleBundle &b, int depth, const std::string &tag) {
  IterationTrace tr = iterate(b.ifs, b.seed, depth);
  c.expect(!tr.overflow, tag + ": overflow");
  if (!c.ok) return;
  Decomposition d = decompose(tr);
  try {
    Classification cls = classify(d, b.meta());
    c.expect(cls.label == b.declared, tag + ": label mismatch");
    c.expect(cls.confidence.proven, tag + ": confidence");
  } catch (const Error &e) {
    c.expect(false, tag + ": " + e.what());
  }
  ExclusionVerdict v = assert_not_excluded(d);
  c.expect(v.pass, tag + ": matched excluded case " + std::to_string(v.matched_case));
}

void perturbed_case(Checker &c, const ExampleBundle &b, int depth, const std::string &tag,
                    bool check_label) {
  IterationTrace tr = iterate(b.ifs, b.seed, depth);
  c.expect(!tr.overflow, tag + ": overflow");
  if (!c.ok) return;
  Decomposition d = decompose(tr);
  ExclusionVerdict v = assert_not_excluded(d);
  c.expect(v.pass, tag + ": matched excluded case " + std::to_string(v.matched_case));
  if (check_label) {
    try {
      Classification cls = classify(d, b.meta());
      c.expect(cls.label == b.declared, tag + ": label mismatch");
    } catch (const Error &e) {
      c.expect(false, tag + ": " + e.what());
    }
  }
}

void criterion5(Checker &c) {
  const int depths[8] = {0, 8, 6, 7, 7, 8, 8, 6};
  for (int n = 1; n <= 7; ++n)
    matrix_case(c, build_example(n), depths[n], "example " + std::to_string(n));
  if (!c.ok) return;

  std::mt19937 rng(20260808);
  auto pick = [&rng](long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  };
  int runs = 0;

  // 30 triadic pairs at jittered coordinates
  for (int i = 0; i < 30; ++i, ++runs) {
    Rational A(pick(2, 12), 64), a = A + Rational(pick(2, 10), 64);
    Rational bb = a + Rational(pick(8, 20), 64);
    Rational B = bb + Rational(pick(2, 10), 64);
    if (!(B < Rational(1))) B = Rational(63, 64);
    ExampleBundle eb = build_example1_at(Arc(a, bb), Arc(A, B));
    perturbed_case(c, eb, 5, "triadic jitter " + std::to_string(i), true);
  }
  // 30 Cantorval wirings at jittered coordinates
  for (int i = 0; i < 30; ++i, ++runs) {
    Rational a(pick(4, 40), 128);
    Rational len(pick(16, 48), 128);
    Rational m(pick(2, 8), 128);
    Arc iprime(a + m, a + m + len), isupp(a, a + m + len + m);
    ExampleBundle eb = build_example7_at(iprime, isupp, 3);
    perturbed_case(c, eb, 5, "cantorval jitter " + std::to_string(i), true);
  }
  // 30 T-pairs (interval minimal set evidence)
  for (int i = 0; i < 30; ++i, ++runs) {
    Rational A(pick(2, 12), 64), a = A + Rational(pick(1, 6), 64);
    Rational bb = a + Rational(pick(6, 20), 64);
    Rational B = bb + Rational(pick(1, 6), 64);
    if (!(B < Rational(1))) B = Rational(63, 64);
    Rational ratio(pick(8, 15), 16); // in [1/2, 15/16]
    IFSystem tp = make_T_pair(Arc(a, bb), Arc(A, B), Ambient::circle(), ratio);
    ExampleBundle eb(0, "tpair-jitter", tp, ArcSet::single(Ambient::circle(), Arc(a, bb)),
                     ClassLabel::InteriorPlusN);
    perturbed_case(c, eb, 5, "tpair jitter " + std::to_string(i), false);
  }
  // 30 three-branch systems
  for (int i = 0; i < 30; ++i, ++runs) {
    Rational A(pick(2, 12), 64), a = A + Rational(pick(1, 6), 64);
    Rational bb = a + Rational(pick(10, 24), 64);
    Rational B = bb + Rational(pick(1, 6), 64);
    if (!(B < Rational(1))) B = Rational(63, 64);
    IFSystem fgh = make_three_branch(Arc(a, bb), Arc(A, B), Ambient::circle());
    ExampleBundle eb(0, "threebranch-jitter", fgh,
                     ArcSet::single(Ambient::circle(), Arc(a, bb)), ClassLabel::Cantor);
    perturbed_case(c, eb, 5, "three-branch jitter " + std::to_string(i), true);
  }
  // 20 mirror-symmetric contracting pairs
  for (int i = 0; i < 20; ++i, ++runs) {
    Rational p1(pick(6, 12), 64), q1 = p1 + Rational(pick(4, 8), 64);
    Rational w(pick(2, 5), 64);
    if (!(q1 < Rational(1, 2) - w)) q1 = Rational(1, 2) - w - Rational(1, 64);
    Arc m1(p1, q1), m0(Rational(1, 2) - w, Rational(1, 2) + w);
    Arc pl(Rational(1) - q1, Rational(1) - p1);
    Arc ihat(p1 - Rational(1, 64), Rational(1) - p1 + Rational(1, 64));
    IFSystem pair = make_contracting_triple_pair(ihat, Arc(Rational(1, 64), Rational(63, 64)),
                                                 {m1, m0, pl}, Rational(1, 2),
                                                 Ambient::circle());
    ArcSet seed = canonicalize(Ambient::circle(), {m1, m0, pl});
    ExampleBundle eb(0, "contracting-jitter", pair, seed, ClassLabel::Cantor);
    perturbed_case(c, eb, 5, "contracting jitter " + std::to_string(i), false);
  }
  // 60 rotation conjugations of the composite examples
  const int rot_depths[7] = {0, 0, 5, 6, 6, 6, 6};
  for (int i = 0; i < 60; ++i, ++runs) {
    int n = 2 + i % 5;
    Rational t(pick(1, 127), 128);
    ExampleBundle eb = rotate_bundle(build_example(n), t);
    perturbed_case(c, eb, rot_depths[n], "rotated example " + std::to_string(n) + " #" +
                                             std::to_string(i),
                   true);
  }
  c.expect(runs == 200, "expected 200 perturbation runs, got " + std::to_string(runs));
}

// ---- criterion 6: cantorval predicate ---------------------------------------

void criterion6(Checker &c) {
  for (int n = 1; n <= 7; ++n) {
    ExampleBundle b = build_example(n);
    for (int depth = 4; depth <= 6; ++depth) {
      IterationTrace tr = iterate(b.ifs, b.seed, depth);
      bool got = is_symmetric_cantorval(tr, 3);
      c.expect(got == (n == 7), "example " + std::to_string(n) + " at depth " +
                                    std::to_string(depth) + " -> " + (got ? "true" : "false"));
    }
  }
}

// ---- criterion 7: gap matcher -----------------------------------------------

void criterion7(Checker &c) {
  Arc iprime(Rational(1, 4), Rational(3, 4));
  GapData tri = triadic_gap_data(iprime, 7);
  PsiMap self = gap_matching_homeomorphism(tri, tri, 4);
  for (const auto &m : self.matches)
    c.expect(m.from == m.to, "triadic self-match must be the identity on matched gaps");
  for (const auto &p : self.pts) c.expect(p.x == p.y, "triadic psi breakpoints on the diagonal");
  for (size_t i = 0; i + 1 < self.pts.size(); ++i)
    c.expect(self.pts[i].x < self.pts[i + 1].x && self.pts[i].y < self.pts[i + 1].y,
             "psi breakpoints strictly monotone");

  Example7Constants k = example7_constants(iprime);
  GapData data = three_branch_gap_data(iprime, 9);
  GapData from = restrict_gap_data(data, Arc(k.a, k.x0));
  GapData to = restrict_gap_data(data, Arc(k.a, k.c));
  PsiMap psi = gap_matching_homeomorphism(from, to, 6);
  c.expect(psi.matches.size() >= 100,
           "need >= 100 matched pairs, got " + std::to_string(psi.matches.size()));
  std::vector<GapMatch> sorted = psi.matches;
  std::sort(sorted.begin(), sorted.end(),
            [](const GapMatch &x, const GapMatch &y) { return x.from.lo < y.from.lo; });
  for (size_t i = 0; i + 1 < sorted.size(); ++i)
    c.expect(sorted[i].to.hi < sorted[i + 1].to.lo, "matched gaps must preserve order");
  auto in_family = [](const GapData &g, const Arc &gap, GapFamily fam) {
    for (const auto &t : g.gaps)
      if (t.gap == gap) return t.family == fam;
    return false;
  };
  for (const auto &m : psi.matches) {
    c.expect(in_family(from, m.from, m.family), "from-gap family tag");
    c.expect(in_family(to, m.to, m.family), "to-gap family tag");
  }

  Rational prev;
  for (int depth = 2; depth <= 5; ++depth) {
    PsiMap p = gap_matching_homeomorphism(from, to, depth);
    if (depth > 2)
      c.expect(p.interp_modulus < prev,
               "interpolation modulus must strictly shrink at depth " + std::to_string(depth));
    prev = p.interp_modulus;
  }
}

// ---- criterion 8: brute-force word oracle -----------------------------------

void criterion8(Checker &c) {
  for (int n = 1; n <= 7; ++n) {
    ExampleBundle b = build_example(n);
    IterationTrace tr = iterate(b.ifs, b.seed, 4);
    for (int k = 0; k <= 4; ++k)
      c.expect(tr.levels[static_cast<size_t>(k)] == brute_force_level(b.ifs, b.seed, k),
               "example " + std::to_string(n) + " level " + std::to_string(k));
  }
  ExampleBundle fin = build_example(1, true);
  IterationTrace tr = iterate(fin.ifs, fin.seed, 4);
  for (int k = 0; k <= 4; ++k)
    c.expect(tr.levels[static_cast<size_t>(k)] == brute_force_level(fin.ifs, fin.seed, k),
             "finite variant level " + std::to_string(k));
}

CriterionResult run_one(int id, const std::string &name, void (*fn)(Checker &),
                        double budget_seconds) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  auto t0 = Clock::now();
  Checker c;
  try {
    fn(c);
  } catch (const std::exception &e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (budget_seconds > 0 && r.seconds >= budget_seconds)
    c.expect(false, "runtime budget exceeded");
  r.pass = c.ok;
  r.detail = c.ok ? "ok" : c.why;
  return r;
}

} // namespace

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  out.push_back(run_one(1, "triadic convergence (counts 2^k, lengths |I'|*3^-k)", criterion1,
                        5.0));
  out.push_back(run_one(2, "backward property k<=6 and density of O(1/2) in level 6",
                        criterion2, 30.0));
  out.push_back(run_one(3, "interval minimality and Cantor powers of the T pair", criterion3,
                        0.0));
  out.push_back(run_one(4, "example 2 orbits 1/100-dense in the circle", criterion4, 0.0));
  out.push_back(
      run_one(5, "classification matrix + 200 perturbations stay admissible", criterion5,
              300.0));
  out.push_back(run_one(6, "symmetric-Cantorval predicate at depths 4..6", criterion6, 0.0));
  out.push_back(run_one(7, "gap matcher: identity, tags, order, modulus", criterion7, 0.0));
  out.push_back(run_one(8, "iterate equals brute-force word union (k<=4)", criterion8, 0.0));
  return out;
}

// timing stays out of the report so identical runs serialize identically
std::string acceptance_report_json(const std::vector<CriterionResult> &results) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto &r : results) {
    nlohmann::ordered_json e;
    e["id"] = r.id;
    e["name"] = r.name;
    e["pass"] = r.pass;
    e["detail"] = r.detail;
    j.push_back(std::move(e));
  }
  return j.dump();
}

} // namespace plifs
