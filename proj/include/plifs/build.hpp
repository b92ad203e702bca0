#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "plifs/classify.hpp"
#include "plifs/gapmatch.hpp"

namespace plifs {

// Two slope-1/3 branches fixing the endpoints of I_prime, identity outside
// I; the usual triadic Cantor set in I_prime is their minimal set.
IFSystem make_triadic_pair(const Arc &I_prime, const Arc &I, const Ambient &amb);

// Three slope-1/5 branches onto the 1st, 3rd and 5th fifths of I_prime;
// the complementary fifths come back through gap0/gap1 when requested.
IFSystem make_three_branch(const Arc &I_prime, const Arc &I, const Ambient &amb,
                           Arc *gap0 = nullptr, Arc *gap1 = nullptr);

// Overlapping contracting pair: f pushes the chain I_1 -> I_0 -> I_-1 into
// itself, g pushes the other way; all slopes over the three arcs stay
// below lambda_bound.
IFSystem make_contracting_triple_pair(const Arc &I_hat, const Arc &I,
                                      const std::array<Arc, 3> &sub,
                                      const Rational &lambda_bound, const Ambient &amb);

// T- fixes I_prime.lo, T+ fixes I_prime.hi, both linear with the given
// ratio on I_prime and identity outside I; their images cover I_prime
// (requires ratio in [1/2, 1)), which makes I_prime the minimal set.
IFSystem make_T_pair(const Arc &I_prime, const Arc &I, const Ambient &amb,
                     const Rational &ratio = Rational(3, 4));

// Circle homeomorphism equal to the identity on J_prime that squeezes the
// complement of J into I (J and I disjoint, both non-wrapping).
PLMap make_h(const Arc &J_prime, const Arc &J, const Arc &I, const Ambient &amb);

enum class Sink { lo, hi };

// Fixes both endpoints of the interval, identity outside, moves every
// interior point strictly toward the chosen endpoint (slope 1/2 core).
PLMap make_push_map(const Arc &interval, Sink sink, const Ambient &amb);

// Complementary-gap data of the middle-third Cantor set in I_prime, the
// two families split by subdivision-level parity.
GapData triadic_gap_data(const Arc &I_prime, int depth);
// Gap data of the three-branch slope-1/5 Cantor set: primary gaps are the
// images of the second fifth, secondary gaps the images of the fourth.
GapData three_branch_gap_data(const Arc &I_prime, int depth);
GapData restrict_gap_data(const GapData &g, const Arc &host);

struct Example7Constants {
  Rational a, b, c, d, x0, y0, e_plus, e_minus;
};
Example7Constants example7_constants(const Arc &I_prime);

// T+ (resp. T-) of the Cantorval example: gap-matching homeomorphism on
// [a,x0] (resp. [y0,b]), a linear r1 feeding [c,d], and a linear r2 making
// IFS(T+,T-) minimal on [c,d]; identity elsewhere.
PLMap make_example7_T(bool plus, const Arc &I_prime, const Arc &I, const Ambient &amb,
                      int psi_depth);

struct ExampleBundle {
  ExampleBundle(int num, std::string nm, IFSystem system, ArcSet sd, ClassLabel cls)
      : number(num), name(std::move(nm)), ifs(std::move(system)), seed(std::move(sd)),
        declared(cls), interior_witness(seed.ambient()) {}

  int number;
  std::string name;
  IFSystem ifs;
  ArcSet seed;
  ClassLabel declared;
  std::vector<Rational> density_points;
  std::vector<Rational> n_witnesses;
  ArcSet interior_witness;
  std::vector<std::pair<std::string, Rational>> constants;

  BuilderMeta meta() const {
    BuilderMeta m;
    m.has_declared = true;
    m.declared = declared;
    m.n_witnesses = n_witnesses;
    return m;
  }
};

// The seven examples at canonical rational coordinates. Example 1 has a
// finite-minimal-set variant behind the flag; psi_depth controls the gap
// matcher feeding Example 7.
ExampleBundle build_example(int n, bool finite_variant = false, int psi_depth = 4);

// Parametric variants used by the perturbation tests.
ExampleBundle build_example1_at(const Arc &I_prime, const Arc &I);
ExampleBundle build_example7_at(const Arc &I_prime, const Arc &I, int psi_depth);

// Conjugation by the rotation x -> x + t; relabels every ingredient of the
// bundle without changing its class.
PLMap rotate_map(const PLMap &m, const Rational &t);
ArcSet rotate_arcset(const ArcSet &s, const Rational &t);
ExampleBundle rotate_bundle(const ExampleBundle &b, const Rational &t);

} // namespace plifs
