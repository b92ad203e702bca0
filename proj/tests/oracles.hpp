// Test-side oracles, kept independent of the library code paths they check.

#pragma once

#include <random>
#include <vector>

#include "plifs/arcset.hpp"

namespace testor {

using plifs::Ambient;
using plifs::Arc;
using plifs::ArcSet;
using plifs::Rational;

// membership by direct per-arc checks on the raw arc list
inline bool member_oracle(const Ambient &amb, const std::vector<Arc> &arcs, const Rational &x) {
  Rational p = amb.is_circle() ? x.frac() : x;
  for (const auto &a : arcs) {
    if (a.wraps) {
      if (a.lo <= p || p <= a.hi) return true;
    } else {
      if (a.lo <= p && p <= a.hi) return true;
      if (amb.is_circle() && a.hi == Rational(1) && p.is_zero()) return true;
    }
  }
  return false;
}

inline std::vector<Rational> grid(long n, const Ambient &amb) {
  std::vector<Rational> g;
  for (long i = 0; i <= n; ++i) {
    Rational t = amb.lo + (amb.hi - amb.lo) * Rational(i, n);
    if (amb.is_circle() && t == Rational(1)) continue;
    g.push_back(t);
  }
  return g;
}

inline Rational metric(const Ambient &amb, const Rational &x, const Rational &y) {
  if (!amb.is_circle()) return (x - y).abs();
  Rational d = (x.frac() - y.frac()).abs();
  return plifs::min(d, Rational(1) - d);
}

inline Rational dist_to_set_oracle(const Ambient &amb, const Rational &x,
                                   const std::vector<Arc> &arcs) {
  if (member_oracle(amb, arcs, x)) return Rational(0);
  bool first = true;
  Rational best;
  for (const auto &a : arcs)
    for (const Rational &e : {a.lo, a.hi}) {
      Rational d = metric(amb, x, e);
      if (first || d < best) {
        best = d;
        first = false;
      }
    }
  return best;
}

// brute-force one-sided Hausdorff: all endpoints of a, plus every midpoint
// of endpoint pairs of b (and the antipodal midpoints on the circle) form a
// superset of the local maxima of dist(., b) restricted to a
inline Rational directed_hausdorff_oracle(const ArcSet &a, const ArcSet &b) {
  const Ambient &amb = a.ambient();
  std::vector<Rational> candidates;
  for (const auto &arc : a.arcs()) {
    candidates.push_back(arc.lo);
    candidates.push_back(arc.hi);
  }
  std::vector<Rational> bpts;
  for (const auto &arc : b.arcs()) {
    bpts.push_back(arc.lo);
    bpts.push_back(arc.hi);
  }
  for (size_t i = 0; i < bpts.size(); ++i)
    for (size_t j = 0; j < bpts.size(); ++j) {
      Rational mid = (bpts[i] + bpts[j]) / Rational(2);
      candidates.push_back(mid);
      if (amb.is_circle()) candidates.push_back((mid + Rational(1, 2)).frac());
    }
  Rational best(0);
  for (const auto &c : candidates) {
    if (!member_oracle(amb, a.arcs(), c)) continue;
    best = plifs::max(best, dist_to_set_oracle(amb, c, b.arcs()));
  }
  return best;
}

inline Rational hausdorff_oracle(const ArcSet &a, const ArcSet &b) {
  return plifs::max(directed_hausdorff_oracle(a, b), directed_hausdorff_oracle(b, a));
}

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}

  long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }

  Rational rational(long max_den = 64) {
    long den = pick(1, max_den);
    return Rational(pick(0, den), den);
  }

  Arc arc(const Ambient &amb) {
    if (amb.is_circle()) {
      Rational lo = rational(48);
      if (lo == Rational(1)) lo = Rational(0);
      Rational len = Rational(pick(0, 24), 48);
      Rational hi = lo + len;
      if (hi <= Rational(1)) return Arc(lo, hi, false);
      return Arc(lo, hi - 1, true);
    }
    Rational x = amb.lo + (amb.hi - amb.lo) * rational(32);
    Rational y = amb.lo + (amb.hi - amb.lo) * rational(32);
    return x <= y ? Arc(x, y, false) : Arc(y, x, false);
  }

  ArcSet arcset(const Ambient &amb, int max_arcs = 4) {
    std::vector<Arc> arcs;
    int n = static_cast<int>(pick(0, max_arcs));
    for (int i = 0; i < n; ++i) arcs.push_back(arc(amb));
    return canonicalize(amb, std::move(arcs));
  }
};

} // namespace testor
