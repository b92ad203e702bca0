#include "plifs/classify.hpp"

#include <algorithm>

#include "plifs/errors.hpp"

namespace plifs {

const char *class_label_name(ClassLabel c) {
  switch (c) {
    case ClassLabel::Finite: return "Finite";
    case ClassLabel::Cantor: return "Cantor";
    case ClassLabel::WholeSpace: return "WholeSpace";
    case ClassLabel::InteriorPlusCantorPlusN_boundaryMeetsN:
      return "InteriorPlusCantorPlusN_boundaryMeetsN";
    case ClassLabel::InteriorPlusN: return "InteriorPlusN";
    case ClassLabel::InteriorPlusCantor_Cantorval: return "InteriorPlusCantor_Cantorval";
  }
  return "?";
}

namespace {

bool has_component(const ArcSet &level, const Arc &a) {
  const auto &v = level.arcs();
  auto it = std::lower_bound(v.begin(), v.end(), a,
                             [](const Arc &x, const Arc &y) { return x.lo < y.lo; });
  return it != v.end() && *it == a;
}

// distance from endpoint p of arc `self` to the nearest other component of
// `level` strictly on one side; ambient diameter when that side is empty
Rational outward_distance(const ArcSet &level, const Arc &self, const Rational &p,
                          bool left_side) {
  const Ambient &amb = level.ambient();
  Rational best = amb.diameter();
  for (const auto &c : level.arcs()) {
    if (c == self) continue;
    Rational d;
    if (amb.is_circle()) {
      d = left_side ? (p - c.hi).frac() : (c.lo - p).frac();
      if (d.is_zero()) continue;
    } else {
      if (left_side) {
        if (!(c.hi < p)) continue;
        d = p - c.hi;
      } else {
        if (!(p < c.lo)) continue;
        d = c.lo - p;
      }
    }
    best = min(best, d);
  }
  return best;
}

// every endpoint of every interior arc is approached from outside with
// distances decaying by a factor <= 3/4 per level over the last
// `check_levels` levels; interleaved approach series in the Cantorval
// construction have worst-case consecutive ratio 3/5, while interval
// chains and isolated copies sit at ratios 16/21 and above
bool boundary_accumulation(const std::vector<ArcSet> &levels, const ArcSet &interior,
                           int check_levels) {
  if (interior.empty_set() || interior.is_full()) return false;
  int k = static_cast<int>(levels.size()) - 1;
  if (k < check_levels) return false;
  const Ambient &amb = interior.ambient();
  for (const auto &a : interior.arcs()) {
    for (int side = 0; side < 2; ++side) {
      bool left = (side == 0);
      Rational p = left ? a.lo : a.hi;
      if (!amb.is_circle()) {
        if (left && p == amb.lo) continue; // no outside on this side
        if (!left && p == amb.hi) continue;
      }
      Rational prev;
      for (int j = k - check_levels; j <= k; ++j) {
        Rational d = outward_distance(levels[static_cast<size_t>(j)], a, p, left);
        if (j > k - check_levels) {
          if (!(d * Rational(4) <= prev * Rational(3))) return false;
        }
        prev = d;
      }
      if (prev == amb.diameter()) return false; // nothing ever showed up
    }
  }
  return true;
}

} // namespace

Decomposition decompose(const IterationTrace &trace, const DecomposeParams &params) {
  int k = trace.depth();
  if (k + 1 < params.stability_window + 1)
    fail(Errc::insufficient_depth, "need at least stability_window + 1 levels");

  Decomposition d(trace.seed.ambient());
  d.depth = k;
  d.params = params;
  d.levels = trace.levels;
  d.final_level = trace.levels.back();

  const auto &final_arcs = d.final_level.arcs();

  // stable interior arcs: identical component in each of the last
  // stability_window + 1 levels and at least interior_floor long
  std::vector<Arc> interior_arcs;
  for (const auto &a : final_arcs) {
    if (a.length() < params.interior_floor) continue;
    bool stable = true;
    for (int j = k - params.stability_window; j < k && stable; ++j)
      stable = has_component(trace.levels[static_cast<size_t>(j)], a);
    if (stable) interior_arcs.push_back(a);
  }
  d.interior = canonicalize(d.ambient, interior_arcs);

  // isolated points: point arcs farther than the floor from everything else
  std::vector<Arc> isolated_arcs;
  for (const auto &a : final_arcs) {
    if (!a.is_point()) continue;
    Rational nearest = d.ambient.diameter();
    for (const auto &b : final_arcs) {
      if (b == a) continue;
      nearest = min(nearest, arc_gap(d.ambient, a, b));
    }
    if (nearest > params.interior_floor) isolated_arcs.push_back(a);
  }
  d.isolated = canonicalize(d.ambient, isolated_arcs);

  std::vector<Arc> rest;
  for (const auto &a : final_arcs)
    if (!has_component(d.interior, a) && !has_component(d.isolated, a)) rest.push_back(a);
  d.unresolved = canonicalize(d.ambient, rest);

  for (int j = 0; j <= k; ++j) {
    const ArcSet &level = trace.levels[static_cast<size_t>(j)];
    long residual = 0, points = 0;
    Rational new_max(0);
    bool any_new = false;
    for (const auto &a : level.arcs()) {
      if (!has_component(d.interior, a) && !has_component(d.isolated, a)) residual++;
      if (a.is_point()) points++;
      bool is_new = (j == 0) || !has_component(trace.levels[static_cast<size_t>(j - 1)], a);
      if (is_new) {
        any_new = true;
        new_max = max(new_max, a.length());
      }
    }
    d.evidence.component_count_growth.push_back(residual);
    d.evidence.max_component_length.push_back(new_max);
    d.evidence.has_new.push_back(any_new);
    d.point_counts.push_back(points);
  }

  // growth-shape flags over the last up-to-4 levels of residual counts:
  // exponential growth shows strictly increasing first differences, a
  // chain of intervals only adds O(1) components per level
  const auto &counts = d.evidence.component_count_growth;
  {
    int w = std::min<int>(3, k);
    long c_first = counts[static_cast<size_t>(k - w)];
    long c_last = counts[static_cast<size_t>(k)];
    bool diffs_increasing = w >= 2;
    for (int j = k - w; j + 2 <= k && diffs_increasing; ++j) {
      long d1 = counts[static_cast<size_t>(j + 1)] - counts[static_cast<size_t>(j)];
      long d2 = counts[static_cast<size_t>(j + 2)] - counts[static_cast<size_t>(j + 1)];
      if (!(d1 < d2)) diffs_increasing = false;
    }
    bool lengths_shrink = true;
    bool seen_new = false;
    Rational prev_len;
    bool have_prev = false;
    for (int j = std::max(0, k - w); j <= k; ++j) {
      if (!d.evidence.has_new[static_cast<size_t>(j)]) continue;
      seen_new = true;
      if (have_prev && !(d.evidence.max_component_length[static_cast<size_t>(j)] < prev_len))
        lengths_shrink = false;
      prev_len = d.evidence.max_component_length[static_cast<size_t>(j)];
      have_prev = true;
    }
    d.exp_growth = c_last >= 4 && c_last >= 2 * c_first && diffs_increasing && seen_new &&
                   lengths_shrink && d.evidence.has_new[static_cast<size_t>(k)];
    bool stable = true;
    for (int j = k - std::min(params.stability_window, k); j < k; ++j)
      stable = stable && counts[static_cast<size_t>(j)] == counts[static_cast<size_t>(k)];
    d.counts_stable = stable;
  }

  d.all_points_final = true;
  for (const auto &a : final_arcs)
    if (!a.is_point()) d.all_points_final = false;

  d.boundary_accumulated =
      boundary_accumulation(trace.levels, d.interior, params.stability_window);
  return d;
}

namespace {

bool witness_accumulates(const Decomposition &d, const Rational &w) {
  int k = d.depth;
  int window = std::min(d.params.stability_window, k);
  Rational prev;
  for (int j = k - window; j <= k; ++j) {
    const ArcSet &level = d.levels[static_cast<size_t>(j)];
    if (level.empty_set()) return false;
    Rational dist = point_to_set_distance(w, level);
    if (j > k - window && !(dist < prev)) return false;
    prev = dist;
  }
  return prev > Rational(0);
}

bool any_witness_accumulates(const Decomposition &d, const BuilderMeta &meta) {
  for (const auto &w : meta.n_witnesses)
    if (witness_accumulates(d, w)) return true;
  return false;
}

bool consistent_with(const Decomposition &d, ClassLabel label, const BuilderMeta &meta) {
  switch (label) {
    case ClassLabel::Finite:
      return d.interior.empty_set() && d.all_points_final && d.counts_stable && !d.exp_growth;
    case ClassLabel::Cantor:
      return d.interior.empty_set() && d.exp_growth && d.isolated.empty_set();
    case ClassLabel::WholeSpace: return d.final_level.is_full();
    case ClassLabel::InteriorPlusCantorPlusN_boundaryMeetsN:
      return !d.interior.empty_set() && d.exp_growth &&
             (!d.boundary_accumulated || !d.isolated.empty_set() ||
              any_witness_accumulates(d, meta));
    case ClassLabel::InteriorPlusN: return !d.interior.empty_set() && !d.exp_growth;
    case ClassLabel::InteriorPlusCantor_Cantorval:
      return !d.interior.empty_set() && d.exp_growth && d.isolated.empty_set() &&
             d.boundary_accumulated;
  }
  return false;
}

ClassLabel evidence_label(const Decomposition &d) {
  if (d.final_level.is_full()) return ClassLabel::WholeSpace;
  if (d.interior.empty_set()) {
    if (d.exp_growth) return ClassLabel::Cantor;
    if (d.all_points_final) return ClassLabel::Finite;
    return ClassLabel::Cantor; // growing non-point residue, Evidence grade only
  }
  if (!d.exp_growth) return ClassLabel::InteriorPlusN;
  if (d.boundary_accumulated && d.isolated.empty_set())
    return ClassLabel::InteriorPlusCantor_Cantorval;
  return ClassLabel::InteriorPlusCantorPlusN_boundaryMeetsN;
}

} // namespace

Classification classify(const Decomposition &d, const BuilderMeta &meta) {
  if (!meta.has_declared) return {evidence_label(d), {false, d.depth}};
  if (!consistent_with(d, meta.declared, meta))
    fail(Errc::evidence_contradicts_metadata,
         std::string("trace evidence contradicts declared class ") +
             class_label_name(meta.declared));
  return {meta.declared, {true, d.depth}};
}

ExclusionVerdict assert_not_excluded(const Decomposition &d) {
  // (1) no interior, no Cantor evidence, yet an unbounded number of
  // isolated-looking points
  if (d.interior.empty_set() && !d.exp_growth) {
    int k = d.depth;
    int w = std::min(d.params.stability_window, k);
    bool growing = d.point_counts[static_cast<size_t>(k)] >= 4;
    for (int j = k - w; j + 1 <= k && growing; ++j)
      if (!(d.point_counts[static_cast<size_t>(j)] < d.point_counts[static_cast<size_t>(j + 1)]))
        growing = false;
    if (growing) return {false, 1};
  }
  // (2) Cantor part plus countable part but no interior
  if (d.interior.empty_set() && d.exp_growth && !d.isolated.empty_set()) return {false, 2};
  // (3) Cantor part plus countable part separated from every interior boundary
  if (d.exp_growth && !d.isolated.empty_set() && !d.interior.empty_set()) {
    bool all_separated = true;
    for (const auto &p : d.isolated.arcs()) {
      for (const auto &a : d.interior.arcs()) {
        if (point_distance(d.ambient, p.lo, a.lo) <= d.params.interior_floor ||
            point_distance(d.ambient, p.lo, a.wraps ? a.hi : a.hi) <= d.params.interior_floor)
          all_separated = false;
      }
    }
    if (all_separated) return {false, 3};
  }
  return {true, 0};
}

bool is_symmetric_cantorval(const IterationTrace &trace, int depth_checks,
                            const DecomposeParams &params) {
  int k = trace.depth();
  if (depth_checks < 1 || k + 1 < depth_checks + 1 || k + 1 < params.stability_window + 1)
    fail(Errc::insufficient_depth, "trace too shallow for cantorval check");
  Decomposition d = decompose(trace, params);
  if (d.interior.empty_set() || d.unresolved.empty_set() || !d.isolated.empty_set())
    return false;

  // (1) closure-of-interior evidence: components born at each checked level
  // sit geometrically closer to the already-stable components
  Rational prev_delta;
  bool have_prev = false;
  bool any_delta = false;
  for (int j = k - depth_checks + 1; j <= k; ++j) {
    const ArcSet &level = trace.levels[static_cast<size_t>(j)];
    const ArcSet &before = trace.levels[static_cast<size_t>(j - 1)];
    std::vector<const Arc *> stable;
    for (const auto &a : level.arcs())
      if (has_component(before, a)) stable.push_back(&a);
    if (stable.empty()) return false;
    Rational delta(0);
    for (const auto &a : level.arcs()) {
      if (has_component(before, a)) continue;
      Rational nearest = trace.seed.ambient().diameter();
      for (const Arc *s : stable) nearest = min(nearest, arc_gap(d.ambient, a, *s));
      delta = max(delta, nearest);
    }
    if (have_prev && !(delta * Rational(4) <= prev_delta * Rational(3))) return false;
    if (delta > Rational(0)) any_delta = true;
    prev_delta = delta;
    have_prev = true;
  }
  if (!any_delta) return false;

  // (2) both endpoints of every stable component accumulated from outside
  return boundary_accumulation(trace.levels, d.interior, depth_checks);
}

} // namespace plifs
