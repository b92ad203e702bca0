#include "plifs/engine.hpp"

#include <algorithm>

#include "plifs/errors.hpp"

namespace plifs {

IFSystem::IFSystem(Ambient amb, std::vector<Generator> gens)
    : ambient_(std::move(amb)), gens_(std::move(gens)) {
  if (gens_.empty()) fail(Errc::invalid_geometry, "IFS needs at least one generator");
  for (const auto &g : gens_)
    if (!(g.map.ambient() == ambient_))
      fail(Errc::ambient_mismatch, "generator '" + g.name + "' lives in a different ambient");
}

ArcSet step(const IFSystem &ifs, const ArcSet &a) {
  if (!(ifs.ambient() == a.ambient())) fail(Errc::ambient_mismatch, "step");
  std::vector<Arc> all;
  for (const auto &g : ifs.generators()) {
    ArcSet img = image_arcset(g.map, a);
    all.insert(all.end(), img.arcs().begin(), img.arcs().end());
  }
  return canonicalize(ifs.ambient(), std::move(all));
}

IterationTrace iterate(const IFSystem &ifs, const ArcSet &seed, int k,
                       const EngineLimits &limits) {
  if (k < 0) fail(Errc::invalid_geometry, "negative depth");
  IterationTrace trace(seed);
  trace.levels.push_back(seed);
  trace.stats.push_back(component_stats(seed));
  for (int j = 0; j < k; ++j) {
    ArcSet next = step(ifs, trace.levels.back());
    if (next.size() > limits.max_arcs) {
      trace.overflow = true;
      break;
    }
    trace.stats.push_back(component_stats(next));
    trace.levels.push_back(std::move(next));
  }
  return trace;
}

Rational eval_word(const IFSystem &ifs, const Word &w, const Rational &x) {
  Rational v = ifs.ambient().is_circle() ? x.frac() : x;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    v = ifs.generators().at(static_cast<size_t>(*it)).map.eval(v);
  return v;
}

ArcSet apply_word(const IFSystem &ifs, const Word &w, const ArcSet &a) {
  ArcSet v = a;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    v = image_arcset(ifs.generators().at(static_cast<size_t>(*it)).map, v);
  return v;
}

static void brute_force_rec(const IFSystem &ifs, const ArcSet &cur, int remaining,
                            std::vector<Arc> &acc) {
  if (remaining == 0) {
    acc.insert(acc.end(), cur.arcs().begin(), cur.arcs().end());
    return;
  }
  for (const auto &g : ifs.generators())
    brute_force_rec(ifs, image_arcset(g.map, cur), remaining - 1, acc);
}

ArcSet brute_force_level(const IFSystem &ifs, const ArcSet &seed, int k) {
  std::vector<Arc> acc;
  brute_force_rec(ifs, seed, k, acc);
  return canonicalize(ifs.ambient(), std::move(acc));
}

Orbit orbit_closure(const IFSystem &ifs, const Rational &x, int max_len,
                    const EngineLimits &limits) {
  Rational start = x;
  if (ifs.ambient().is_circle()) {
    start = x.frac();
  } else if (x < ifs.ambient().lo || ifs.ambient().hi < x) {
    fail(Errc::out_of_domain, "orbit start outside ambient");
  }
  Orbit orbit;
  std::set<Rational> seen{start};
  std::vector<Rational> frontier{start};
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Rational> next;
    for (const auto &p : frontier) {
      for (const auto &g : ifs.generators()) {
        Rational q = g.map.eval(p);
        if (seen.insert(q).second) {
          next.push_back(std::move(q));
          if (static_cast<long>(seen.size()) > limits.max_orbit_points) {
            orbit.truncated = true;
            orbit.points.assign(seen.begin(), seen.end());
            return orbit;
          }
        }
      }
    }
    frontier = std::move(next);
  }
  orbit.points.assign(seen.begin(), seen.end());
  return orbit;
}

ArcSet orbit_arcset(const IFSystem &ifs, const Rational &x, int max_len,
                    const EngineLimits &limits) {
  Orbit o = orbit_closure(ifs, x, max_len, limits);
  if (o.truncated) fail(Errc::overflow, "orbit point cap exceeded");
  return ArcSet::of_points(ifs.ambient(), o.points);
}

bool check_forward_invariance(const IFSystem &ifs, const ArcSet &a) {
  for (const auto &g : ifs.generators())
    if (!subset_of(image_arcset(g.map, a), a)) return false;
  return true;
}

bool check_backward_property(const IFSystem &ifs, const ArcSet &a, const Arc &window) {
  return check_backward_property(ifs, a, window, a);
}

bool check_backward_property(const IFSystem &ifs, const ArcSet &a, const Arc &window,
                             const ArcSet &within) {
  ArcSet win = ArcSet::single(ifs.ambient(), window);
  for (const auto &g : ifs.generators()) {
    ArcSet pre = preimage_arcset(g.map, a);
    if (!subset_of(set_intersect(pre, win), within)) return false;
  }
  return true;
}

namespace {

// distance from a circle/interval point to the nearest of the sorted points
Rational nearest_point_distance(const Ambient &amb, const std::vector<Rational> &pts,
                                const Rational &x) {
  auto it = std::lower_bound(pts.begin(), pts.end(), x);
  bool first = true;
  Rational best;
  auto consider = [&](const Rational &p) {
    Rational d = point_distance(amb, x, p);
    if (first || d < best) {
      best = d;
      first = false;
    }
  };
  if (it != pts.end()) consider(*it);
  if (it != pts.begin()) consider(*(it - 1));
  if (amb.is_circle()) {
    consider(pts.front());
    consider(pts.back());
  }
  return best;
}

} // namespace

Rational target_to_points_distance(const ArcSet &target, const std::vector<Rational> &pts) {
  if (target.empty_set()) return Rational(0);
  if (pts.empty()) fail(Errc::empty_set, "distance to empty point set");
  const Ambient &amb = target.ambient();
  Rational worst(0);
  auto consider = [&](const Rational &x) {
    Rational d = nearest_point_distance(amb, pts, amb.is_circle() ? x.frac() : x);
    if (worst < d) worst = d;
  };
  for (const auto &arc : target.arcs()) {
    // candidates: arc endpoints and midpoints of consecutive orbit points
    // inside the arc (the interior local maxima of the distance function)
    consider(arc.lo);
    consider(arc.hi);
    Rational s = arc.lo, e = arc.wraps ? arc.hi + 1 : arc.hi;
    std::vector<Rational> inside;
    if (amb.is_circle() && e - s == Rational(1)) {
      // full circle: one lap of points plus the wrap-around pair
      inside = pts;
      std::sort(inside.begin(), inside.end());
      if (!inside.empty()) inside.push_back(inside.front() + 1);
    } else if (amb.is_circle()) {
      for (const auto &p : pts) {
        if (s <= p && p <= e) inside.push_back(p);
        if (s <= p + 1 && p + 1 <= e) inside.push_back(p + 1);
      }
      std::sort(inside.begin(), inside.end());
    } else {
      auto lo_it = std::lower_bound(pts.begin(), pts.end(), s);
      for (auto it = lo_it; it != pts.end() && *it <= e; ++it) inside.push_back(*it);
    }
    for (size_t i = 0; i + 1 < inside.size(); ++i)
      consider((inside[i] + inside[i + 1]) / Rational(2));
  }
  return worst;
}

bool check_density(const IFSystem &ifs, const Rational &x, const ArcSet &target,
                   const Rational &eps, int max_len, const EngineLimits &limits) {
  if (!(eps > Rational(0))) fail(Errc::invalid_geometry, "eps must be positive");
  if (!(ifs.ambient() == target.ambient())) fail(Errc::ambient_mismatch, "check_density");
  if (target.empty_set()) return true;

  Rational start = ifs.ambient().is_circle() ? x.frac() : x;
  std::set<Rational> seen{start};
  std::vector<Rational> frontier{start};
  auto dense_now = [&]() {
    std::vector<Rational> pts(seen.begin(), seen.end());
    return target_to_points_distance(target, pts) <= eps;
  };
  if (dense_now()) return true;
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Rational> next;
    for (const auto &p : frontier)
      for (const auto &g : ifs.generators()) {
        Rational q = g.map.eval(p);
        if (seen.insert(q).second) {
          next.push_back(std::move(q));
          if (static_cast<long>(seen.size()) > limits.max_orbit_points)
            fail(Errc::overflow, "orbit point cap exceeded during density check");
        }
      }
    frontier = std::move(next);
    // density of the orbit only grows with the word length, so an early
    // positive answer is final
    if (dense_now()) return true;
  }
  return false;
}

} // namespace plifs
