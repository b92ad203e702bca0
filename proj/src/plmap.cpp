#include "plifs/plmap.hpp"

#include <algorithm>

#include "plifs/errors.hpp"

namespace plifs {

namespace {

Rational interp(const Breakpoint &a, const Breakpoint &b, const Rational &x) {
  return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
}

void prune_collinear(std::vector<Breakpoint> &pts) {
  if (pts.size() < 3) return;
  std::vector<Breakpoint> out;
  out.push_back(pts.front());
  for (size_t i = 1; i + 1 < pts.size(); ++i) {
    const Breakpoint &a = out.back(), &b = pts[i], &c = pts[i + 1];
    // b is redundant when slope(a,b) == slope(b,c)
    if ((b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x)) continue;
    out.push_back(b);
  }
  out.push_back(pts.back());
  pts = std::move(out);
}

void require_strictly_monotone(const std::vector<Breakpoint> &pts) {
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    if (!(pts[i].x < pts[i + 1].x) || !(pts[i].y < pts[i + 1].y))
      fail(Errc::not_a_homeomorphism, "breakpoints not strictly increasing at index " +
                                          std::to_string(i));
}

} // namespace

PLMap PLMap::from_breakpoints(std::vector<Breakpoint> pts, const Ambient &amb) {
  if (pts.size() < 2) fail(Errc::not_a_homeomorphism, "need at least 2 breakpoints");
  std::sort(pts.begin(), pts.end(),
            [](const Breakpoint &a, const Breakpoint &b) { return a.x < b.x; });

  PLMap m(amb);
  if (!amb.is_circle()) {
    require_strictly_monotone(pts);
    if (pts.front().x != amb.lo || pts.front().y != amb.lo || pts.back().x != amb.hi ||
        pts.back().y != amb.hi)
      fail(Errc::not_a_homeomorphism, "interval map must cover its ambient and fix endpoints");
    prune_collinear(pts);
    m.pts_ = std::move(pts);
    return m;
  }

  // circle lift over a period [t, t+1]
  require_strictly_monotone(pts);
  if (pts.back().x != pts.front().x + 1 || pts.back().y != pts.front().y + 1)
    fail(Errc::not_a_homeomorphism, "circle lift must advance by exactly 1 over one period");
  pts.pop_back();
  // shift every breakpoint into x in [0,1); the lift satisfies y(x+k) = y(x)+k
  for (auto &p : pts) {
    Rational k = p.x.floor();
    p.x -= k;
    p.y -= k;
  }
  std::sort(pts.begin(), pts.end(),
            [](const Breakpoint &a, const Breakpoint &b) { return a.x < b.x; });
  if (pts.front().x != Rational(0)) {
    // value at 0 from the segment wrapping the seam
    Breakpoint last = pts.back();
    Breakpoint wrap{pts.front().x + 1, pts.front().y + 1};
    Rational y1 = interp(last, wrap, Rational(1));
    pts.insert(pts.begin(), Breakpoint{Rational(0), y1 - 1});
  }
  Rational k0 = pts.front().y.floor();
  if (!k0.is_zero())
    for (auto &p : pts) p.y -= k0;
  pts.push_back(Breakpoint{Rational(1), pts.front().y + 1});
  require_strictly_monotone(pts);
  prune_collinear(pts);
  m.pts_ = std::move(pts);
  return m;
}

PLMap PLMap::identity(const Ambient &amb) {
  if (amb.is_circle())
    return from_breakpoints({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}}, amb);
  return from_breakpoints({{amb.lo, amb.lo}, {amb.hi, amb.hi}}, amb);
}

Rational PLMap::eval_lift(const Rational &x) const {
  Rational u = x, shift(0);
  if (ambient_.is_circle()) {
    shift = x.floor();
    u = x - shift;
  } else if (x < ambient_.lo || ambient_.hi < x) {
    fail(Errc::out_of_domain, "x = " + x.str() + " outside ambient");
  }
  // binary search for the segment containing u
  size_t lo = 0, hi = pts_.size() - 1;
  while (lo + 1 < hi) {
    size_t mid = (lo + hi) / 2;
    if (pts_[mid].x <= u)
      lo = mid;
    else
      hi = mid;
  }
  return interp(pts_[lo], pts_[lo + 1], u) + shift;
}

Rational PLMap::eval(const Rational &x) const {
  Rational y = eval_lift(x);
  return ambient_.is_circle() ? y.frac() : y;
}

bool PLMap::has_fixed_point() const {
  if (!ambient_.is_circle()) return true;
  Rational dmin = pts_[0].y - pts_[0].x, dmax = dmin;
  for (const auto &p : pts_) {
    Rational d = p.y - p.x;
    dmin = min(dmin, d);
    dmax = max(dmax, d);
  }
  // displacement is PL and monotone between breakpoints, so it hits an
  // integer iff some integer lies in [dmin, dmax]
  return dmax.floor() >= dmin;
}

PLMap compose(const PLMap &outer, const PLMap &inner) {
  if (!(outer.ambient() == inner.ambient())) fail(Errc::ambient_mismatch, "compose");
  const Ambient &amb = outer.ambient();
  PLMap inv = invert(inner);
  std::vector<Rational> xs;
  if (!amb.is_circle()) {
    for (const auto &p : inner.breakpoints()) xs.push_back(p.x);
    for (const auto &p : outer.breakpoints()) xs.push_back(inv.eval(p.x));
  } else {
    for (const auto &p : inner.breakpoints())
      if (p.x < Rational(1)) xs.push_back(p.x);
    for (const auto &p : outer.breakpoints())
      if (p.x < Rational(1)) xs.push_back(inv.eval(p.x));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Breakpoint> pts;
  pts.reserve(xs.size() + 1);
  for (const auto &t : xs) pts.push_back({t, outer.eval_lift(inner.eval_lift(t))});
  if (amb.is_circle()) pts.push_back({pts.front().x + 1, pts.front().y + 1});
  return PLMap::from_breakpoints(std::move(pts), amb);
}

PLMap invert(const PLMap &m) {
  std::vector<Breakpoint> pts;
  pts.reserve(m.breakpoints().size());
  for (const auto &p : m.breakpoints()) pts.push_back({p.y, p.x});
  return PLMap::from_breakpoints(std::move(pts), m.ambient());
}

ArcSet image_arcset(const PLMap &m, const ArcSet &a) {
  if (!(m.ambient() == a.ambient())) fail(Errc::ambient_mismatch, "image_arcset");
  if (a.is_full()) return a;
  std::vector<Arc> images;
  images.reserve(a.arcs().size());
  for (const auto &arc : a.arcs()) {
    if (!m.ambient().is_circle()) {
      images.emplace_back(m.eval(arc.lo), m.eval(arc.hi), false);
      continue;
    }
    Rational s = m.eval_lift(arc.lo);
    Rational e = m.eval_lift(arc.wraps ? arc.hi + 1 : arc.hi);
    Rational base = s.floor();
    s -= base;
    e -= base;
    if (e <= Rational(1))
      images.emplace_back(s, e, false);
    else
      images.emplace_back(s, e - 1, true);
  }
  return canonicalize(a.ambient(), std::move(images));
}

ArcSet preimage_arcset(const PLMap &m, const ArcSet &a) { return image_arcset(invert(m), a); }

} // namespace plifs
