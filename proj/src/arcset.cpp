#include "plifs/arcset.hpp"

#include <algorithm>

#include "plifs/errors.hpp"

namespace plifs {

Ambient Ambient::interval(Rational lo, Rational hi) {
  if (!(lo < hi)) fail(Errc::invalid_arc, "interval ambient needs lo < hi");
  return Ambient{Space::interval, std::move(lo), std::move(hi)};
}

Rational Ambient::diameter() const { return is_circle() ? Rational(1) : hi - lo; }

namespace {

// Lift segment of a circle arc: [s, e] with s in [0,1), s <= e <= s+1.
struct Seg {
  Rational s, e;
};

Seg to_seg(const Arc &a) {
  if (a.wraps) return Seg{a.lo, a.hi + 1};
  return Seg{a.lo, a.hi};
}

Arc seg_to_arc(const Seg &g) {
  if (g.e <= Rational(1)) return Arc(g.s, g.e, false);
  return Arc(g.s, g.e - 1, true);
}

void validate_arc(const Ambient &amb, const Arc &a) {
  if (amb.is_circle()) {
    if (a.wraps) {
      if (!(a.lo < Rational(1)) || a.lo.sign() < 0 || a.hi.sign() < 0 || !(a.hi < a.lo))
        fail(Errc::invalid_arc, "bad wrapped arc [" + a.lo.str() + "," + a.hi.str() + "]");
    } else {
      if (a.lo.sign() < 0 || !(a.lo < Rational(1)) || a.hi < a.lo || Rational(1) < a.hi)
        fail(Errc::invalid_arc, "bad arc [" + a.lo.str() + "," + a.hi.str() + "]");
    }
  } else {
    if (a.wraps) fail(Errc::invalid_arc, "wrapped arc in interval ambient");
    if (a.lo < amb.lo || amb.hi < a.hi || a.hi < a.lo)
      fail(Errc::invalid_arc, "arc [" + a.lo.str() + "," + a.hi.str() + "] outside ambient [" +
                                  amb.lo.str() + "," + amb.hi.str() + "]");
  }
}

} // namespace

ArcSet ArcSet::full(const Ambient &amb) {
  ArcSet s(amb);
  s.arcs_.push_back(Arc(amb.lo, amb.hi, false));
  return s;
}

ArcSet ArcSet::single(const Ambient &amb, Arc a) { return canonicalize(amb, {std::move(a)}); }

ArcSet ArcSet::of_points(const Ambient &amb, const std::vector<Rational> &pts) {
  std::vector<Arc> arcs;
  arcs.reserve(pts.size());
  for (const auto &p : pts) arcs.emplace_back(p, p, false);
  return canonicalize(amb, std::move(arcs));
}

bool ArcSet::is_full() const {
  return arcs_.size() == 1 && !arcs_[0].wraps && arcs_[0].lo == ambient_.lo &&
         arcs_[0].hi == ambient_.hi;
}

bool ArcSet::contains_point(const Rational &x) const {
  Rational p = ambient_.is_circle() ? x.frac() : x;
  for (const auto &a : arcs_) {
    if (a.wraps) {
      if (a.lo <= p || p <= a.hi) return true;
    } else {
      if (a.lo <= p && p <= a.hi) return true;
      // a closed arc ending at 1 contains the circle point 0
      if (ambient_.is_circle() && a.hi == Rational(1) && p.is_zero()) return true;
    }
  }
  return false;
}

Rational ArcSet::total_length() const {
  Rational t;
  for (const auto &a : arcs_) t += a.length();
  return t;
}

bool ArcSet::operator==(const ArcSet &o) const {
  return ambient_ == o.ambient_ && arcs_ == o.arcs_;
}

ArcSet canonicalize(const Ambient &amb, std::vector<Arc> arcs) {
  for (const auto &a : arcs) validate_arc(amb, a);
  ArcSet out(amb);
  if (arcs.empty()) return out;

  if (!amb.is_circle()) {
    std::sort(arcs.begin(), arcs.end(),
              [](const Arc &a, const Arc &b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
    std::vector<Arc> merged;
    for (auto &a : arcs) {
      if (!merged.empty() && a.lo <= merged.back().hi) {
        if (merged.back().hi < a.hi) merged.back().hi = a.hi;
      } else {
        merged.push_back(Arc(a.lo, a.hi, false));
      }
    }
    out.arcs_ = std::move(merged);
    return out;
  }

  // circle: work on lift segments in [0,2)
  std::vector<Seg> segs;
  segs.reserve(arcs.size());
  for (const auto &a : arcs) {
    Seg g = to_seg(a);
    if (g.e - g.s >= Rational(1)) return ArcSet::full(amb);
    segs.push_back(std::move(g));
  }
  std::sort(segs.begin(), segs.end(),
            [](const Seg &a, const Seg &b) { return a.s < b.s || (a.s == b.s && a.e < b.e); });
  std::vector<Seg> merged;
  for (auto &g : segs) {
    if (!merged.empty() && g.s <= merged.back().e) {
      if (merged.back().e < g.e) merged.back().e = g.e;
    } else {
      merged.push_back(std::move(g));
    }
  }
  // merge across the seam: the last segment may reach past 1 into the first ones
  while (merged.size() > 1 && merged.back().e >= Rational(1) &&
         merged.front().s + 1 <= merged.back().e) {
    if (merged.back().e < merged.front().e + 1) merged.back().e = merged.front().e + 1;
    merged.erase(merged.begin());
  }
  if (merged.size() >= 1 && merged.back().e - merged.back().s >= Rational(1))
    return ArcSet::full(amb);

  out.arcs_.reserve(merged.size());
  for (const auto &g : merged) out.arcs_.push_back(seg_to_arc(g));
  return out;
}

static void require_same_ambient(const ArcSet &a, const ArcSet &b) {
  if (!(a.ambient() == b.ambient())) fail(Errc::ambient_mismatch, "ambient spaces differ");
}

ArcSet set_union(const ArcSet &a, const ArcSet &b) {
  require_same_ambient(a, b);
  std::vector<Arc> all = a.arcs();
  all.insert(all.end(), b.arcs().begin(), b.arcs().end());
  return canonicalize(a.ambient(), std::move(all));
}

ArcSet set_intersect(const ArcSet &a, const ArcSet &b) {
  require_same_ambient(a, b);
  std::vector<Arc> pieces;
  if (!a.ambient().is_circle()) {
    for (const auto &x : a.arcs())
      for (const auto &y : b.arcs()) {
        Rational lo = max(x.lo, y.lo), hi = min(x.hi, y.hi);
        if (lo <= hi) pieces.emplace_back(lo, hi, false);
      }
    return canonicalize(a.ambient(), std::move(pieces));
  }
  // circle: compare lift segments with both sides duplicated one period up
  auto segs_of = [](const ArcSet &s) {
    std::vector<Seg> v;
    for (const auto &arc : s.arcs()) {
      Seg g = to_seg(arc);
      v.push_back(g);
      v.push_back(Seg{g.s + 1, g.e + 1});
    }
    return v;
  };
  for (const auto &x : segs_of(a))
    for (const auto &y : segs_of(b)) {
      Rational lo = max(x.s, y.s), hi = min(x.e, y.e);
      if (lo <= hi && lo < Rational(2)) {
        Seg g{lo, hi};
        if (g.s >= Rational(1)) {
          g.s -= 1;
          g.e -= 1;
        }
        if (g.s < Rational(1)) pieces.push_back(seg_to_arc(g));
      }
    }
  return canonicalize(a.ambient(), std::move(pieces));
}

// Gaps between consecutive components, as lift segments (start, end) with
// end possibly past 1 on the circle. Boundary gaps of an interval ambient
// are included. Empty for full or empty sets.
static std::vector<Seg> component_gaps(const ArcSet &a) {
  std::vector<Seg> gaps;
  if (a.empty_set() || a.is_full()) return gaps;
  const auto &arcs = a.arcs();
  if (!a.ambient().is_circle()) {
    if (a.ambient().lo < arcs.front().lo) gaps.push_back(Seg{a.ambient().lo, arcs.front().lo});
    for (size_t i = 0; i + 1 < arcs.size(); ++i) gaps.push_back(Seg{arcs[i].hi, arcs[i + 1].lo});
    if (arcs.back().hi < a.ambient().hi) gaps.push_back(Seg{arcs.back().hi, a.ambient().hi});
    return gaps;
  }
  for (size_t i = 0; i < arcs.size(); ++i) {
    Seg cur = to_seg(arcs[i]);
    Rational next_s = (i + 1 < arcs.size()) ? to_seg(arcs[i + 1]).s : to_seg(arcs[0]).s + 1;
    gaps.push_back(Seg{cur.e, next_s});
  }
  return gaps;
}

ArcSet set_complement(const ArcSet &a) {
  const Ambient &amb = a.ambient();
  if (a.empty_set()) return ArcSet::full(amb);
  if (a.is_full()) return ArcSet::empty(amb);
  std::vector<Arc> gaps;
  for (const auto &g : component_gaps(a)) {
    if (g.e - g.s >= Rational(1)) return ArcSet::full(amb); // complement of points only
    Seg seg = g;
    if (amb.is_circle() && seg.s >= Rational(1)) {
      seg.s -= 1;
      seg.e -= 1;
    }
    gaps.push_back(amb.is_circle() ? seg_to_arc(seg) : Arc(seg.s, seg.e, false));
  }
  ArcSet out = canonicalize(amb, std::move(gaps));
  // closure endpoints that belong to a came from an open boundary
  for (auto &arc : out.arcs_) {
    arc.open_lo = a.contains_point(arc.lo);
    arc.open_hi = a.contains_point(arc.hi);
  }
  return out;
}

bool subset_of(const ArcSet &a, const ArcSet &b) { return set_intersect(a, b) == a; }

Rational point_distance(const Ambient &amb, const Rational &x, const Rational &y) {
  if (!amb.is_circle()) return (x - y).abs();
  Rational d = (x.frac() - y.frac()).abs();
  return min(d, Rational(1) - d);
}

Rational point_to_set_distance(const Rational &x, const ArcSet &b) {
  if (b.empty_set()) fail(Errc::empty_set, "distance to empty set");
  if (b.contains_point(x)) return Rational(0);
  bool first = true;
  Rational best;
  for (const auto &a : b.arcs()) {
    for (const Rational &p : {a.lo, a.hi}) {
      Rational d = point_distance(b.ambient(), x, p);
      if (first || d < best) {
        best = d;
        first = false;
      }
    }
  }
  return best;
}

Rational directed_hausdorff(const ArcSet &a, const ArcSet &b) {
  require_same_ambient(a, b);
  if (a.empty_set() || b.empty_set()) fail(Errc::empty_set, "hausdorff of empty set");
  std::vector<Rational> candidates;
  for (const auto &arc : a.arcs()) {
    candidates.push_back(arc.lo);
    candidates.push_back(arc.hi);
  }
  for (const auto &g : component_gaps(b)) {
    Rational mid = g.s + (g.e - g.s) / Rational(2);
    if (a.ambient().is_circle()) mid = mid.frac();
    if (a.contains_point(mid)) candidates.push_back(mid);
  }
  Rational best(0);
  for (const auto &c : candidates) best = max(best, point_to_set_distance(c, b));
  return best;
}

Rational hausdorff_distance(const ArcSet &a, const ArcSet &b) {
  return max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

ComponentStats component_stats(const ArcSet &a) {
  ComponentStats st;
  st.count = a.size();
  if (st.count == 0) return st;
  bool first = true;
  for (const auto &arc : a.arcs()) {
    Rational len = arc.length();
    if (first) {
      st.min_len = len;
      st.max_len = len;
      first = false;
    } else {
      st.min_len = min(st.min_len, len);
      st.max_len = max(st.max_len, len);
    }
    st.total_len += len;
  }
  return st;
}

Rational arc_gap(const Ambient &amb, const Arc &a, const Arc &b) {
  Seg x = amb.is_circle() ? to_seg(a) : Seg{a.lo, a.hi};
  Seg y = amb.is_circle() ? to_seg(b) : Seg{b.lo, b.hi};
  if (!amb.is_circle()) {
    if (max(x.s, y.s) <= min(x.e, y.e)) return Rational(0);
    return x.e < y.s ? y.s - x.e : x.s - y.e;
  }
  for (int k = -1; k <= 1; ++k)
    if (max(x.s, y.s + k) <= min(x.e, y.e + k)) return Rational(0);
  Rational best(1);
  for (const Rational &p : {a.lo, a.hi})
    for (const Rational &q : {b.lo, b.hi}) best = min(best, point_distance(amb, p, q));
  return best;
}

} // namespace plifs
