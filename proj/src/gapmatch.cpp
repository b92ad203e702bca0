#include "plifs/gapmatch.hpp"

#include <algorithm>
#include <deque>

#include "plifs/errors.hpp"

namespace plifs {

Rational PsiMap::eval(const Rational &x) const {
  if (x < domain.lo || domain.hi < x) fail(Errc::out_of_domain, "psi eval outside host");
  size_t lo = 0, hi = pts.size() - 1;
  while (lo + 1 < hi) {
    size_t mid = (lo + hi) / 2;
    if (pts[mid].x <= x)
      lo = mid;
    else
      hi = mid;
  }
  const Breakpoint &a = pts[lo], &b = pts[lo + 1];
  return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
}

namespace {

void validate_gap_data(const GapData &g) {
  if (!(g.host.lo < g.host.hi)) fail(Errc::invalid_geometry, "trivial gap host");
  for (const auto &t : g.gaps) {
    if (t.gap.wraps || !(g.host.lo < t.gap.lo) || !(t.gap.hi < g.host.hi) ||
        !(t.gap.lo < t.gap.hi))
      fail(Errc::invalid_geometry, "gap not strictly inside host");
  }
}

// maximal-length gap of the wanted family strictly inside (lo, hi);
// leftmost wins ties; nullptr when the region holds none
const TaggedGap *pick_gap(const GapData &g, GapFamily fam, const Rational &lo,
                          const Rational &hi) {
  const TaggedGap *best = nullptr;
  for (const auto &t : g.gaps) {
    if (t.family != fam) continue;
    if (!(lo < t.gap.lo) || !(t.gap.hi < hi)) continue;
    if (!best) {
      best = &t;
      continue;
    }
    Rational lb = best->gap.length(), lt = t.gap.length();
    if (lt > lb || (lt == lb && t.gap.lo < best->gap.lo)) best = &t;
  }
  return best;
}

struct Region {
  Rational lo1, hi1, lo2, hi2;
  int level;
};

} // namespace

PsiMap gap_matching_homeomorphism(const GapData &g1, const GapData &g2, int depth) {
  validate_gap_data(g1);
  validate_gap_data(g2);
  if (depth < 0) fail(Errc::invalid_geometry, "negative matcher depth");

  PsiMap psi;
  psi.domain = g1.host;
  psi.range = g2.host;
  psi.pts.push_back({g1.host.lo, g2.host.lo});
  psi.pts.push_back({g1.host.hi, g2.host.hi});

  std::deque<Region> queue;
  queue.push_back({g1.host.lo, g1.host.hi, g2.host.lo, g2.host.hi, 0});
  while (!queue.empty()) {
    Region r = queue.front();
    queue.pop_front();
    if (r.level > depth) continue;
    GapFamily fam = (r.level % 2 == 0) ? GapFamily::primary : GapFamily::secondary;
    const TaggedGap *a = pick_gap(g1, fam, r.lo1, r.hi1);
    const TaggedGap *b = pick_gap(g2, fam, r.lo2, r.hi2);
    if (!a || !b)
      fail(Errc::depth_exceeds_data, "no " +
                                         std::string(fam == GapFamily::primary ? "primary"
                                                                               : "secondary") +
                                         " gap available at matcher level " +
                                         std::to_string(r.level));
    psi.pts.push_back({a->gap.lo, b->gap.lo});
    psi.pts.push_back({a->gap.hi, b->gap.hi});
    psi.matches.push_back({a->gap, b->gap, fam, r.level});
    queue.push_back({r.lo1, a->gap.lo, r.lo2, b->gap.lo, r.level + 1});
    queue.push_back({a->gap.hi, r.hi1, b->gap.hi, r.hi2, r.level + 1});
  }

  std::sort(psi.pts.begin(), psi.pts.end(),
            [](const Breakpoint &a, const Breakpoint &b) { return a.x < b.x; });
  for (size_t i = 0; i + 1 < psi.pts.size(); ++i)
    if (!(psi.pts[i].x < psi.pts[i + 1].x) || !(psi.pts[i].y < psi.pts[i + 1].y))
      fail(Errc::invalid_geometry, "matched gaps out of order");

  // modulus of continuity: the largest image segment the recursion left to
  // linear interpolation (matched gaps map exactly)
  std::vector<Rational> matched_los;
  for (const auto &m : psi.matches) matched_los.push_back(m.from.lo);
  std::sort(matched_los.begin(), matched_los.end());
  psi.interp_modulus = Rational(0);
  for (size_t i = 0; i + 1 < psi.pts.size(); ++i) {
    bool is_match = std::binary_search(matched_los.begin(), matched_los.end(), psi.pts[i].x);
    if (is_match) continue;
    psi.interp_modulus = max(psi.interp_modulus, psi.pts[i + 1].y - psi.pts[i].y);
  }
  return psi;
}

} // namespace plifs
