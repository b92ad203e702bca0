#pragma once

#include <vector>

#include "plifs/plmap.hpp"

namespace plifs {

enum class GapFamily { primary, secondary };

struct TaggedGap {
  Arc gap; // closure of one complementary component, non-wrapping
  GapFamily family;
};

// The two complementary-gap families of a Cantor-set approximation inside a
// host interval [a,b] (a and b belong to the set). Gaps are pairwise
// disjoint with disjoint closures and lie strictly inside the host.
struct GapData {
  Arc host;
  std::vector<TaggedGap> gaps;
};

struct GapMatch {
  Arc from, to;
  GapFamily family;
  int level = 0;
};

// Increasing piecewise-linear bijection host1 -> host2 produced by matching
// maximal gaps (breakpoints at matched gap endpoints, linear in between).
struct PsiMap {
  Arc domain, range;
  std::vector<Breakpoint> pts; // strictly increasing in both coordinates
  std::vector<GapMatch> matches;
  Rational interp_modulus; // largest image length of a non-matched segment

  Rational eval(const Rational &x) const;
};

// Gap-matching recursion: level 0 matches the maximal primary gaps of both
// hosts (leftmost on ties), each following level matches, inside every open
// region between already-matched gaps, the maximal gap of the alternating
// family. Raises DepthExceedsData when a required region holds no gap of
// the needed family.
PsiMap gap_matching_homeomorphism(const GapData &g1, const GapData &g2, int depth);

} // namespace plifs
