#pragma once

#include <vector>

#include "plifs/rational.hpp"

namespace plifs {

enum class Space { circle, interval };

// The space the sets and maps live in: the circle [0,1) with 0 == 1, or a
// closed rational interval.
struct Ambient {
  Space space = Space::circle;
  Rational lo = 0, hi = 1;

  static Ambient circle() { return Ambient{Space::circle, 0, 1}; }
  static Ambient interval(Rational lo, Rational hi);

  bool is_circle() const { return space == Space::circle; }
  Rational diameter() const;

  bool operator==(const Ambient &o) const {
    return space == o.space && lo == o.lo && hi == o.hi;
  }
};

// A closed arc. On the circle a wrapped arc covers [lo,1) u [0,hi] with
// hi < lo; a point arc has lo == hi. The open_* flags are metadata produced
// by set_complement (which endpoints of the closure came from an open
// boundary); they never affect set algebra or serialization.
struct Arc {
  Rational lo, hi;
  bool wraps = false;
  bool open_lo = false, open_hi = false;

  Arc() = default;
  Arc(Rational l, Rational h, bool w = false) : lo(std::move(l)), hi(std::move(h)), wraps(w) {}

  Rational length() const { return wraps ? Rational(1) - lo + hi : hi - lo; }
  bool is_point() const { return !wraps && lo == hi; }

  bool operator==(const Arc &o) const { return lo == o.lo && hi == o.hi && wraps == o.wraps; }
};

struct ComponentStats {
  long count = 0;
  Rational min_len, max_len, total_len;
};

// Canonical finite union of pairwise disjoint (not even endpoint-touching)
// closed arcs, sorted by lo; a wrapped arc, if any, is unique and sorted
// last. The canonical form of a point set is unique, so equality of point
// sets is structural equality.
class ArcSet {
public:
  explicit ArcSet(Ambient amb) : ambient_(std::move(amb)) {}

  static ArcSet empty(const Ambient &amb) { return ArcSet(amb); }
  static ArcSet full(const Ambient &amb);
  static ArcSet single(const Ambient &amb, Arc a);
  static ArcSet of_points(const Ambient &amb, const std::vector<Rational> &pts);

  const Ambient &ambient() const { return ambient_; }
  const std::vector<Arc> &arcs() const { return arcs_; }
  bool empty_set() const { return arcs_.empty(); }
  bool is_full() const;
  long size() const { return static_cast<long>(arcs_.size()); }

  bool contains_point(const Rational &x) const;
  Rational total_length() const;

  bool operator==(const ArcSet &o) const;

  friend ArcSet canonicalize(const Ambient &amb, std::vector<Arc> arcs);
  friend ArcSet set_complement(const ArcSet &a);

private:
  Ambient ambient_;
  std::vector<Arc> arcs_; // canonical
};

ArcSet canonicalize(const Ambient &amb, std::vector<Arc> arcs);
ArcSet set_union(const ArcSet &a, const ArcSet &b);
ArcSet set_intersect(const ArcSet &a, const ArcSet &b);
ArcSet set_complement(const ArcSet &a);
bool subset_of(const ArcSet &a, const ArcSet &b);

// Exact Hausdorff distance; both sets must be nonempty and share an ambient.
Rational hausdorff_distance(const ArcSet &a, const ArcSet &b);
// One-sided variant: sup over points of a of the distance to b.
Rational directed_hausdorff(const ArcSet &a, const ArcSet &b);

ComponentStats component_stats(const ArcSet &a);

// Metric of the ambient: circle distance min(|x-y|, 1-|x-y|) or |x-y|.
Rational point_distance(const Ambient &amb, const Rational &x, const Rational &y);
Rational point_to_set_distance(const Rational &x, const ArcSet &b);

// Distance between two arcs as subsets (0 when they intersect).
Rational arc_gap(const Ambient &amb, const Arc &a, const Arc &b);

} // namespace plifs
