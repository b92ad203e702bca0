#pragma once

#include <vector>

#include "plifs/arcset.hpp"

namespace plifs {

struct Breakpoint {
  Rational x, y;
  bool operator==(const Breakpoint &o) const { return x == o.x && y == o.y; }
};

// Orientation-preserving piecewise-linear homeomorphism of its ambient.
//
// Interval maps are stored as breakpoints from (lo,lo) to (hi,hi); an
// increasing homeomorphism of a closed interval fixes both endpoints.
// Circle maps are stored as a degree-1 lift on [0,1]: x runs from 0 to 1,
// y is strictly increasing with y(1) = y(0) + 1 and y(0) in [0,1).
// Breakpoints are always collinearity-pruned, so equal maps compare equal.
class PLMap {
public:
  // Accepts interval breakpoints covering the ambient exactly, or circle
  // lift breakpoints over any period [t, t+1]; normalizes and validates.
  static PLMap from_breakpoints(std::vector<Breakpoint> pts, const Ambient &amb);
  static PLMap identity(const Ambient &amb);

  const Ambient &ambient() const { return ambient_; }
  const std::vector<Breakpoint> &breakpoints() const { return pts_; }

  Rational eval(const Rational &x) const;      // circle results reduced into [0,1)
  Rational eval_lift(const Rational &x) const; // circle lift value; interval same as eval

  bool has_fixed_point() const;

  bool operator==(const PLMap &o) const { return ambient_ == o.ambient_ && pts_ == o.pts_; }

private:
  explicit PLMap(Ambient amb) : ambient_(std::move(amb)) {}
  Ambient ambient_;
  std::vector<Breakpoint> pts_;
};

PLMap compose(const PLMap &outer, const PLMap &inner);
PLMap invert(const PLMap &m);

ArcSet image_arcset(const PLMap &m, const ArcSet &a);
ArcSet preimage_arcset(const PLMap &m, const ArcSet &a);

} // namespace plifs
