#pragma once

#include <set>
#include <string>
#include <vector>

#include "plifs/plmap.hpp"

namespace plifs {

struct Generator {
  std::string name;
  PLMap map;
};

// Finitely many named generators acting forward on a shared ambient.
class IFSystem {
public:
  IFSystem(Ambient amb, std::vector<Generator> gens);

  const Ambient &ambient() const { return ambient_; }
  const std::vector<Generator> &generators() const { return gens_; }
  long size() const { return static_cast<long>(gens_.size()); }

private:
  Ambient ambient_;
  std::vector<Generator> gens_;
};

// Generator indices, applied right to left; empty word is the identity.
using Word = std::vector<int>;

struct EngineLimits {
  long max_arcs = 1000000;
  long max_orbit_points = 1000000;
};

struct IterationTrace {
  ArcSet seed;
  std::vector<ArcSet> levels; // levels[0] == seed
  std::vector<ComponentStats> stats;
  bool overflow = false;

  explicit IterationTrace(ArcSet s) : seed(std::move(s)) {}
  int depth() const { return static_cast<int>(levels.size()) - 1; }
  const ArcSet &final_level() const { return levels.back(); }
};

ArcSet step(const IFSystem &ifs, const ArcSet &a);
IterationTrace iterate(const IFSystem &ifs, const ArcSet &seed, int k,
                       const EngineLimits &limits = {});

Rational eval_word(const IFSystem &ifs, const Word &w, const Rational &x);
ArcSet apply_word(const IFSystem &ifs, const Word &w, const ArcSet &a);
// Union of w(seed) over all words of length exactly k (equivalence oracle
// for iterate, which unfolds to the same union level by level).
ArcSet brute_force_level(const IFSystem &ifs, const ArcSet &seed, int k);

struct Orbit {
  std::vector<Rational> points; // sorted, deduplicated
  bool truncated = false;
};

// Breadth-first enumeration of {phi(x) : |phi| <= max_len} with exact dedup.
Orbit orbit_closure(const IFSystem &ifs, const Rational &x, int max_len,
                    const EngineLimits &limits = {});
ArcSet orbit_arcset(const IFSystem &ifs, const Rational &x, int max_len,
                    const EngineLimits &limits = {});

bool check_forward_invariance(const IFSystem &ifs, const ArcSet &a);

// True iff preimage(gen, a) ∩ window ⊆ within for every generator. The
// default reference set is a itself; level-consistent checks against a
// nested trace pass the previous level as `within`.
bool check_backward_property(const IFSystem &ifs, const ArcSet &a, const Arc &window);
bool check_backward_property(const IFSystem &ifs, const ArcSet &a, const Arc &window,
                             const ArcSet &within);

// True iff every arc of target holds an orbit point within eps (one-sided
// Hausdorff from target to the orbit). Stops enumerating as soon as the
// density holds; throws Overflow if the point cap is hit first.
bool check_density(const IFSystem &ifs, const Rational &x, const ArcSet &target,
                   const Rational &eps, int max_len, const EngineLimits &limits = {});

// Max over points of `target` of the distance to the sorted point set.
Rational target_to_points_distance(const ArcSet &target, const std::vector<Rational> &pts);

} // namespace plifs
