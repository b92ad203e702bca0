#pragma once

#include "plifs/engine.hpp"

namespace plifs {

struct DecomposeParams {
  Rational interior_floor = Rational(1, 10000);
  int stability_window = 3;
};

// Per-level evidence about the shrinking part of the trace.
// component_count_growth counts the components of each level that are not
// stable interior arcs or isolated points of the final level;
// max_component_length is the largest length among components appearing
// first at that level (has_new marks levels where any did).
struct CantorEvidence {
  std::vector<long> component_count_growth;
  std::vector<Rational> max_component_length;
  std::vector<bool> has_new;
};

enum class ClassLabel {
  Finite,
  Cantor,
  WholeSpace,
  InteriorPlusCantorPlusN_boundaryMeetsN,
  InteriorPlusN,
  InteriorPlusCantor_Cantorval,
};

const char *class_label_name(ClassLabel c);

struct Decomposition {
  explicit Decomposition(const Ambient &amb)
      : ambient(amb), interior(amb), isolated(amb), unresolved(amb), final_level(amb) {}

  Ambient ambient;
  ArcSet interior;   // arcs >= floor, unchanged across the stability window
  ArcSet isolated;   // point arcs farther than floor from every other component
  ArcSet unresolved; // the rest of the final level
  ArcSet final_level;
  std::vector<ArcSet> levels;
  CantorEvidence evidence;
  std::vector<long> point_counts; // point arcs per level
  int depth = 0;
  DecomposeParams params;

  // derived evidence flags
  bool exp_growth = false;           // residual count grows superlinearly, new lengths shrink
  bool counts_stable = false;        // residual counts constant across the window
  bool all_points_final = false;     // final level is a finite point set
  bool boundary_accumulated = false; // every interior endpoint approached geometrically
};

Decomposition decompose(const IterationTrace &trace, const DecomposeParams &params = {});

struct Confidence {
  bool proven = false;
  int depth = 0;
};

struct Classification {
  ClassLabel label;
  Confidence confidence;
};

struct BuilderMeta {
  bool has_declared = false;
  ClassLabel declared = ClassLabel::Finite;
  std::vector<Rational> n_witnesses;
};

// Label from the finite evidence; when the builder carries a proven class
// the evidence must be consistent with it or EvidenceContradictsMetadata
// is raised.
Classification classify(const Decomposition &d, const BuilderMeta &meta = {});

struct ExclusionVerdict {
  bool pass = true;
  int matched_case = 0; // 1..3 when an impossible combination is matched
};

ExclusionVerdict assert_not_excluded(const Decomposition &d);

// Finite-depth test of the symmetric-Cantorval definition: every level is
// geometrically close to the stabilized interior evidence, and every
// interior endpoint is accumulated from outside by shrinking components.
bool is_symmetric_cantorval(const IterationTrace &trace, int depth_checks,
                            const DecomposeParams &params = {});

} // namespace plifs
