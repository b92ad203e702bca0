#include "plifs.h"

#include <cstring>
#include <string>

#include "plifs/errors.hpp"
#include "plifs/json_io.hpp"
#include "plifs/verify.hpp"

using namespace plifs;

struct plifs_arcset {
  ArcSet value;
};
struct plifs_plmap {
  PLMap value;
};
struct plifs_bundle {
  ExampleBundle value;
};
struct plifs_trace {
  IterationTrace value;
};

namespace {

thread_local std::string g_last_error;

plifs_status status_of(Errc c) {
  switch (c) {
    case Errc::invalid_arc: return PLIFS_ERR_INVALID_ARC;
    case Errc::ambient_mismatch: return PLIFS_ERR_AMBIENT_MISMATCH;
    case Errc::empty_set: return PLIFS_ERR_EMPTY_SET;
    case Errc::not_a_homeomorphism: return PLIFS_ERR_NOT_A_HOMEOMORPHISM;
    case Errc::out_of_domain: return PLIFS_ERR_OUT_OF_DOMAIN;
    case Errc::invalid_geometry: return PLIFS_ERR_INVALID_GEOMETRY;
    case Errc::infeasible_slopes: return PLIFS_ERR_INFEASIBLE_SLOPES;
    case Errc::overflow: return PLIFS_ERR_OVERFLOW;
    case Errc::insufficient_depth: return PLIFS_ERR_INSUFFICIENT_DEPTH;
    case Errc::evidence_contradicts_metadata: return PLIFS_ERR_EVIDENCE_CONTRADICTS_METADATA;
    case Errc::depth_exceeds_data: return PLIFS_ERR_DEPTH_EXCEEDS_DATA;
    case Errc::parse_error: return PLIFS_ERR_PARSE;
  }
  return PLIFS_ERR_INTERNAL;
}

// the error message persists until the next failure, so callers may issue
// further successful calls before reading it
template <typename F> plifs_status wrap(F &&f) {
  try {
    f();
    return PLIFS_OK;
  } catch (const Error &e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception &e) {
    g_last_error = e.what();
    return PLIFS_ERR_INTERNAL;
  }
}

char *dup_string(const std::string &s) {
  char *out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

plifs_status invalid_argument(const char *what) {
  g_last_error = what;
  return PLIFS_ERR_INVALID_ARGUMENT;
}

EngineLimits limits_with_arcs(long arc_cap) {
  EngineLimits lim;
  if (arc_cap > 0) lim.max_arcs = arc_cap;
  return lim;
}

} // namespace

extern "C" {

const char *plifs_version(void) { return "1.0.0"; }

const char *plifs_status_name(plifs_status s) {
  switch (s) {
    case PLIFS_OK: return "ok";
    case PLIFS_ERR_INVALID_ARC: return "InvalidArc";
    case PLIFS_ERR_AMBIENT_MISMATCH: return "AmbientMismatch";
    case PLIFS_ERR_EMPTY_SET: return "EmptySet";
    case PLIFS_ERR_NOT_A_HOMEOMORPHISM: return "NotAHomeomorphism";
    case PLIFS_ERR_OUT_OF_DOMAIN: return "OutOfDomain";
    case PLIFS_ERR_INVALID_GEOMETRY: return "InvalidGeometry";
    case PLIFS_ERR_INFEASIBLE_SLOPES: return "InfeasibleSlopes";
    case PLIFS_ERR_OVERFLOW: return "Overflow";
    case PLIFS_ERR_INSUFFICIENT_DEPTH: return "InsufficientDepth";
    case PLIFS_ERR_EVIDENCE_CONTRADICTS_METADATA: return "EvidenceContradictsMetadata";
    case PLIFS_ERR_DEPTH_EXCEEDS_DATA: return "DepthExceedsData";
    case PLIFS_ERR_PARSE: return "ParseError";
    case PLIFS_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case PLIFS_ERR_INTERNAL: return "InternalError";
  }
  return "?";
}

const char *plifs_last_error(void) { return g_last_error.c_str(); }

void plifs_string_free(char *s) { delete[] s; }

plifs_status plifs_arcset_from_json(const char *json, plifs_arcset **out) {
  if (!json || !out) return invalid_argument("null argument");
  return wrap([&] { *out = new plifs_arcset{arcset_from_json(json)}; });
}

plifs_status plifs_arcset_to_json(const plifs_arcset *s, char **out) {
  if (!s || !out) return invalid_argument("null argument");
  return wrap([&] { *out = dup_string(arcset_to_json(s->value)); });
}

void plifs_arcset_free(plifs_arcset *s) { delete s; }

plifs_status plifs_arcset_union(const plifs_arcset *a, const plifs_arcset *b,
                                plifs_arcset **out) {
  if (!a || !b || !out) return invalid_argument("null argument");
  return wrap([&] { *out = new plifs_arcset{set_union(a->value, b->value)}; });
}

plifs_status plifs_arcset_intersect(const plifs_arcset *a, const plifs_arcset *b,
                                    plifs_arcset **out) {
  if (!a || !b || !out) return invalid_argument("null argument");
  return wrap([&] { *out = new plifs_arcset{set_intersect(a->value, b->value)}; });
}

plifs_status plifs_arcset_complement(const plifs_arcset *a, plifs_arcset **out) {
  if (!a || !out) return invalid_argument("null argument");
  return wrap([&] { *out = new plifs_arcset{set_complement(a->value)}; });
}

plifs_status plifs_arcset_hausdorff(const plifs_arcset *a, const plifs_arcset *b, char **out) {
  if (!a || !b || !out) return invalid_argument("null argument");
  return wrap([&] { *out = dup_string(hausdorff_distance(a->value, b->value).str()); });
}

plifs_status plifs_arcset_stats(const plifs_arcset *s, char **out) {
  if (!s || !out) return invalid_argument("null argument");
  return wrap([&] {
    ComponentStats st = component_stats(s->value);
    std::string j = "{\"count\":" + std::to_string(st.count) + ",\"min_len\":\"" +
                    st.min_len.str() + "\",\"max_len\":\"" + st.max_len.str() +
                    "\",\"total_len\":\"" + st.total_len.str() + "\"}";
    *out = dup_string(j);
  });
}

int plifs_arcset_equal(const plifs_arcset *a, const plifs_arcset *b) {
  if (!a || !b) return -1;
  return a->value == b->value ? 1 : 0;
}

plifs_status plifs_plmap_from_json(const char *json, plifs_plmap **out) {
  if (!json || !out) return invalid_argument("null argument");
  return wrap([&] { *out = new plifs_plmap{plmap_from_json(json)}; });
}

plifs_status plifs_plmap_to_json(const plifs_plmap *m, char **out) {
  if (!m || !out) return invalid_argument("null argument");
  return wrap([&] { *out = dup_string(plmap_to_json(m->value)); });
}

void plifs_plmap_free(plifs_plmap *m) { delete m; }

plifs_status plifs_plmap_eval(const plifs_plmap *m, const char *x, char **out) {
  if (!m || !x || !out) return invalid_argument("null argument");
  return wrap([&] { *out = dup_string(m->value.eval(Rational::parse(x)).str()); });
}

plifs_status plifs_plmap_compose(const plifs_plmap *outer, const plifs_plmap *inner,
                                 plifs_plmap **out) {
  if (!outer || !inner || !out) return invalid_argument("null argument");
  return wrap([&] { *out = new plifs_plmap{compose(outer->value, inner->value)}; });
}

plifs_status plifs_plmap_invert(const plifs_plmap *m, plifs_plmap **out) {
  if (!m || !out) return invalid_argument("null argument");
  return wrap([&] { *out = new plifs_plmap{invert(m->value)}; });
}

plifs_status plifs_plmap_image(const plifs_plmap *m, const plifs_arcset *a,
                               plifs_arcset **out) {
  if (!m || !a || !out) return invalid_argument("null argument");
  return wrap([&] { *out = new plifs_arcset{image_arcset(m->value, a->value)}; });
}

plifs_status plifs_plmap_preimage(const plifs_plmap *m, const plifs_arcset *a,
                                  plifs_arcset **out) {
  if (!m || !a || !out) return invalid_argument("null argument");
  return wrap([&] { *out = new plifs_arcset{preimage_arcset(m->value, a->value)}; });
}

plifs_status plifs_example_build(int n, int finite_variant, int psi_depth,
                                 plifs_bundle **out) {
  if (!out) return invalid_argument("null argument");
  return wrap([&] {
    *out = new plifs_bundle{
        build_example(n, finite_variant != 0, psi_depth > 0 ? psi_depth : 4)};
  });
}

plifs_status plifs_bundle_to_json(const plifs_bundle *b, char **out) {
  if (!b || !out) return invalid_argument("null argument");
  return wrap([&] { *out = dup_string(bundle_to_json(b->value)); });
}

void plifs_bundle_free(plifs_bundle *b) { delete b; }

plifs_status plifs_bundle_iterate(const plifs_bundle *b, int depth, long arc_cap,
                                  plifs_trace **out) {
  if (!b || !out) return invalid_argument("null argument");
  plifs_status st = wrap([&] {
    *out = new plifs_trace{
        iterate(b->value.ifs, b->value.seed, depth, limits_with_arcs(arc_cap))};
  });
  if (st == PLIFS_OK && (*out)->value.overflow) {
    g_last_error = "arc cap exceeded; trace is partial";
    return PLIFS_ERR_OVERFLOW;
  }
  return st;
}

plifs_status plifs_trace_to_json(const plifs_trace *t, char **out) {
  if (!t || !out) return invalid_argument("null argument");
  return wrap([&] { *out = dup_string(trace_to_json(t->value)); });
}

plifs_status plifs_trace_to_csv(const plifs_trace *t, char **out) {
  if (!t || !out) return invalid_argument("null argument");
  return wrap([&] { *out = dup_string(trace_to_csv(t->value)); });
}

int plifs_trace_overflowed(const plifs_trace *t) { return t && t->value.overflow ? 1 : 0; }

void plifs_trace_free(plifs_trace *t) { delete t; }

plifs_status plifs_bundle_orbit(const plifs_bundle *b, const char *point, int max_len,
                                long point_cap, char **out) {
  if (!b || !point || !out) return invalid_argument("null argument");
  plifs_status st = wrap([&] {
    EngineLimits lim;
    if (point_cap > 0) lim.max_orbit_points = point_cap;
    Orbit o = orbit_closure(b->value.ifs, Rational::parse(point), max_len, lim);
    *out = dup_string(orbit_to_json(o));
    if (o.truncated) {
      g_last_error = "orbit point cap exceeded; point list is partial";
      throw Error(Errc::overflow, g_last_error);
    }
  });
  return st;
}

plifs_status plifs_bundle_classify(const plifs_bundle *b, int depth, long arc_cap,
                                   char **out) {
  if (!b || !out) return invalid_argument("null argument");
  return wrap([&] {
    IterationTrace tr = iterate(b->value.ifs, b->value.seed, depth, limits_with_arcs(arc_cap));
    if (tr.overflow) fail(Errc::overflow, "arc cap exceeded during classification");
    Decomposition d = decompose(tr);
    Classification cls = classify(d, b->value.meta());
    ExclusionVerdict v = assert_not_excluded(d);
    *out = dup_string(classification_report_json(b->value.number, d, cls, v));
  });
}

plifs_status plifs_bundle_cantorval(const plifs_bundle *b, int depth, int depth_checks,
                                    long arc_cap, int *out_value, char **out_json) {
  if (!b || !out_value) return invalid_argument("null argument");
  return wrap([&] {
    IterationTrace tr = iterate(b->value.ifs, b->value.seed, depth, limits_with_arcs(arc_cap));
    if (tr.overflow) fail(Errc::overflow, "arc cap exceeded during cantorval check");
    bool v = is_symmetric_cantorval(tr, depth_checks);
    *out_value = v ? 1 : 0;
    if (out_json)
      *out_json = dup_string(cantorval_report_json(b->value.number, depth, depth_checks, v));
  });
}

plifs_status plifs_psi_report(const char *pair, int depth, char **out) {
  if (!pair || !out) return invalid_argument("null argument");
  return wrap([&] {
    std::string name(pair);
    Arc iprime(Rational(1, 4), Rational(3, 4));
    PsiMap psi;
    if (name == "triadic") {
      GapData tri = triadic_gap_data(iprime, depth + 3);
      psi = gap_matching_homeomorphism(tri, tri, depth);
    } else if (name == "example7") {
      Example7Constants k = example7_constants(iprime);
      GapData data = three_branch_gap_data(iprime, depth + 3);
      psi = gap_matching_homeomorphism(restrict_gap_data(data, Arc(k.a, k.x0)),
                                 restrict_gap_data(data, Arc(k.a, k.c)), depth);
    } else {
      fail(Errc::parse_error, "pair must be 'triadic' or 'example7'");
    }
    *out = dup_string(psi_to_json(name, depth, psi));
  });
}

plifs_status plifs_verify_all(char **out_report, int *out_failures) {
  if (!out_report || !out_failures) return invalid_argument("null argument");
  return wrap([&] {
    std::vector<CriterionResult> results = run_acceptance();
    int failures = 0;
    for (const auto &r : results)
      if (!r.pass) failures++;
    *out_failures = failures;
    *out_report = dup_string(acceptance_report_json(results));
  });
}

} // extern "C"
