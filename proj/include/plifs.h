/*
 * plifs - exact piecewise-linear iterated function systems on the circle.
 *
 * C interface to the C++ core: opaque handles, status codes, JSON strings
 * for structured data. All rationals cross the boundary as "p/q" decimal
 * strings in lowest terms. Strings returned through char** outputs are
 * heap-allocated; release them with plifs_string_free.
 */

#ifndef PLIFS_H
#define PLIFS_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum plifs_status {
  PLIFS_OK = 0,
  PLIFS_ERR_INVALID_ARC = 1,
  PLIFS_ERR_AMBIENT_MISMATCH = 2,
  PLIFS_ERR_EMPTY_SET = 3,
  PLIFS_ERR_NOT_A_HOMEOMORPHISM = 4,
  PLIFS_ERR_OUT_OF_DOMAIN = 5,
  PLIFS_ERR_INVALID_GEOMETRY = 6,
  PLIFS_ERR_INFEASIBLE_SLOPES = 7,
  PLIFS_ERR_OVERFLOW = 8,
  PLIFS_ERR_INSUFFICIENT_DEPTH = 9,
  PLIFS_ERR_EVIDENCE_CONTRADICTS_METADATA = 10,
  PLIFS_ERR_DEPTH_EXCEEDS_DATA = 11,
  PLIFS_ERR_PARSE = 12,
  PLIFS_ERR_INVALID_ARGUMENT = 13,
  PLIFS_ERR_INTERNAL = 14
} plifs_status;

typedef struct plifs_arcset plifs_arcset;
typedef struct plifs_plmap plifs_plmap;
typedef struct plifs_bundle plifs_bundle;
typedef struct plifs_trace plifs_trace;

const char *plifs_version(void);
const char *plifs_status_name(plifs_status s);
/* message of the last error raised on this thread, empty if none */
const char *plifs_last_error(void);
void plifs_string_free(char *s);

/* ---- canonical arc sets -------------------------------------------------- */

plifs_status plifs_arcset_from_json(const char *json, plifs_arcset **out);
plifs_status plifs_arcset_to_json(const plifs_arcset *s, char **out);
void plifs_arcset_free(plifs_arcset *s);

plifs_status plifs_arcset_union(const plifs_arcset *a, const plifs_arcset *b,
                                plifs_arcset **out);
plifs_status plifs_arcset_intersect(const plifs_arcset *a, const plifs_arcset *b,
                                    plifs_arcset **out);
plifs_status plifs_arcset_complement(const plifs_arcset *a, plifs_arcset **out);
/* exact Hausdorff distance as a "p/q" string */
plifs_status plifs_arcset_hausdorff(const plifs_arcset *a, const plifs_arcset *b, char **out);
/* {"count":n,"min_len":"p/q","max_len":"p/q","total_len":"p/q"} */
plifs_status plifs_arcset_stats(const plifs_arcset *s, char **out);
/* 1 when equal as point sets, 0 otherwise, -1 on invalid arguments */
int plifs_arcset_equal(const plifs_arcset *a, const plifs_arcset *b);

/* ---- piecewise-linear homeomorphisms ------------------------------------- */

plifs_status plifs_plmap_from_json(const char *json, plifs_plmap **out);
plifs_status plifs_plmap_to_json(const plifs_plmap *m, char **out);
void plifs_plmap_free(plifs_plmap *m);

plifs_status plifs_plmap_eval(const plifs_plmap *m, const char *x, char **out);
plifs_status plifs_plmap_compose(const plifs_plmap *outer, const plifs_plmap *inner,
                                 plifs_plmap **out);
plifs_status plifs_plmap_invert(const plifs_plmap *m, plifs_plmap **out);
plifs_status plifs_plmap_image(const plifs_plmap *m, const plifs_arcset *a,
                               plifs_arcset **out);
plifs_status plifs_plmap_preimage(const plifs_plmap *m, const plifs_arcset *a,
                                  plifs_arcset **out);

/* ---- the example systems and their dynamics ------------------------------ */

/* n in 1..7; finite_variant selects the fixed-point variant of example 1;
 * psi_depth (>=1) controls the gap-matching depth behind example 7 (pass 0
 * for the default). */
plifs_status plifs_example_build(int n, int finite_variant, int psi_depth,
                                 plifs_bundle **out);
plifs_status plifs_bundle_to_json(const plifs_bundle *b, char **out);
void plifs_bundle_free(plifs_bundle *b);

/* iterate the set dynamics from the bundle seed; arc_cap <= 0 means the
 * default cap of 10^6 arcs; returns PLIFS_ERR_OVERFLOW with a partial trace
 * when the cap interrupts the iteration */
plifs_status plifs_bundle_iterate(const plifs_bundle *b, int depth, long arc_cap,
                                  plifs_trace **out);
plifs_status plifs_trace_to_json(const plifs_trace *t, char **out);
plifs_status plifs_trace_to_csv(const plifs_trace *t, char **out);
int plifs_trace_overflowed(const plifs_trace *t);
void plifs_trace_free(plifs_trace *t);

/* breadth-first orbit closure of a point under words up to max_len */
plifs_status plifs_bundle_orbit(const plifs_bundle *b, const char *point, int max_len,
                                long point_cap, char **out);
/* iterate + decompose + classify + excluded-case verdict, as JSON */
plifs_status plifs_bundle_classify(const plifs_bundle *b, int depth, long arc_cap,
                                   char **out);
plifs_status plifs_bundle_cantorval(const plifs_bundle *b, int depth, int depth_checks,
                                    long arc_cap, int *out_value, char **out_json);
/* gap-matching homeomorphism report; pair is "triadic" or "example7" */
plifs_status plifs_psi_report(const char *pair, int depth, char **out);

/* full acceptance matrix; *out_failures receives the number of failed
 * criteria, the report is a JSON array with one entry per criterion */
plifs_status plifs_verify_all(char **out_report, int *out_failures);

#ifdef __cplusplus
}
#endif

#endif /* PLIFS_H */
