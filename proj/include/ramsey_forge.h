/* C interface to the ramsey-forge core.
 *
 * Conventions: every function that can fail returns rf_status; RF_OK is 0.
 * Output strings are heap-allocated UTF-8, released with rf_string_free.
 * Handles are opaque, immutable after creation, safe to share across
 * threads, and released with their _free function. Command-level entry
 * points produce the same JSON certificates the CLI emits; reruns with equal
 * arguments produce byte-identical output.
 */
#ifndef RAMSEY_FORGE_H
#define RAMSEY_FORGE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define RF_API __declspec(dllexport)
#else
#define RF_API __attribute__((visibility("default")))
#endif

typedef enum rf_status {
  RF_OK = 0,
  RF_FAIL_MATH = 1,   /* the run finished; the mathematical claim failed */
  RF_ERR_PARSE = 2,   /* malformed input text */
  RF_ERR_INVALID = 3, /* arguments violate a precondition */
  RF_ERR_UNSUPPORTED = 4,
  RF_ERR_INTERNAL = 5
} rf_status;

typedef enum rf_tri { RF_TRI_FALSE = 0, RF_TRI_UNKNOWN = 1, RF_TRI_TRUE = 2 } rf_tri;

RF_API const char* rf_status_name(rf_status status);
RF_API uint32_t rf_version(void);
RF_API void rf_string_free(char* s);

/* ---- periodic sets: "mod=M; res=[..]; plus=[..]; minus=[..]" ---- */

typedef struct rf_pset rf_pset;

RF_API rf_status rf_pset_parse(const char* text, rf_pset** out);
RF_API rf_status rf_pset_format(const rf_pset* set, char** out);
/* op: "union" | "intersect" | "difference" */
RF_API rf_status rf_pset_combine(const char* op, const rf_pset* a, const rf_pset* b,
                                 rf_pset** out);
RF_API int rf_pset_contains(const rf_pset* set, uint64_t n);
RF_API int rf_pset_is_cofinite(const rf_pset* set);
RF_API int rf_pset_is_finite(const rf_pset* set);
RF_API void rf_pset_free(rf_pset* set);

/* ---- germs: "std:N" or "ql:p=P;base=[..];drift=[..];onset=N" ---- */

typedef struct rf_germ rf_germ;

RF_API rf_status rf_germ_parse(const char* text, rf_germ** out);
RF_API rf_status rf_germ_format(const rf_germ* germ, char** out);
RF_API rf_status rf_germ_eq(const rf_germ* a, const rf_germ* b, rf_tri* out);
RF_API rf_status rf_germ_member(const rf_germ* germ, const rf_pset* set, rf_tri* out);
RF_API rf_status rf_germ_apply_affine(uint64_t u, uint64_t v, const rf_germ* germ, rf_germ** out);
RF_API int rf_germ_is_nonstandard(const rf_germ* germ);
RF_API uint64_t rf_germ_value_at(const rf_germ* germ, uint64_t index);
RF_API void rf_germ_free(rf_germ* germ);

/* ---- command-level runs; *json_out receives the certificate ---- */

/* RF_OK when all axioms pass, RF_FAIL_MATH otherwise. */
RF_API rf_status rf_run_axioms(const char* space, uint64_t ground, uint64_t depth,
                               uint64_t trials, char** json_out);

/* Runs the homogenization chain and the brute-force search on one coloring
 * (text in CSV, or JSON when coloring_is_json). threshold < 0 selects the
 * per-node majority rule. RF_FAIL_MATH when the two routes disagree. */
RF_API rf_status rf_run_ramsey(const char* coloring_text, int coloring_is_json, uint32_t k,
                               int64_t threshold, char** json_out);

/* Monochromatic-unions search for `blocks` blocks on a subsets coloring. */
RF_API rf_status rf_run_unions_search(const char* coloring_text, int coloring_is_json,
                                      uint32_t blocks, char** json_out);

RF_API rf_status rf_run_unions_number(uint32_t blocks, uint32_t colors, uint64_t max_n,
                                      int audit, uint32_t jobs, char** json_out);

RF_API rf_status rf_run_ramsey_number(uint32_t n, uint32_t k, uint32_t colors, uint64_t max_n,
                                      int audit, uint32_t jobs, char** json_out);

/* Shrinks the uniform tree with the given stem and branch set into the
 * family of nodes over `h_set`, checking the largeness promise to depth.
 * Stems are JSON: [0,2] (ellentuck) or [[0],[1,2]] (milliken).
 * RF_FAIL_MATH reports a promise violation; the certificate carries the
 * offending node. */
RF_API rf_status rf_run_fuse(const char* space, const char* stem_json, const char* branch_set,
                             const char* filter_spec, const char* h_set, uint64_t depth,
                             uint64_t bound, char** json_out);

/* Validates the uniform tree as a filter tree for the constant assignment
 * and extracts the greedy diagonal stream through it. */
RF_API rf_status rf_run_diag(const char* space, const char* stem_json, const char* branch_set,
                             const char* filter_spec, uint64_t depth, uint64_t bound,
                             char** json_out);

/* Evaluates one germ-calculus expression:
 *   eq <germ> <germ> | member <germ> in <set> | apply <u> <v> <germ>
 */
RF_API rf_status rf_eval_germ(const char* expr, char** json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RAMSEY_FORGE_H */
