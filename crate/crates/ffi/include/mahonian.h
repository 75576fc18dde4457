/* C bindings for the mahonian exact-combinatorics library. */

#ifndef MAHONIAN_H
#define MAHONIAN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum MhStatus {
  MH_STATUS_OK = 0,
  MH_STATUS_NULL_POINTER = 1,
  MH_STATUS_INVALID_UTF8 = 2,
  MH_STATUS_PARSE_ERROR = 3,
  MH_STATUS_INVALID_ARGUMENT = 4,
  MH_STATUS_BOUND_EXCEEDED = 5,
  MH_STATUS_UNKNOWN_NAME = 6,
  // The verification task ran to completion and found a counterexample.
  MH_STATUS_VERIFY_FAILED = 7,
  MH_STATUS_INTERNAL = 8,
} MhStatus;

// Opaque Laguerre digraph.
typedef struct MhDigraph MhDigraph;

// Opaque exact multivariate polynomial.
typedef struct MhPoly MhPoly;

// Opaque partial permutation in word form.
typedef struct MhWord MhWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Frees a string returned by this library. Passing null is a no-op.
//
// # Safety
// `s` must have been returned by a `mh_*` function and not freed before.
void mh_string_free(char *s);

// Library version as a malloc'd string.
enum MhStatus mh_version(char **out);

// Parses the space-separated word form (`*` for the hole symbol).
//
// # Safety
// `text` must be a valid NUL-terminated string; `out` a valid pointer.
enum MhStatus mh_word_parse(const char *text, struct MhWord **out);

// Builds a word from values, 0 encoding the hole.
//
// # Safety
// `vals` must point to `len` readable i64 values; `out` must be valid.
enum MhStatus mh_word_from_values(const int64_t *vals, uintptr_t len, struct MhWord **out);

// # Safety
// `w` must come from this library and not be freed twice.
void mh_word_free(struct MhWord *w);

// Renders the word in its text form.
//
// # Safety
// `w` must be a live handle; `out` a valid pointer.
enum MhStatus mh_word_render(const struct MhWord *w, char **out);

// Every word statistic as a JSON object.
//
// # Safety
// `w` must be a live handle; `out` a valid pointer.
enum MhStatus mh_word_stats_json(const struct MhWord *w, char **out);

// The Laguerre digraph of a word.
//
// # Safety
// `w` must be a live handle; `out` a valid pointer.
enum MhStatus mh_word_to_digraph(const struct MhWord *w, struct MhDigraph **out);

// Parses the digraph JSON form {"n":8,"succ":{"1":3,...}}.
//
// # Safety
// `json` must be a valid NUL-terminated string; `out` a valid pointer.
enum MhStatus mh_digraph_parse_json(const char *json, struct MhDigraph **out);

// # Safety
// `g` must come from this library and not be freed twice.
void mh_digraph_free(struct MhDigraph *g);

// Vertex classification and aggregate statistics as JSON.
//
// # Safety
// `g` must be a live handle; `out` a valid pointer.
enum MhStatus mh_digraph_stats_json(const struct MhDigraph *g, char **out);

// DOT rendering with class-labeled nodes.
//
// # Safety
// `g` must be a live handle; `out` a valid pointer.
enum MhStatus mh_digraph_to_dot(const struct MhDigraph *g, char **out);

// Σ b^rlmin q^stat over S_n^k; weight is one of
// "maj", "inv", "tilde-inv-filled", "rlmin".
//
// # Safety
// `weight` must be a valid NUL-terminated string; `out` a valid pointer.
enum MhStatus mh_distribution(uintptr_t n, uintptr_t k, const char *weight, struct MhPoly **out);

// Laguerre digraph enumerator over LD_{n,k}.
//
// # Safety
// `out` must be a valid pointer.
enum MhStatus mh_ld_enumerator(uintptr_t n, uintptr_t k, struct MhPoly **out);

// μ_{n,k} of a named preset ("euler", "beta_q", "digraph", "cyc",
// "alternating", "zhu").
//
// # Safety
// `preset` must be a valid NUL-terminated string; `out` a valid pointer.
enum MhStatus mh_mu_entry(const char *preset, uintptr_t n, uintptr_t k, struct MhPoly **out);

// # Safety
// `p` must come from this library and not be freed twice.
void mh_poly_free(struct MhPoly *p);

// Exact equality of two polynomials; null handles compare unequal.
//
// # Safety
// `a` and `b` must be live handles or null.
bool mh_poly_eq(const struct MhPoly *a, const struct MhPoly *b);

// # Safety
// `a` and `b` must be live handles; `out` a valid pointer.
enum MhStatus mh_poly_add(const struct MhPoly *a, const struct MhPoly *b, struct MhPoly **out);

// # Safety
// `a` and `b` must be live handles; `out` a valid pointer.
enum MhStatus mh_poly_mul(const struct MhPoly *a, const struct MhPoly *b, struct MhPoly **out);

// Canonical text rendering, e.g. "b^2+2bq".
//
// # Safety
// `p` must be a live handle; `out` a valid pointer.
enum MhStatus mh_poly_render_text(const struct MhPoly *p, char **out);

// JSON rendering with decimal-string coefficients.
//
// # Safety
// `p` must be a live handle; `out` a valid pointer.
enum MhStatus mh_poly_render_json(const struct MhPoly *p, char **out);

// Runs one verification task (`n_max` of 0 means the task default); the
// report lands in `out_report_json` whenever the task ran.
//
// # Safety
// `id` must be a valid NUL-terminated string; `out_report_json` may be null
// when the report is not wanted.
enum MhStatus mh_verify_run(const char *id, uintptr_t n_max, char **out_report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MAHONIAN_H */
