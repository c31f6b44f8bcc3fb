#ifndef SINGMAP_H
#define SINGMAP_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// How the `link` string passed to [`singmap_classify`] and [`singmap_map`]
// is written.
typedef enum SingmapInputKind {
  // `{"seifert":{...}}`, `{"lens":[p,q]}` or `{"graph":{...}}`
  SINGMAP_INPUT_KIND_JSON = 0,
  // `b;(p1,q1)(p2,q2)...`
  SINGMAP_INPUT_KIND_SEIFERT_SHORTHAND = 1,
  // `p,q`
  SINGMAP_INPUT_KIND_LENS_SHORTHAND = 2,
} SingmapInputKind;

// Result codes. Values 1 to 5 match the exit codes of the `singmap` tool.
typedef enum SingmapStatus {
  SINGMAP_STATUS_OK = 0,
  SINGMAP_STATUS_FAILURE = 1,
  SINGMAP_STATUS_PARSE_ERROR = 2,
  SINGMAP_STATUS_NOT_SINGULARITY_LINK = 3,
  SINGMAP_STATUS_INFINITE_FUNDAMENTAL_GROUP = 4,
  SINGMAP_STATUS_UNSUPPORTED_FAMILY = 5,
  SINGMAP_STATUS_NULL_ARGUMENT = 6,
  SINGMAP_STATUS_BUFFER_TOO_SMALL = 7,
  SINGMAP_STATUS_PANIC = 8,
} SingmapStatus;

// Opaque classification result.
typedef struct SingmapClassification SingmapClassification;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or null. The pointer
// stays valid until the next library call on the same thread.
const char *singmap_last_error(void);

// Releases a string returned by this library. Null is accepted.
//
// # Safety
// `s` is null or was returned by this library and not yet freed.
void singmap_string_free(char *s);

// Classifies a link. On `Ok`, and on `InfiniteFundamentalGroup` (where the
// report is still produced), `*out` receives a handle; otherwise it is set
// to null.
//
// # Safety
// `link` is a valid nul-terminated string and `out` is a valid pointer.
enum SingmapStatus singmap_classify(const char *link,
                                    enum SingmapInputKind kind,
                                    struct SingmapClassification **out);

// Like [`singmap_classify`], and also builds the invariant map and its
// relations. `max_degree = 0` selects the default relation search bound.
//
// # Safety
// `link` is a valid nul-terminated string and `out` is a valid pointer.
enum SingmapStatus singmap_map(const char *link,
                               enum SingmapInputKind kind,
                               uint32_t max_degree,
                               struct SingmapClassification **out);

// # Safety
// `handle` is null or was returned by this library and not yet freed.
void singmap_classification_free(struct SingmapClassification *handle);

// 1 when the link bounds a quotient singularity, 0 otherwise or for null.
//
// # Safety
// `handle` is null or a live handle.
int32_t singmap_classification_is_quotient(const struct SingmapClassification *handle);

// Order of the finite group, or 0 when there is none.
//
// # Safety
// `handle` is null or a live handle.
uint64_t singmap_classification_group_order(const struct SingmapClassification *handle);

// Multiplicity of the singularity, or -1 when not computed.
//
// # Safety
// `handle` is null or a live handle.
int64_t singmap_classification_multiplicity(const struct SingmapClassification *handle);

// Embedding dimension of the singularity, or -1 when not computed.
//
// # Safety
// `handle` is null or a live handle.
int64_t singmap_classification_embedding_dimension(const struct SingmapClassification *handle);

// Number of map components, or 0 when no map was built.
//
// # Safety
// `handle` is null or a live handle.
size_t singmap_classification_generator_count(const struct SingmapClassification *handle);

// Number of relations found, or 0 when no map was built.
//
// # Safety
// `handle` is null or a live handle.
size_t singmap_classification_relation_count(const struct SingmapClassification *handle);

// The `index`-th map component as a polynomial in `u, v`, or null.
//
// # Safety
// `handle` is null or a live handle.
char *singmap_classification_generator(const struct SingmapClassification *handle, size_t index);

// The `index`-th relation in `x1, x2, ...`, or null.
//
// # Safety
// `handle` is null or a live handle.
char *singmap_classification_relation(const struct SingmapClassification *handle, size_t index);

// The full report as JSON, identical to the command-line output.
//
// # Safety
// `handle` is null or a live handle.
char *singmap_classification_to_json(const struct SingmapClassification *handle);

// The human-readable report.
//
// # Safety
// `handle` is null or a live handle.
char *singmap_classification_to_text(const struct SingmapClassification *handle);

// Hirzebruch–Jung continued fraction of `p/q`. Writes up to `capacity`
// entries to `out` and the full length to `*len`; returns
// `BufferTooSmall` when `capacity < *len`. `out` may be null when
// `capacity` is 0, to query the length.
//
// # Safety
// `out` points to `capacity` writable `int64_t` and `len` is valid.
enum SingmapStatus singmap_hj_expand(int64_t p,
                                     int64_t q,
                                     int64_t *out,
                                     size_t capacity,
                                     size_t *len);

// Checks exactly whether `relation` (in `x1..xn`) vanishes on the `n`
// homogeneous polynomials `generators` (in `u, v`). Sets `*holds` to 1 or 0.
//
// # Safety
// `relation` and each of the `n` entries of `generators` are valid
// nul-terminated strings; `holds` is valid.
enum SingmapStatus singmap_verify_relation(const char *relation,
                                           const char *const *generators,
                                           size_t n,
                                           int32_t *holds);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* SINGMAP_H */
