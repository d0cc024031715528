#ifndef LATPOLY_H
#define LATPOLY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes. The first four agree with the command-line exit codes.
typedef enum LatpolyStatus {
  LATPOLY_STATUS_OK = 0,
  LATPOLY_STATUS_INVALID_INPUT = 1,
  LATPOLY_STATUS_UNSUPPORTED = 2,
  LATPOLY_STATUS_INTERNAL = 3,
  LATPOLY_STATUS_NULL_POINTER = 4,
  LATPOLY_STATUS_PANIC = 5,
} LatpolyStatus;

// Opaque polytope handle.
typedef struct LatpolyPolytope LatpolyPolytope;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds the convex hull of `count` integer points of dimension `dim`,
// stored row by row in `coords` (`count * dim` values).
//
// # Safety
// `coords` must point to `count * dim` readable values and `out` must be
// writable.
enum LatpolyStatus latpoly_polytope_from_vertices(size_t dim,
                                                  size_t count,
                                                  const int64_t *coords,
                                                  struct LatpolyPolytope **out);

// Parses a JSON polytope document.
//
// # Safety
// `json` must be a NUL-terminated string and `out` must be writable.
enum LatpolyStatus latpoly_polytope_from_json(const char *json, struct LatpolyPolytope **out);

// Builds a named polytope such as `simplex:2:3` or `hirzebruch:1`.
//
// # Safety
// `name` must be a NUL-terminated string and `out` must be writable.
enum LatpolyStatus latpoly_polytope_builtin(const char *name, struct LatpolyPolytope **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `p` must come from this library and must not be used afterwards.
void latpoly_polytope_free(struct LatpolyPolytope *p);

// Ambient dimension, or 0 for a null handle.
//
// # Safety
// `p` must be null or a live handle.
size_t latpoly_polytope_dim(const struct LatpolyPolytope *p);

// Number of vertices, or 0 for a null handle.
//
// # Safety
// `p` must be null or a live handle.
size_t latpoly_polytope_vertex_count(const struct LatpolyPolytope *p);

// Number of lattice points in `m·P`, written as a decimal string since it
// may exceed 64 bits.
//
// # Safety
// `p` must be a live handle and `out` writable.
enum LatpolyStatus latpoly_count_points(const struct LatpolyPolytope *p, int64_t m, char **out);

// Whether every vertex has a lattice basis of primitive edge directions.
//
// # Safety
// `p` must be a live handle and `out` writable.
enum LatpolyStatus latpoly_is_delzant(const struct LatpolyPolytope *p, bool *out);

// Reflexivity after moving the unique interior lattice point to the
// origin. Polytopes without exactly one interior lattice point are not
// reflexive.
//
// # Safety
// `p` must be a live handle and `out` writable.
enum LatpolyStatus latpoly_is_reflexive(const struct LatpolyPolytope *p, bool *out);

// Runs a command by its command-line name (`ehrhart`, `classify`, ...)
// and writes the JSON result. `other` is only read by `equiv` and may be
// null otherwise.
//
// # Safety
// `command` must be a NUL-terminated string, `p` a live handle, `other`
// null or a live handle, and `out` writable.
enum LatpolyStatus latpoly_run_json(const char *command,
                                    const struct LatpolyPolytope *p,
                                    const struct LatpolyPolytope *other,
                                    char **out);

// Ehrhart polynomial as JSON.
//
// # Safety
// As for `latpoly_run_json`.
enum LatpolyStatus latpoly_ehrhart_json(const struct LatpolyPolytope *p, char **out);

// Classification verdict as JSON.
//
// # Safety
// As for `latpoly_run_json`.
enum LatpolyStatus latpoly_classify_json(const struct LatpolyPolytope *p, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and must not be used afterwards.
void latpoly_string_free(char *s);

// Message for the last failed call on this thread, or null. The pointer
// stays valid until the next library call on the same thread.
const char *latpoly_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LATPOLY_H */
