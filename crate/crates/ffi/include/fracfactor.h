#ifndef FRACFACTOR_H
#define FRACFACTOR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define FF_MATRIX_ADJACENCY 0

#define FF_MATRIX_SIGNLESS_LAPLACIAN 1

#define FF_METHOD_STRUCTURAL 0

#define FF_METHOD_LP 1

typedef enum FfStatus {
  FF_STATUS_OK = 0,
  FF_STATUS_NULL_POINTER = 1,
  FF_STATUS_INVALID_ARGUMENT = 2,
  FF_STATUS_PARSE = 3,
  FF_STATUS_CAPACITY = 4,
  FF_STATUS_NO_CONVERGENCE = 5,
  FF_STATUS_DISCONNECTED = 6,
  FF_STATUS_BUFFER_TOO_SMALL = 7,
  FF_STATUS_IO = 8,
  FF_STATUS_PANIC = 9,
} FfStatus;

// Opaque graph handle.
typedef struct FfGraph FfGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a NUL-terminated graph6 string.
//
// # Safety
// `text` must be a valid C string and `out` writable.
enum FfStatus ff_graph_from_graph6(const char *text, struct FfGraph **out);

// # Safety
// `out` must be writable.
enum FfStatus ff_graph_complete(size_t n, struct FfGraph **out);

// `K_{a-1} ∇ (K_1 ∪ K_{n-a})`.
//
// # Safety
// `out` must be writable.
enum FfStatus ff_graph_construct_h(size_t n, size_t a, struct FfGraph **out);

// `K_{4a+1} ∇ (K_2 ∪ K_{n-4a-3})`.
//
// # Safety
// `out` must be writable.
enum FfStatus ff_graph_construct_l(size_t n, size_t a, struct FfGraph **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `g` must come from this library and not be used afterwards.
void ff_graph_free(struct FfGraph *g);

// Number of vertices; 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t ff_graph_vertex_count(const struct FfGraph *g);

// Number of edges; 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t ff_graph_edge_count(const struct FfGraph *g);

// Writes the graph6 encoding, NUL-terminated, into `buf` of `len` bytes.
// `required` (if non-null) receives the needed size including the NUL;
// `FF_STATUS_BUFFER_TOO_SMALL` is returned when `len` is smaller.
//
// # Safety
// `buf` must be writable for `len` bytes (or null when `len` is 0).
enum FfStatus ff_graph_to_graph6(const struct FfGraph *g, char *buf, size_t len, size_t *required);

// Largest eigenvalue of the adjacency (`FF_MATRIX_ADJACENCY`) or signless
// Laplacian (`FF_MATRIX_SIGNLESS_LAPLACIAN`) matrix.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum FfStatus ff_spectral_radius(const struct FfGraph *g, uint32_t matrix, double tol, double *out);

// Fractional `[a,b]`-coveredness by `FF_METHOD_STRUCTURAL` or `FF_METHOD_LP`.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum FfStatus ff_is_covered(const struct FfGraph *g,
                            uint32_t a,
                            uint32_t b,
                            uint32_t method,
                            bool *out);

// Existence of a fractional `[a,b]`-factor.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum FfStatus ff_has_factor(const struct FfGraph *g,
                            uint32_t a,
                            uint32_t b,
                            uint32_t method,
                            bool *out);

// Whether the graph is isomorphic to `H(n,a)` with `n` its order.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum FfStatus ff_is_h_graph(const struct FfGraph *g, size_t a, bool *out);

// The coveredness verdict with its certificate as a JSON string. Release it
// with [`ff_string_free`].
//
// # Safety
// `g` must be a live handle and `out` writable.
enum FfStatus ff_covered_certificate_json(const struct FfGraph *g,
                                          uint32_t a,
                                          uint32_t b,
                                          uint32_t method,
                                          char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void ff_string_free(char *s);

// Message of the last failed call on this thread, or null. Valid until the
// next failing call on the same thread.
const char *ff_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *ff_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FRACFACTOR_H */
