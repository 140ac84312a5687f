#ifndef CIRCUMWIDTH_H
#define CIRCUMWIDTH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CwFormat {
  CW_FORMAT_EDGE_LIST = 0,
  CW_FORMAT_GRAPH6 = 1,
} CwFormat;

/*
 Status codes; the nonzero values below 5 match the CLI exit codes.
 */
typedef enum CwStatus {
  CW_STATUS_OK = 0,
  CW_STATUS_VERIFICATION = 1,
  CW_STATUS_PARSE = 2,
  CW_STATUS_PRECONDITION = 3,
  CW_STATUS_BUDGET = 4,
  CW_STATUS_NULL_POINTER = 5,
  CW_STATUS_PANIC = 6,
} CwStatus;

/*
 Opaque path decomposition handle.
 */
typedef struct CwDecomposition CwDecomposition;

/*
 Opaque graph handle.
 */
typedef struct CwGraph CwGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failure on this thread; valid until the next call
 that fails on the same thread. Never null.
 */
const char *cw_last_error(void);

/*
 A graph with `n` vertices and no edges.
 */
struct CwGraph *cw_graph_new(uintptr_t n);

/*
 # Safety
 `g` must be a live handle from this library.
 */
enum CwStatus cw_graph_add_edge(struct CwGraph *g, uintptr_t u, uintptr_t v);

/*
 Parses a NUL-terminated graph text.

 # Safety
 `text` must be a valid C string and `out` writable.
 */
enum CwStatus cw_graph_parse(const char *text, enum CwFormat format, struct CwGraph **out);

/*
 # Safety
 `g` must be null or a handle not yet freed.
 */
void cw_graph_free(struct CwGraph *g);

/*
 # Safety
 `g` must be a live handle.
 */
uintptr_t cw_graph_vertex_count(const struct CwGraph *g);

/*
 # Safety
 `g` must be a live handle.
 */
uintptr_t cw_graph_edge_count(const struct CwGraph *g);

/*
 Depth-first decomposition of a 2-connected graph; `t = 0` uses the exact
 circumference.

 # Safety
 `g` must be a live handle and `out` writable.
 */
enum CwStatus cw_decompose_thm1(const struct CwGraph *g, uintptr_t t, struct CwDecomposition **out);

/*
 Block-by-block decomposition of any graph.

 # Safety
 `g` must be a live handle and `out` writable.
 */
enum CwStatus cw_compose_lemma2(const struct CwGraph *g, struct CwDecomposition **out);

/*
 # Safety
 `d` must be null or a handle not yet freed.
 */
void cw_decomposition_free(struct CwDecomposition *d);

/*
 Width, or -1 for an empty or null decomposition.

 # Safety
 `d` must be a live handle.
 */
intptr_t cw_decomposition_width(const struct CwDecomposition *d);

/*
 # Safety
 `d` must be a live handle.
 */
uintptr_t cw_decomposition_bag_count(const struct CwDecomposition *d);

/*
 Copies bag `i` into `buf` (capacity `cap`) and stores its size in
 `out_len`. With a short buffer only `out_len` is written.

 # Safety
 `d` must be a live handle, `buf` valid for `cap` writes, `out_len` writable.
 */
enum CwStatus cw_decomposition_bag(const struct CwDecomposition *d,
                                   uintptr_t i,
                                   uintptr_t *buf,
                                   uintptr_t cap,
                                   uintptr_t *out_len);

/*
 Checks `d` against `g`; `*out_valid` reports the verdict.

 # Safety
 Both handles must be live and `out_valid` writable.
 */
enum CwStatus cw_decomposition_validate(const struct CwGraph *g,
                                        const struct CwDecomposition *d,
                                        bool *out_valid);

/*
 The `{"width", "bags"}` certificate; release with [`cw_string_free`].

 # Safety
 `d` must be a live handle.
 */
char *cw_decomposition_to_json(const struct CwDecomposition *d);

/*
 Runs the decomposition-or-packing pipeline and returns its JSON report in
 `*out`; release it with [`cw_string_free`].

 # Safety
 `g` must be a live handle and `out` writable.
 */
enum CwStatus cw_pipeline_thm2_json(const struct CwGraph *g, uintptr_t k, uintptr_t t, char **out);

/*
 # Safety
 `s` must be null or a string returned by this library, not yet freed.
 */
void cw_string_free(char *s);

/*
 Exact circumference (0 for acyclic graphs).

 # Safety
 `g` must be a live handle and `out` writable.
 */
enum CwStatus cw_circumference(const struct CwGraph *g, uintptr_t *out);

/*
 Exact pathwidth.

 # Safety
 `g` must be a live handle and `out` writable.
 */
enum CwStatus cw_pathwidth(const struct CwGraph *g, uintptr_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CIRCUMWIDTH_H */
