/*
 * C interface to the leavitt library.
 *
 * Handles are opaque and owned by the caller. Every call that can fail
 * returns an lv_status; on failure lv_last_error() describes the problem for
 * the calling thread. Strings returned through `char** out` are allocated by
 * the library and must be released with lv_string_free().
 *
 * Vertex lists (the H and S of an admissible pair) are comma-separated vertex
 * ids; NULL or "" denotes the empty set.
 */
#ifndef LEAVITT_H
#define LEAVITT_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(LEAVITT_BUILDING_LIBRARY)
#    define LV_API __declspec(dllexport)
#  else
#    define LV_API __declspec(dllimport)
#  endif
#else
#  define LV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lv_graph lv_graph;
typedef struct lv_ring lv_ring;

typedef enum {
  LV_OK = 0,
  LV_ERR_PARSE = 1,         /* malformed JSON, ring string or expression */
  LV_ERR_VALIDATION = 2,    /* well-formed input violating an invariant */
  LV_ERR_ARGUMENT = 3,      /* bad argument, e.g. unknown vertex */
  LV_HYPOTHESIS_FAILED = 4, /* answer forced empty by the coefficient ring; output is set */
  LV_ERR_INTERNAL = 5
} lv_status;

typedef enum { LV_FORMAT_TEXT = 0, LV_FORMAT_JSON = 1, LV_FORMAT_DOT = 2 } lv_format;

LV_API const char* lv_version(void);

/* Message, line and column of the last failure on this thread. */
LV_API const char* lv_last_error(void);
LV_API int lv_last_error_line(void);
LV_API int lv_last_error_column(void);

LV_API void lv_string_free(char* s);

LV_API lv_status lv_graph_from_json(const char* text, lv_graph** out);
LV_API void lv_graph_free(lv_graph* g);
LV_API size_t lv_graph_vertex_count(const lv_graph* g);
LV_API size_t lv_graph_edge_count(const lv_graph* g);

/* "Z", "Q", "Z/n", "GF(p)" */
LV_API lv_status lv_ring_parse(const char* text, lv_ring** out);
LV_API void lv_ring_free(lv_ring* r);

/* Full classification report (text or JSON). */
LV_API lv_status lv_analyze(const lv_graph* g, const lv_ring* r, lv_format fmt, char** out);
/* Admissible pairs and Hasse covers (text or JSON). */
LV_API lv_status lv_ideals(const lv_graph* g, lv_format fmt, char** out);
LV_API lv_status lv_primes(const lv_graph* g, const lv_ring* r, lv_format fmt, char** out);
LV_API lv_status lv_primitives(const lv_graph* g, const lv_ring* r, lv_format fmt, char** out);

/* Graph constructions; TEXT and JSON both give a graph document. */
LV_API lv_status lv_quotient(const lv_graph* g, const char* h, const char* s, lv_format fmt,
                             char** out);
LV_API lv_status lv_subalgebra(const lv_graph* g, const char* h, const char* s, lv_format fmt,
                               char** out);
/* path_bound 0 selects the default. *truncated (may be NULL) reports whether
 * the path vertices were cut off at the bound. */
LV_API lv_status lv_ideal_graph(const lv_graph* g, const char* h, const char* s,
                                size_t path_bound, lv_format fmt, char** out, int* truncated);

/* conditions: comma-separated subset of L, K, MT3. */
LV_API lv_status lv_check(const lv_graph* g, const char* conditions, lv_format fmt, char** out);

/* Normal form of an element literal such as "2.e1.e2^* - v3". */
LV_API lv_status lv_eval(const lv_graph* g, const lv_ring* r, const char* expr, lv_format fmt,
                         char** out);
/* Membership of an element in the graded basic ideal I(H,S). */
LV_API lv_status lv_member(const lv_graph* g, const lv_ring* r, const char* h, const char* s,
                           const char* expr, lv_format fmt, char** out, int* is_member);
/* Bounded check of the matrix-of-Laurent-polynomials picture of a cycle. */
LV_API lv_status lv_laurent_check(const lv_graph* g, const lv_ring* r, int degree_bound,
                                  lv_format fmt, char** out, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* LEAVITT_H */
