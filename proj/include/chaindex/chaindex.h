#ifndef CHAINDEX_CHAINDEX_H
#define CHAINDEX_CHAINDEX_H

/*
 * C interface to the chaindex library: exact Kirchhoff, degree-Kirchhoff,
 * spanning-tree, Wiener and Gutman indices of linear (crossed)
 * octagonal-quadrilateral chains, and verification of their closed forms.
 *
 * Every function returns a chaindex_status. On failure a message is
 * available from chaindex_last_error() on the calling thread. Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with chaindex_string_free().
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(CHAINDEX_BUILDING)
#    define CHAINDEX_API __declspec(dllexport)
#  else
#    define CHAINDEX_API __declspec(dllimport)
#  endif
#else
#  define CHAINDEX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chaindex_status {
  CHAINDEX_OK = 0,
  CHAINDEX_ERR_INVALID_ARGUMENT = 1,
  CHAINDEX_ERR_OUT_OF_RANGE = 2,
  CHAINDEX_ERR_DISCONNECTED = 3,
  CHAINDEX_ERR_SINGULAR = 4,
  CHAINDEX_ERR_PARSE = 5,
  CHAINDEX_ERR_INTERNAL = 6
} chaindex_status;

typedef enum chaindex_kind {
  CHAINDEX_KIND_CROSSED = 0,
  CHAINDEX_KIND_PLAIN = 1
} chaindex_kind;

typedef enum chaindex_format {
  CHAINDEX_FORMAT_JSON = 0,
  CHAINDEX_FORMAT_CSV = 1
} chaindex_format;

/* Opaque chain graph. */
typedef struct chaindex_graph chaindex_graph;

CHAINDEX_API const char* chaindex_version(void);
CHAINDEX_API const char* chaindex_last_error(void);
CHAINDEX_API void chaindex_string_free(char* s);

/* n >= 1. */
CHAINDEX_API chaindex_status chaindex_graph_create(int n, chaindex_kind kind, chaindex_graph** out);
CHAINDEX_API void chaindex_graph_destroy(chaindex_graph* g);
CHAINDEX_API chaindex_status chaindex_graph_order(const chaindex_graph* g, size_t* out);
CHAINDEX_API chaindex_status chaindex_graph_size(const chaindex_graph* g, size_t* out);

/* Edge-list text: header "crossed-chain n=<n>" then one "u v" line per edge,
 * vertices written "k" or "k'". */
CHAINDEX_API chaindex_status chaindex_graph_edge_list(const chaindex_graph* g, char** out);
CHAINDEX_API chaindex_status chaindex_graph_from_edge_list(const char* text, chaindex_graph** out);

/* Effective resistance between two vertex tokens such as "1" and "1'", as
 * an exact "p/q" string. */
CHAINDEX_API chaindex_status chaindex_resistance(const chaindex_graph* g, const char* u, const char* v,
                                                 char** out);

/* Oracle index bundle as one JSON object with string-encoded exact scalars.
 * For crossed chains a "closed_form" object is added alongside. */
CHAINDEX_API chaindex_status chaindex_indices_json(const chaindex_graph* g, char** out);

/* Verification report for n_from..n_to. threads = 0 uses CHAINDEX_THREADS
 * (or the hardware count). Mismatches are data, not errors. */
CHAINDEX_API chaindex_status chaindex_verify(int n_from, int n_to, unsigned threads, chaindex_format format,
                                             char** out);

/* Reproduction of printed table 1 (Kf), 2 (Kf*) or 3 (spanning trees). */
CHAINDEX_API chaindex_status chaindex_table(int which, int n_max, chaindex_format format, char** out);

/* Closed form vs oracle timings. The oracle runs only for n <= oracle_max_n. */
CHAINDEX_API chaindex_status chaindex_bench(const int* ns, size_t count, int oracle_max_n, chaindex_format format,
                                            char** out);

#ifdef __cplusplus
}
#endif

#endif /* CHAINDEX_CHAINDEX_H */
