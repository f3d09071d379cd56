/* C interface for the cutsetlab library.
 *
 * Maintained by hand; keep in sync with src/lib.rs.
 *
 * Conventions:
 *   - every function returns a CslStatus code; results go to out-pointers
 *   - strings returned through char** are NUL-terminated UTF-8 and must be
 *     released with csl_string_free
 *   - graph handles must be released with csl_graph_free
 */

#ifndef CUTSETLAB_H
#define CUTSETLAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum CslStatus {
  CSL_OK = 0,
  CSL_NULL_ARGUMENT = 1,
  CSL_INVALID_UTF8 = 2,
  CSL_PARSE_ERROR = 3,
  CSL_UNSUPPORTED = 4,
  CSL_INTERNAL_ERROR = 5,
} CslStatus;

/* Opaque graph handle. */
typedef struct CslGraph CslGraph;

/* Parse the adjacency-list text format:
 * first line the vertex count n, then one "u v" edge per line (1-based). */
int32_t csl_graph_parse_text(const char *text, CslGraph **out);

/* Parse a header-less graph6 string. */
int32_t csl_graph_parse_graph6(const char *text, CslGraph **out);

void csl_graph_free(CslGraph *g);

int32_t csl_graph_vertex_count(const CslGraph *g, uint32_t *out);

/* Cut sets as a JSON array of sorted vertex arrays, e.g. [[],[2],[1,2]]. */
int32_t csl_cut_sets_json(const CslGraph *g, char **out);

/* *out = 1 when the graph is unmixed, 0 otherwise. */
int32_t csl_is_unmixed(const CslGraph *g, int32_t *out);

/* Accessibility verdict as JSON: {"verdict":bool,"witness":...,"stats":...}. */
int32_t csl_accessible_report_json(const CslGraph *g, char **out);

/* Serre (S2) verdict for the complex of the graph, same JSON report shape.
 * CSL_UNSUPPORTED for disconnected graphs or more than 8 vertices. */
int32_t csl_s2_report_json(const CslGraph *g, char **out);

void csl_string_free(char *s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CUTSETLAB_H */
