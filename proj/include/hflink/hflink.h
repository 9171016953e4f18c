/* C interface to the hflink core: link Floer homology of two-component
 * L-space links from Alexander polynomial data.
 *
 * All functions return a status code; outputs are malloc'd strings owned by
 * the caller and released with hflink_string_free. The last error message of
 * a failing call is returned through the optional `errmsg` out-parameter
 * (also to be released with hflink_string_free).
 */
#ifndef HFLINK_H
#define HFLINK_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hflink_doc hflink_doc; /* opaque parsed document + caches */

typedef enum {
  HFLINK_OK = 0,
  HFLINK_ERR_SCHEMA = 1,     /* unreadable file, bad JSON, schema violation */
  HFLINK_ERR_VALIDATION = 2, /* parity/domain/normalization violations */
  HFLINK_ERR_MISMATCH = 3,   /* oracle cross-check found a disagreement */
  HFLINK_ERR_UNKNOWN_NAME = 4,
  HFLINK_ERR_INTERNAL = 5
} hflink_status;

typedef enum {
  HFLINK_DOC_LINK = 0,
  HFLINK_DOC_HGRID = 1,
  HFLINK_DOC_PATTERN = 2
} hflink_doc_kind;

typedef enum {
  HFLINK_FLAVOR_MINUS = 0,
  HFLINK_FLAVOR_HAT = 1
} hflink_flavor;

typedef enum {
  HFLINK_POLY_FLOER = 0,
  HFLINK_POLY_DUAL_THURSTON = 1,
  HFLINK_POLY_NEWTON_COMPARE = 2
} hflink_polytope_kind;

const char* hflink_version(void);
void hflink_string_free(char* s);

/* Document lifecycle. Lattice coordinates cross this interface doubled, so
 * the half-integer lattices of odd linking numbers stay exact. */
hflink_status hflink_doc_parse_file(const char* path, hflink_doc** out, char** errmsg);
hflink_status hflink_doc_parse_text(const char* json_text, hflink_doc** out, char** errmsg);
void hflink_doc_free(hflink_doc* doc);
hflink_doc_kind hflink_doc_get_kind(const hflink_doc* doc);
hflink_status hflink_doc_name(const hflink_doc* doc, char** out, char** errmsg);

/* Normalization report as JSON; *n_errors / *n_warnings may be NULL. */
hflink_status hflink_validate(hflink_doc* doc, char** report_json, int* n_errors, int* n_warnings,
                              char** errmsg);

/* h-function value at one lattice point (coordinates doubled). */
hflink_status hflink_h_at(hflink_doc* doc, int64_t s1_doubled, int64_t s2_doubled, int64_t* h_out,
                          char** errmsg);

/* Tables; window_doubled <= 0 picks the computed window. format is "ascii"
 * or "structured". */
hflink_status hflink_h_table(hflink_doc* doc, int64_t window_doubled, const char* format, char** out,
                             char** errmsg);
hflink_status hflink_group_table(hflink_doc* doc, hflink_flavor flavor, int euler,
                                 int64_t window_doubled, const char* format, char** out, char** errmsg);

/* Graded group at one lattice point; format "ascii" gives "F[-2] + F[-3]",
 * "structured" a JSON record {point, gradings, rank, euler}. */
hflink_status hflink_group_at(hflink_doc* doc, int64_t s1_doubled, int64_t s2_doubled,
                              hflink_flavor flavor, const char* format, char** out, char** errmsg);

/* Polytopes; format is "ascii", "structured" or "tikz". */
hflink_status hflink_polytope(hflink_doc* doc, hflink_polytope_kind kind, const char* format, char** out,
                              char** errmsg);

/* Thurston / link Floer norms in direction (h1, h2) as exact rationals. */
hflink_status hflink_norms(hflink_doc* doc, int64_t h1_num, int64_t h1_den, int64_t h2_num,
                           int64_t h2_den, char** json_out, char** errmsg);

/* Cross-validates the homology pipeline against the truncated cone models
 * over the whole window; truncation <= 0 picks a safe default. Returns
 * HFLINK_ERR_MISMATCH when any point disagrees. */
hflink_status hflink_oracle_check(hflink_doc* doc, int64_t truncation, char** report, char** errmsg);

/* Built-in catalog. */
hflink_status hflink_catalog_list(char** json_out, char** errmsg);
hflink_status hflink_catalog_show(const char* name, char** json_out, char** errmsg);
hflink_status hflink_catalog_open(const char* name, hflink_doc** out, char** errmsg);

#ifdef __cplusplus
}
#endif

#endif /* HFLINK_H */
