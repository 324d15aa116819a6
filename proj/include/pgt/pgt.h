/*
 * C interface to the pseudocentre library (libpgt).
 *
 * Every fallible call returns a pgt_status. On failure the thread-local
 * message from pgt_last_error() describes the cause; for spec parse errors
 * pgt_last_error_offset() gives the byte offset into the spec text.
 * Strings returned through char** out-parameters are owned by the caller
 * and must be released with pgt_string_free().
 *
 * Permutations cross the boundary as image arrays of length `degree` with
 * 0-based points: images[i] is the image of point i.
 */
#ifndef PGT_H
#define PGT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PGT_API __declspec(dllexport)
#else
#define PGT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pgt_status {
  PGT_OK = 0,
  PGT_ERR_INVALID_PARAMETER = 1,
  PGT_ERR_DEGREE_MISMATCH = 2,
  PGT_ERR_CAPACITY = 3,
  PGT_ERR_NOT_A_MEMBER = 4,
  PGT_ERR_NOT_NORMAL = 5,
  PGT_ERR_SYNTAX = 6,
  PGT_ERR_SEMANTIC = 7,
  PGT_ERR_NULL_ARGUMENT = 8,
  PGT_ERR_INTERNAL = 9
} pgt_status;

typedef struct pgt_group pgt_group;
typedef struct pgt_subgroup pgt_subgroup;

PGT_API const char* pgt_version(void);
PGT_API const char* pgt_status_string(pgt_status status);
/* Message of the last failed call on this thread; "" when none. */
PGT_API const char* pgt_last_error(void);
/* Byte offset of the last spec error on this thread, or SIZE_MAX. */
PGT_API size_t pgt_last_error_offset(void);
PGT_API void pgt_string_free(char* s);

/* Process-wide enumeration cap (default 2^20). Applies to groups created
 * after the call. */
PGT_API uint64_t pgt_enumeration_cap(void);
PGT_API pgt_status pgt_set_enumeration_cap(uint64_t cap);

/* ---- Groups --------------------------------------------------------- */

/* Canonical rendering of a spec; fails with PGT_ERR_SYNTAX/SEMANTIC. */
PGT_API pgt_status pgt_spec_canonical(const char* text, char** out);
/* Newline-separated warnings for a valid spec ("" when none). */
PGT_API pgt_status pgt_spec_warnings(const char* text, char** out);
/* Space-separated list of the family names accepted by the parser. */
PGT_API const char* pgt_spec_families(void);

PGT_API pgt_status pgt_group_from_spec(const char* text, pgt_group** out);
/* `images` holds `count` permutations of length `degree`, back to back. */
PGT_API pgt_status pgt_group_from_generators(size_t degree, const uint16_t* images, size_t count,
                                             pgt_group** out);
/* One permutation per line as its image sequence; '#' starts a comment. */
PGT_API pgt_status pgt_group_from_perm_list(const char* text, pgt_group** out);
PGT_API void pgt_group_free(pgt_group* group);

PGT_API size_t pgt_group_degree(const pgt_group* group);
/* Exact order in decimal. */
PGT_API pgt_status pgt_group_order(const pgt_group* group, char** out);
PGT_API pgt_status pgt_group_is_transitive(const pgt_group* group, int* out);

/* ---- Subgroups ------------------------------------------------------ */

PGT_API pgt_status pgt_pseudocentre(const pgt_group* group, unsigned threads,
                                    pgt_subgroup** out);
PGT_API pgt_status pgt_pseudocentre_naive(const pgt_group* group, pgt_subgroup** out);
PGT_API pgt_status pgt_centre(const pgt_group* group, pgt_subgroup** out);
PGT_API pgt_status pgt_derived_subgroup(const pgt_group* group, pgt_subgroup** out);
PGT_API void pgt_subgroup_free(pgt_subgroup* subgroup);

PGT_API size_t pgt_subgroup_order(const pgt_subgroup* subgroup);
PGT_API size_t pgt_subgroup_degree(const pgt_subgroup* subgroup);
/* Element `index` in canonical (lexicographic) order; `images` receives
 * `degree` entries. */
PGT_API pgt_status pgt_subgroup_element(const pgt_subgroup* subgroup, size_t index,
                                        uint16_t* images);
PGT_API pgt_status pgt_subgroup_contains(const pgt_subgroup* subgroup, const uint16_t* images,
                                         int* out);

/* Term sizes of the upper pseudocentral series. At most `capacity` sizes are
 * written; `length` receives the full count. `reaches_group` is set to 1 when
 * the last term is the whole group. */
PGT_API pgt_status pgt_series(const pgt_group* group, size_t max_steps, unsigned threads,
                              uint64_t* sizes, size_t capacity, size_t* length,
                              int* reaches_group);

/* ---- Reports -------------------------------------------------------- */

typedef enum pgt_scope {
  PGT_SCOPE_INFO = 0,
  PGT_SCOPE_PSEUDOCENTRE = 1,
  PGT_SCOPE_SERIES = 2
} pgt_scope;

typedef struct pgt_report_options {
  pgt_scope scope;
  size_t max_steps;     /* 0 selects the default (30) */
  unsigned threads;     /* 0 is treated as 1 */
  int include_elements; /* list the elements of P(G) */
  int json;             /* JSON instead of text */
  int indent;           /* JSON indent; negative for a single line */
} pgt_report_options;

PGT_API void pgt_report_options_init(pgt_report_options* options);
PGT_API pgt_status pgt_report(const pgt_group* group, const char* spec_text,
                              const pgt_report_options* options, char** out);

/* ---- Verification suites ------------------------------------------- */

typedef void (*pgt_check_callback)(const char* id, int criterion, const char* status,
                                   const char* detail, double ms, void* user);

/* Space-separated suite names. */
PGT_API const char* pgt_suite_names(void);
/* Runs a suite; `callback` (optional) fires after each check. `out`
 * receives the text table or JSON document, `all_passed` 1 when no check
 * failed. Unknown names give PGT_ERR_INVALID_PARAMETER listing the valid
 * ones. */
PGT_API pgt_status pgt_verify(const char* suite, unsigned threads, int json,
                              pgt_check_callback callback, void* user, char** out,
                              int* all_passed);

/* ---- Number theory -------------------------------------------------- */

PGT_API pgt_status pgt_fib(uint64_t n, char** out);
PGT_API pgt_status pgt_fib_mod(uint64_t n, uint64_t m, uint64_t* out);
PGT_API pgt_status pgt_pisano_period(uint64_t m, uint64_t* out);

/* Formatted results for the command line: text, or JSON when `json`. */
PGT_API pgt_status pgt_fib_condition_report(uint64_t p, int json, char** out);
PGT_API pgt_status pgt_fib_scan_report(uint64_t bound, unsigned threads, int json, char** out);
PGT_API pgt_status pgt_fib_d_report(uint64_t t, uint64_t u, int json, char** out);
PGT_API pgt_status pgt_fib_pisano_report(uint64_t m, int json, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PGT_H */
