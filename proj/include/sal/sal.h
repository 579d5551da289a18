#ifndef SAL_H
#define SAL_H

/*
 * C interface to the Steiner algebra library.
 *
 * Handles are opaque; every constructor has a matching free. Functions
 * return SAL_OK on success, an error code otherwise; sal_last_error() gives
 * a thread-local message for the most recent failure on the calling thread.
 * Strings written through char** out-parameters are heap-allocated and must
 * be released with sal_string_free().
 *
 * Rational parameters (beta) are exact strings: "p", "-p", or "p/q".
 * Decimal input is rejected; no floating point exists anywhere behind this
 * interface.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef SAL_API
#define SAL_API __attribute__((visibility("default")))
#endif

typedef struct sal_sts sal_sts; /* a validated block set, usually a full STS */

typedef enum sal_status {
  SAL_OK = 0,
  SAL_ERR_INVALID_ARGUMENT = 1,
  SAL_ERR_PARSE = 2,
  SAL_ERR_IO = 3,
  SAL_ERR_VALIDATION = 4,
  SAL_ERR_EXCLUDED_BETA = 5,
  SAL_ERR_CAP_EXCEEDED = 6,
  SAL_ERR_NOT_STS = 7,
  SAL_ERR_INTERNAL = 8
} sal_status;

SAL_API const char* sal_version(void);
SAL_API const char* sal_last_error(void);
SAL_API void sal_string_free(char* s);

/* ---- construction and I/O ---- */

SAL_API sal_status sal_sts_construct_ag(int m, sal_sts** out);
SAL_API sal_status sal_sts_construct_fano(sal_sts** out);
SAL_API sal_status sal_sts_construct_bose(int n, sal_sts** out);
SAL_API sal_status sal_sts_construct_skolem(int n, sal_sts** out);

/* Accepts any valid partial Steiner triple system; operations that need the
 * full join quasigroup fail with SAL_ERR_NOT_STS when pairs are uncovered. */
SAL_API sal_status sal_sts_read_file(const char* path, sal_sts** out);
SAL_API sal_status sal_sts_read_string(const char* text, sal_sts** out);

SAL_API void sal_sts_free(sal_sts* s);

/* Canonical file form: sorted triples, one per line, preceded by n. */
SAL_API sal_status sal_sts_write_file(const sal_sts* s, const char* path);
SAL_API sal_status sal_sts_to_string(const sal_sts* s, char** out);

/* ---- queries ---- */

SAL_API int sal_sts_point_count(const sal_sts* s);
SAL_API int sal_sts_block_count(const sal_sts* s);
/* replication number; 0 when not regular */
SAL_API int sal_sts_replication(const sal_sts* s);
SAL_API sal_status sal_sts_is_hall(const sal_sts* s, int* hall_out);
SAL_API sal_status sal_sts_join(const sal_sts* s, int i, int j, int* out);
SAL_API sal_status sal_sts_validate_json(const sal_sts* s, char** json_out);

/* ---- reports (JSON, schema "1", deterministic byte-for-byte) ---- */

/* Runs the verification battery for one beta. checks_csv selects a subset
 * by name (NULL or "" = all); closure_cap 0 = default; failed/undecided
 * receive per-report counts and may be NULL. */
SAL_API sal_status sal_analyze_json(const sal_sts* s, const char* beta, const char* checks_csv,
                                    uint64_t closure_cap, int with_timings, char** json_out,
                                    int* failed, int* undecided);

/* One summary row per beta; the transitional values for this order are
 * always appended. */
SAL_API sal_status sal_sweep_json(const sal_sts* s, const char* const* betas, size_t n_betas,
                                  char** json_out);

/* Block idempotent catalogs for every block at the given beta. */
SAL_API sal_status sal_catalog_json(const sal_sts* s, const char* beta, char** json_out);

/* Miyamoto group summary; cap 0 = default (10^6 elements). */
SAL_API sal_status sal_group_json(const sal_sts* s, uint64_t cap, char** json_out);

/* Structure-constant export of T_beta. */
SAL_API sal_status sal_algebra_json(const sal_sts* s, const char* beta, char** json_out);

/* Fusion verdict for one axis (auto-selects the graded or Jordan law). */
SAL_API sal_status sal_fusion_verdict_json(const sal_sts* s, const char* beta, int axis,
                                           char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* SAL_H */
