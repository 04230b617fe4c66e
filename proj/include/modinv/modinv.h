#ifndef MODINV_MODINV_H
#define MODINV_MODINV_H

/*
 * C interface to libmodinv: polynomials over F_p in x_1, y_1, ..., x_m, y_m,
 * the C_p action y_i -> y_i + x_i, and the JSON reports used by the CLI.
 *
 * Every function returning modinv_status sets a thread-local message that
 * modinv_last_error() returns until the next failing call on that thread.
 * Strings handed out through char** are owned by the caller and released
 * with modinv_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(MODINV_BUILDING_LIBRARY)
#define MODINV_API __attribute__((visibility("default")))
#else
#define MODINV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum modinv_status {
    MODINV_OK = 0,
    MODINV_E_INVALID_ARGUMENT,
    MODINV_E_NOT_PRIME,
    MODINV_E_MODULUS_MISMATCH,
    MODINV_E_DIVISION_BY_ZERO,
    MODINV_E_DIMENSION_MISMATCH,
    MODINV_E_ZERO_POLYNOMIAL,
    MODINV_E_NOT_INVARIANT,
    MODINV_E_NOT_MULTIHOMOGENEOUS,
    MODINV_E_NOT_IN_DOMAIN,
    MODINV_E_DEGREE_MISMATCH,
    MODINV_E_UNMATCHED_Y,
    MODINV_E_RELATION_FAILED,
    MODINV_E_INFEASIBLE_SIZE,
    MODINV_E_BUDGET_EXCEEDED,
    MODINV_E_PARSE,
    MODINV_E_NULL_ARGUMENT,
    MODINV_E_INTERNAL
} modinv_status;

typedef enum modinv_decompose_method {
    MODINV_DECOMPOSE_RANKS = 0,
    MODINV_DECOMPOSE_PATHS,
    MODINV_DECOMPOSE_BOTH
} modinv_decompose_method;

typedef enum modinv_variant { MODINV_VARIANT_FULL = 0, MODINV_VARIANT_MINIMAL } modinv_variant;

typedef enum modinv_selftest_level { MODINV_SELFTEST_QUICK = 0, MODINV_SELFTEST_FULL } modinv_selftest_level;

typedef struct modinv_ctx modinv_ctx;
typedef struct modinv_poly modinv_poly;
typedef struct modinv_report modinv_report;

MODINV_API const char* modinv_version(void);
MODINV_API const char* modinv_status_name(modinv_status status);
MODINV_API const char* modinv_last_error(void);
MODINV_API void modinv_string_free(char* s);

/* "transfer-sign" flips the sign of every transfer; "none" clears it. */
MODINV_API modinv_status modinv_set_fault(const char* name);

/* A field F_p and a block count m. Workers default to 1, no time budget. */
MODINV_API modinv_status modinv_ctx_create(uint32_t p, uint32_t m, modinv_ctx** out);
MODINV_API void modinv_ctx_destroy(modinv_ctx* ctx);
MODINV_API modinv_status modinv_ctx_set_workers(modinv_ctx* ctx, unsigned workers);
/* seconds <= 0 removes the budget (MODINV_BUDGET_SECS still applies). */
MODINV_API modinv_status modinv_ctx_set_budget(modinv_ctx* ctx, double seconds);

MODINV_API modinv_status modinv_poly_parse(const modinv_ctx* ctx, const char* text, modinv_poly** out);
MODINV_API void modinv_poly_destroy(modinv_poly* poly);
MODINV_API modinv_status modinv_poly_to_string(const modinv_poly* poly, char** out);
MODINV_API modinv_status modinv_poly_equal(const modinv_poly* a, const modinv_poly* b, int* out);
MODINV_API modinv_status modinv_poly_transfer(const modinv_poly* poly, modinv_poly** out);
/* sigma^k */
MODINV_API modinv_status modinv_poly_sigma(const modinv_poly* poly, uint32_t k, modinv_poly** out);
/* N(y_i), 1 <= i <= m */
MODINV_API modinv_status modinv_poly_norm(const modinv_ctx* ctx, uint32_t i, modinv_poly** out);
MODINV_API modinv_status modinv_poly_is_invariant(const modinv_poly* poly, int* out);
MODINV_API modinv_status modinv_poly_length(const modinv_poly* poly, uint32_t* out);
/* Lead monomial as text, e.g. "x1*y2". */
MODINV_API modinv_status modinv_poly_lead(const modinv_poly* poly, char** out);

/* Reports use the context's p, m, worker count and budget. */
MODINV_API modinv_status modinv_report_counts(const modinv_ctx* ctx, uint32_t d_max, modinv_report** out);
MODINV_API modinv_status modinv_report_paths(const modinv_ctx* ctx, uint32_t d, modinv_report** out);
MODINV_API modinv_status modinv_report_tensor(const modinv_ctx* ctx, uint32_t d, modinv_report** out);
MODINV_API modinv_status modinv_report_decompose(const modinv_ctx* ctx, const uint32_t* lambda, size_t blocks,
                                                 modinv_decompose_method method, modinv_report** out);
MODINV_API modinv_status modinv_report_sagbi(const modinv_ctx* ctx, uint32_t d_max, modinv_variant variant,
                                             modinv_report** out);
MODINV_API modinv_status modinv_report_sl2(const modinv_ctx* ctx, uint32_t d_max, int membership,
                                           modinv_report** out);
MODINV_API modinv_status modinv_report_selftest(modinv_selftest_level level, uint64_t seed, modinv_report** out);

/* Compact JSON, owned by the report. */
MODINV_API const char* modinv_report_json(const modinv_report* report);
/* 1 if the report's checks passed (or it has none), else 0. */
MODINV_API int modinv_report_passed(const modinv_report* report);
MODINV_API void modinv_report_destroy(modinv_report* report);

#ifdef __cplusplus
}
#endif

#endif
