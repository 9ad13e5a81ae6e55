/*
 * C interface to the ctrep library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a ctrep_status;
 * on failure ctrep_last_error() describes the problem (thread-local, valid
 * until the next failing call on the same thread). Strings returned through
 * char** out-parameters are heap-allocated and must be released with
 * ctrep_string_free().
 *
 * Rationals cross the boundary as text ("3", "-3/2"). Text reports are
 * UTF-8; JSON reports follow the encodings documented in ctrep/json_io.hpp.
 */
#ifndef CTREP_H
#define CTREP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(CTREP_BUILDING_LIBRARY)
#define CTREP_API __attribute__((visibility("default")))
#else
#define CTREP_API
#endif

typedef enum ctrep_status {
    CTREP_OK = 0,
    CTREP_ERR_PARSE = 1,        /* malformed expression or document */
    CTREP_ERR_PRECONDITION = 2, /* input outside the operation's domain */
    CTREP_ERR_DOMAIN = 3,       /* division by zero, tag or size mismatch */
    CTREP_ERR_ARGUMENT = 4,     /* null pointer or invalid enum */
    CTREP_ERR_INTERNAL = 5      /* invariant breach inside the library */
} ctrep_status;

typedef enum ctrep_format { CTREP_FORMAT_TEXT = 0, CTREP_FORMAT_JSON = 1 } ctrep_format;

typedef enum ctrep_tag {
    CTREP_TAG_FREE_INT = 0,
    CTREP_TAG_MOD_TWO = 1,
    CTREP_TAG_RATIONAL = 2
} ctrep_tag;

typedef struct ctrep_series ctrep_series;
typedef struct ctrep_matrix ctrep_matrix;
typedef struct ctrep_ext ctrep_ext;

CTREP_API const char* ctrep_version(void);
CTREP_API const char* ctrep_last_error(void);
CTREP_API const char* ctrep_status_name(ctrep_status status);
CTREP_API void ctrep_string_free(char* s);

/* ---- Puiseux polynomials ---------------------------------------------- */

CTREP_API ctrep_status ctrep_series_parse(const char* text, ctrep_series** out);
CTREP_API ctrep_status ctrep_series_from_json(const char* json, ctrep_series** out);
CTREP_API void ctrep_series_free(ctrep_series* s);

CTREP_API ctrep_status ctrep_series_add(const ctrep_series* a, const ctrep_series* b, ctrep_series** out);
CTREP_API ctrep_status ctrep_series_sub(const ctrep_series* a, const ctrep_series* b, ctrep_series** out);
CTREP_API ctrep_status ctrep_series_mul(const ctrep_series* a, const ctrep_series* b, ctrep_series** out);
CTREP_API ctrep_status ctrep_series_equal(const ctrep_series* a, const ctrep_series* b, int* out);

/* Canonical text ("1 - t^2") or the JSON encoding. */
CTREP_API ctrep_status ctrep_series_format(const ctrep_series* s, ctrep_format format, char** out);
/* "1/2" or "∞" as text; "\"1/2\"" or "\"inf\"" as JSON. */
CTREP_API ctrep_status ctrep_series_valuation(const ctrep_series* s, ctrep_format format, char** out);
/* Coefficient of t^exponent, as a rational string. */
CTREP_API ctrep_status ctrep_series_residue(const ctrep_series* s, const char* exponent, char** out);
/* Representative modulo L_n; CTREP_ERR_PRECONDITION when v(s) < 0. */
CTREP_API ctrep_status ctrep_series_reduce(const ctrep_series* s, unsigned long n, ctrep_series** out);
/* Inverse truncated below t^cutoff; CTREP_ERR_DOMAIN for zero. */
CTREP_API ctrep_status ctrep_series_invert(const ctrep_series* s, const char* cutoff, ctrep_series** out);

/* ---- valuation value sets and coset bounds ---------------------------- */

/* Sorted value set, "{1, 2, ∞}" as text. CTREP_ERR_PRECONDITION on
 * dependent generators. */
CTREP_API ctrep_status ctrep_value_set(const ctrep_series* const* gens, size_t count, ctrep_format format,
                                       char** out);
/* Level n with L_n ∩ (z + <gens>) empty. `report` may be NULL.
 * CTREP_ERR_PRECONDITION when z lies in the subgroup. */
CTREP_API ctrep_status ctrep_coset_bound(const ctrep_series* z, const ctrep_series* const* gens, size_t count,
                                         unsigned long* level, ctrep_format format, char** report);
/* JSON array of kernel basis vectors of the rational coefficient list. */
CTREP_API ctrep_status ctrep_integer_kernel(const char* const* coeffs, size_t count, char** out_json);

/* ---- unitriangular matrices ------------------------------------------- */

CTREP_API ctrep_status ctrep_matrix_from_json(const char* json, ctrep_matrix** out);
CTREP_API void ctrep_matrix_free(ctrep_matrix* m);
CTREP_API ctrep_status ctrep_matrix_to_json(const ctrep_matrix* m, char** out);
CTREP_API ctrep_status ctrep_matrix_multiply(const ctrep_matrix* a, const ctrep_matrix* b, ctrep_matrix** out);
CTREP_API ctrep_status ctrep_matrix_invert(const ctrep_matrix* a, ctrep_matrix** out);
CTREP_API ctrep_status ctrep_matrix_commutator(const ctrep_matrix* a, const ctrep_matrix* b, ctrep_matrix** out);
CTREP_API ctrep_status ctrep_matrix_equal(const ctrep_matrix* a, const ctrep_matrix* b, int* out);
/* -1 stands for infinity (the identity). */
CTREP_API ctrep_status ctrep_matrix_lcs_depth(const ctrep_matrix* m, long* out);
CTREP_API ctrep_status ctrep_matrix_congruence_level(const ctrep_matrix* m, long* out);
CTREP_API ctrep_status ctrep_matrix_congruence_member(const ctrep_matrix* m, unsigned long n, int* out);
CTREP_API ctrep_status ctrep_matrix_reduce(const ctrep_matrix* m, unsigned long n, ctrep_matrix** out);
CTREP_API ctrep_status ctrep_matrix_epsilon(const ctrep_matrix* m, size_t row, size_t depth, ctrep_series** out);
/* Separation certificate for zeta<gamma>; level/row/depth may be NULL. */
CTREP_API ctrep_status ctrep_separate(const ctrep_matrix* zeta, const ctrep_matrix* gamma, unsigned long* level,
                                      size_t* row, size_t* depth, ctrep_format format, char** report);

CTREP_API ctrep_status ctrep_hilbert_symbol_real(const char* a, const char* b, int* out);
CTREP_API ctrep_status ctrep_commuting_lift_obstruction(const char* x, int* out);

/* ---- central extensions ----------------------------------------------- */

CTREP_API ctrep_status ctrep_ext_eval_word(const char* word, ctrep_tag tag, ctrep_ext** out);
CTREP_API ctrep_status ctrep_ext_from_json(const char* json, ctrep_ext** out);
CTREP_API void ctrep_ext_free(ctrep_ext* g);
/* "(n, x)" or the JSON encoding. */
CTREP_API ctrep_status ctrep_ext_format(const ctrep_ext* g, ctrep_format format, char** out);
CTREP_API ctrep_status ctrep_ext_multiply(const ctrep_ext* g, const ctrep_ext* h, ctrep_ext** out);
CTREP_API ctrep_status ctrep_ext_invert(const ctrep_ext* g, ctrep_ext** out);
CTREP_API ctrep_status ctrep_ext_commutator(const ctrep_ext* g, const ctrep_ext* h, ctrep_ext** out);
CTREP_API ctrep_status ctrep_ext_equal(const ctrep_ext* g, const ctrep_ext* h, int* out);
CTREP_API ctrep_status ctrep_ext_is_identity(const ctrep_ext* g, int* out);
CTREP_API ctrep_status ctrep_ext_is_central_generator(const ctrep_ext* g, int* out);
/* Image in the quotient by <c^n>; free-int only. */
CTREP_API ctrep_status ctrep_ext_quotient(const ctrep_ext* g, unsigned long n, ctrep_ext** out);
/* Unique d-th root in the rational extension. */
CTREP_API ctrep_status ctrep_ext_root(const ctrep_ext* g, unsigned long divisor, ctrep_ext** out);
/* Order up to `bound`; 0 when g^k != e for all 1 <= k <= bound. */
CTREP_API ctrep_status ctrep_ext_order(const ctrep_ext* g, unsigned long bound, unsigned long* out);
/* f(x, y) for two JSON-encoded base elements; result as a rational string. */
CTREP_API ctrep_status ctrep_cocycle(const char* x_json, const char* y_json, char** out);
/* `pairs` holds 2*count indices (i0, j0, i1, j1, ...). */
CTREP_API ctrep_status ctrep_check_presentation(ctrep_tag tag, const uint64_t* pairs, size_t count,
                                                unsigned long order_bound, int* ok, ctrep_format format,
                                                char** report);
/* found = 0 when the table admits no witness. */
CTREP_API ctrep_status ctrep_pigeonhole(const char* table_json, int* found, ctrep_format format, char** report);

/* ---- separating families and finite actions --------------------------- */

CTREP_API ctrep_status ctrep_torsion_decompose(const char* q, ctrep_format format, char** out);
CTREP_API ctrep_status ctrep_induced_action(const char* group_json, const char* subgroup_action_json,
                                            ctrep_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CTREP_H */
