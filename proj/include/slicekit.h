/* slicekit — exact combinatorics of Boolean and rational functions on the
 * slice C(V,k): constructions, degrees, design checks, and size bounds.
 *
 * C binding of the C++ core. All functions return a status code; details of
 * the last failure on the calling thread are available via slk_last_error().
 * Strings returned through char** out-parameters are heap-allocated and must
 * be released with slk_string_free(); slk_function handles with
 * slk_function_free(). Point labels are 1-based throughout this interface.
 */
#ifndef SLICEKIT_H
#define SLICEKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum slk_status {
    SLK_OK = 0,
    SLK_ERR_ARGUMENT = 1, /* bad argument or violated precondition */
    SLK_ERR_DOMAIN = 2,   /* operation undefined for these parameters */
    SLK_ERR_PARSE = 3,    /* malformed input text */
    SLK_ERR_LIMIT = 4,    /* desk-scale bound exceeded */
    SLK_ERR_INTERNAL = 5
} slk_status;

/* Degree value used for the zero function. */
#define SLK_DEGREE_NEG_INF INT32_MIN

/* Opaque handle to a function on a slice. */
typedef struct slk_function slk_function;

const char* slk_version(void);

/* Message for the last failure on this thread; empty string if none. */
const char* slk_last_error(void);

void slk_string_free(char* text);
void slk_function_free(slk_function* f);

/* ---- construction -------------------------------------------------- */

/* Characteristic function of {K : I <= K <= J}; labels 1-based. */
slk_status slk_function_basic(int32_t n, int32_t k, const int32_t* i_labels, size_t i_len,
                              const int32_t* j_labels, size_t j_len, slk_function** out);

/* Paired function for disjoint I, J. */
slk_status slk_function_paired(int32_t n, int32_t k, const int32_t* i_labels, size_t i_len,
                               const int32_t* j_labels, size_t j_len, slk_function** out);

slk_status slk_function_from_json(const char* text, slk_function** out);
slk_status slk_function_to_json(const slk_function* f, char** out_text);

/* ---- inspection ---------------------------------------------------- */

int32_t slk_function_n(const slk_function* f);
int32_t slk_function_k(const slk_function* f);
int32_t slk_function_is_boolean(const slk_function* f);

/* Sum of values as a decimal (or "p/q") string. */
slk_status slk_function_size(const slk_function* f, char** out_text);

/* ---- degrees -------------------------------------------------------- */

/* Exact degree by pencil-span membership; SLK_DEGREE_NEG_INF for zero. */
slk_status slk_degree(const slk_function* f, int32_t* out_degree);

/* Degree through the dual distribution; Boolean inputs only. */
slk_status slk_degree_dual_method(const slk_function* f, int32_t* out_degree);

slk_status slk_basic_degree_formula(int32_t n, int32_t k, int32_t i, int32_t j, int32_t* out_degree);
slk_status slk_paired_degree_formula(int32_t n, int32_t k, int32_t i, int32_t j, int32_t* out_degree);
slk_status slk_elementary_bound(int32_t n, int32_t k, int32_t i, int32_t j, int32_t* out_bound);

/* Compares span degree against the closed form for all n <= max_n.
 * threads <= 0 picks a count from SLICE_THREADS or the hardware. */
slk_status slk_verify_paired_theorem(int32_t max_n, int32_t threads, int64_t* out_cases,
                                     int64_t* out_mismatches, char** out_report);

/* ---- leg recovery ---------------------------------------------------- */

/* *out_found = 1 and {"I":[..],"J":[..]} in *out_json when the legs are
 * uniquely determined; *out_found = 0 when the input is no paired function.
 * Ambiguous inputs (support < 3 or all-one) fail with SLK_ERR_ARGUMENT. */
slk_status slk_recover_paired_legs(const slk_function* f, int32_t* out_found, char** out_json);

/* ---- designs --------------------------------------------------------- */

/* *out_is_design = 1 and the constant coverage in *out_lambda when D is a
 * t-design. */
slk_status slk_design_index(const slk_function* d, int32_t t, int32_t* out_is_design,
                            char** out_lambda);

/* All t-(v,k,lambda) designs as a JSON array of function objects. */
slk_status slk_design_search(int32_t t, int32_t v, int32_t k, int64_t lambda, char** out_json);

/* K in D <=> K^c not in D, for root-case halving parameters. */
slk_status slk_hartman_check(const slk_function* d, int32_t* out_holds);

/* ---- bounds ---------------------------------------------------------- */

slk_status slk_delta(int32_t n, int32_t k, int32_t t, char** out_text);
slk_status slk_pencil_size(int32_t n, int32_t k, int32_t t, char** out_text);
slk_status slk_paired_min_size(int32_t n, int32_t k, int32_t t, char** out_text);
slk_status slk_conjecture_value(int32_t n, int32_t k, int32_t t, char** out_text);

/* Exact optimum ("p/q") and its half-up 2-decimal rounding. */
slk_status slk_lp_bound(int32_t n, int32_t k, int32_t t, char** out_exact, char** out_rounded);

/* rows = n,k pairs flattened; format 0 = CSV, 1 = JSON. */
slk_status slk_table(int32_t t, const int32_t* rows_nk, size_t n_rows, int32_t format,
                     int32_t threads, char** out_text);

/* Exhaustive minimum size of a non-zero Boolean degree-<=t function.
 * *out_found = 0 when no set of size <= size_cap exists. */
slk_status slk_m1_bruteforce(int32_t n, int32_t k, int32_t t, int32_t size_cap,
                             int32_t* out_found, int64_t* out_value, char** out_witness_json);

/* One of "smaller", "equal", "larger", "not-degree-t" (static string). */
slk_status slk_classify_paired_vs_pencil(int32_t n, int32_t k, int32_t t, int32_t i, int32_t j,
                                         const char** out_label);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SLICEKIT_H */
