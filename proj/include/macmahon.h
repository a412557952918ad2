/*
 * C API for the macmahon engine: exact q-series built from MacMahon-type
 * partition functions, quasimodular forms, and prime-detecting identities.
 *
 * Conventions:
 *   - Every function returns an mm_status; results come back through out
 *     parameters.  On any status other than MM_OK, mm_last_error() holds a
 *     message for the calling thread.
 *   - Series are opaque handles released with mm_series_free.
 *   - Structured results are JSON in malloc'd strings released with
 *     mm_string_free.  Rationals are exact "p/q" strings throughout.
 *   - Exponent vectors are int32 arrays, entries >= 0; entry 0 weights the
 *     multiplicity of the largest part size.
 */
#ifndef MACMAHON_H
#define MACMAHON_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mm_status {
    MM_OK = 0,
    MM_ERR_VERIFY = 1,  /* a verification failed; message names the witness */
    MM_ERR_INVALID = 2, /* bad argument / violated precondition */
    MM_ERR_INTERNAL = 3
} mm_status;

typedef struct mm_series mm_series;

const char* mm_version(void);
/* Thread-local message for the most recent failing call on this thread. */
const char* mm_last_error(void);
void mm_string_free(char* s);
void mm_series_free(mm_series* s);

/* --- series construction ------------------------------------------------ */

/* Generating series of M_vec: constant term 0, coefficient of q^n equal to
 * M_vec(n). */
mm_status mm_series_u(const int32_t* vec, size_t len, int32_t trunc, mm_series** out);
/* MacMahon's U_a (the all-ones vector of length a). */
mm_status mm_series_macmahon_u(int32_t a, int32_t trunc, mm_series** out);
/* Eisenstein series G_k, even k >= 2. */
mm_status mm_series_g(int32_t k, int32_t trunc, mm_series** out);
/* Prime-detecting forms H_k, even k >= 6. */
mm_status mm_series_h(int32_t k, int32_t trunc, mm_series** out);
/* f_{k,l} = (D^l + 1) G_{k+1} - (D^k + 1) G_{l+1}, odd l > k >= 1. */
mm_status mm_series_f(int32_t k, int32_t l, int32_t trunc, mm_series** out);
/* Symmetrized series over all permutations of vec (entries odd, >= 1). */
mm_status mm_series_sym_u(const int32_t* vec, size_t len, int32_t trunc, mm_series** out);

/* --- series access ------------------------------------------------------ */

int32_t mm_series_truncation(const mm_series* s);
/* Exact coefficient of q^n as "p/q". */
mm_status mm_series_coeff(const mm_series* s, int32_t n, char** out);
/* {"truncation": N, "coeffs": [...]} */
mm_status mm_series_json(const mm_series* s, char** out);
/* verdict: 1 yes / 0 no; witness: first violating n when no. */
mm_status mm_series_is_prime_detecting(const mm_series* s, int32_t* verdict, int32_t* witness);

/* --- point values ------------------------------------------------------- */

/* M_vec(n) as a decimal string (fast generating-function path). */
mm_status mm_value_m(const int32_t* vec, size_t len, int64_t n, char** out);
/* Exhaustive-enumeration oracles (exponential; n up to ~80). */
mm_status mm_value_brute_m(const int32_t* vec, size_t len, int64_t n, char** out);
mm_status mm_value_brute_n(const int32_t* vec, size_t len, int64_t n, char** out);

/* --- verification ------------------------------------------------------- */

/* The three exact DG identities, to the given truncation. */
mm_status mm_verify_ramanujan(int32_t trunc);
/* Five-row table against 6H_6, 36H_8, 90H_10, 90H_12, 30(D^2+1)H_14+30H_16;
 * out: JSON array of certificates. */
mm_status mm_verify_table1(int32_t trunc, int32_t jobs, char** out);
/* which = 1, 2 or 3; includes the exact identities psi2 = (36/11) psi1 and
 * psi3 = psi2. */
mm_status mm_verify_psi(int32_t which, int32_t trunc, char** out);
/* detector_json: {"kind":"poly"|"const", ...}; out: one certificate. */
mm_status mm_verify_detector(const char* detector_json, int32_t trunc, char** out);

/* --- reductions ---------------------------------------------------------- */

/* Convolution sum_{i+j=n} M_a(i) M_b(j) as a linear combination of M_w(n);
 * out: JSON [{"vector": [...], "coeff": "p/q"}, ...]. */
mm_status mm_reduce_conv(const int32_t* a, size_t alen, const int32_t* b, size_t blen,
                         int32_t verify_trunc, char** out);
/* n * M_vec(n) as a linear combination of M_w(n). */
mm_status mm_reduce_timesn(const int32_t* vec, size_t len, int32_t verify_trunc, char** out);

/* --- searches ------------------------------------------------------------ */

/* Constant-coefficient detectors of requested weight d >= 4; out: JSON array
 * of detector objects, each verified on [1, trunc]. */
mm_status mm_search_const(int32_t d, int32_t trunc, int32_t jobs, char** out);
/* Polynomial-coefficient detectors over M_1..M_max_a with degree <= max_deg. */
mm_status mm_search_poly(int32_t max_a, int32_t max_deg, int32_t trunc, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MACMAHON_H */
