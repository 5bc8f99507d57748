/* corekit: hook lengths, t-cores and class-number counts for self-conjugate
 * partitions, exported as a plain C interface.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a corekit_status; on failure a message for the
 * calling thread is available from corekit_last_error(). Strings returned
 * through char** are heap-allocated and released with corekit_string_free().
 * Box coordinates are 1-indexed (row, column).
 */
#ifndef COREKIT_COREKIT_H
#define COREKIT_COREKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(COREKIT_BUILDING_LIBRARY)
#define COREKIT_API __attribute__((visibility("default")))
#else
#define COREKIT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum corekit_status {
  COREKIT_OK = 0,
  COREKIT_ERR_INVALID_ARGUMENT = 1,
  COREKIT_ERR_PARSE = 2,
  COREKIT_ERR_NON_POSITIVE_PART = 3,
  COREKIT_ERR_NOT_DISTINCT_ODD = 4,
  COREKIT_ERR_NOT_SELF_CONJUGATE = 5,
  COREKIT_ERR_BOX_OUT_OF_DIAGRAM = 6,
  COREKIT_ERR_INVALID_MODULUS = 7,
  COREKIT_ERR_NON_NEGATIVE_ARGUMENT = 8,
  COREKIT_ERR_PRECONDITION = 9,
  COREKIT_ERR_NON_INTEGRAL = 10,
  COREKIT_ERR_OUT_OF_RANGE = 11,
  COREKIT_ERR_INTERNAL = 12
} corekit_status;

typedef enum corekit_core_method {
  COREKIT_METHOD_NAIVE = 0, /* scan the hook table of the partition */
  COREKIT_METHOD_SC = 1     /* parts of the distinct-odd partner only */
} corekit_core_method;

typedef struct corekit_partition corekit_partition;
typedef struct corekit_hook_table corekit_hook_table;

typedef struct corekit_box {
  int32_t row;
  int32_t col;
} corekit_box;

COREKIT_API const char* corekit_version(void);
COREKIT_API const char* corekit_status_name(corekit_status status);
/* Detail for the last failing call on this thread; never NULL. */
COREKIT_API const char* corekit_last_error(void);
COREKIT_API void corekit_string_free(char* s);

/* ---- partitions ---------------------------------------------------------- */

COREKIT_API corekit_status corekit_partition_create(const int32_t* parts, size_t count, corekit_partition** out);
/* "7,5,4,4,2,1,1", frequency tokens "1^2,3", or "()" for the empty partition. */
COREKIT_API corekit_status corekit_partition_parse(const char* text, corekit_partition** out);
COREKIT_API void corekit_partition_free(corekit_partition* p);
COREKIT_API size_t corekit_partition_length(const corekit_partition* p);
COREKIT_API int64_t corekit_partition_size(const corekit_partition* p);
/* Copies min(length, capacity) parts, largest first. */
COREKIT_API size_t corekit_partition_parts(const corekit_partition* p, int32_t* buffer, size_t capacity);
COREKIT_API corekit_status corekit_partition_format(const corekit_partition* p, char** out);
COREKIT_API corekit_status corekit_partition_conjugate(const corekit_partition* p, corekit_partition** out);
COREKIT_API int corekit_partition_is_self_conjugate(const corekit_partition* p);
COREKIT_API int corekit_partition_is_distinct_odd(const corekit_partition* p);
COREKIT_API int32_t corekit_partition_durfee_side(const corekit_partition* p);

/* ---- bijections ---------------------------------------------------------- */

COREKIT_API corekit_status corekit_sc_to_distinct_odd(const corekit_partition* gamma, corekit_partition** out);
COREKIT_API corekit_status corekit_distinct_odd_to_sc(const corekit_partition* lambda, corekit_partition** out);
COREKIT_API corekit_status corekit_perfectly_triangular(int32_t k, corekit_partition** out);
/* sign < 0 builds the 3-core of size r(3r-2), sign > 0 the one of size r(3r+2). */
COREKIT_API corekit_status corekit_three_core(int32_t r, int sign, corekit_partition** out);

/* ---- hooks --------------------------------------------------------------- */

COREKIT_API corekit_status corekit_hook_table_create(const corekit_partition* p, corekit_hook_table** out);
COREKIT_API void corekit_hook_table_free(corekit_hook_table* t);
COREKIT_API size_t corekit_hook_table_rows(const corekit_hook_table* t);
COREKIT_API size_t corekit_hook_table_row_length(const corekit_hook_table* t, size_t row);
COREKIT_API corekit_status corekit_hook_table_at(const corekit_hook_table* t, int32_t row, int32_t col, int32_t* out);
/* Row-major array of arrays, e.g. [[3,1],[1]]. */
COREKIT_API corekit_status corekit_hook_table_json(const corekit_hook_table* t, char** out);

COREKIT_API corekit_status corekit_hook_length(const corekit_partition* p, int32_t row, int32_t col, int32_t* out);
/* `lambda` must have distinct odd parts; the box refers to its self-conjugate partner. */
COREKIT_API corekit_status corekit_hook_length_formula(const corekit_partition* lambda, int32_t row, int32_t col,
                                                       int32_t* out);

/* *is_core is set to 1 or 0. When 0 and witness_box/witness_hook are non-NULL
 * they receive the first box found with hook divisible by t. The SC method
 * takes the self-conjugate partition itself and fails with
 * COREKIT_ERR_NOT_SELF_CONJUGATE otherwise. */
COREKIT_API corekit_status corekit_is_t_core(const corekit_partition* p, int32_t t, corekit_core_method method,
                                             int* is_core, corekit_box* witness_box, int32_t* witness_hook);
/* *found is 1 when some gap lambda_i - lambda_{i+1} >= 2(t+1) exists; *index receives i. */
COREKIT_API corekit_status corekit_gap_criterion(const corekit_partition* lambda, int32_t t, int* found, int32_t* index);

/* ---- counts and class numbers -------------------------------------------- */

/* Brute-force sc_t(n) for n = 0..n_max; `out` must hold n_max + 1 entries. */
COREKIT_API corekit_status corekit_sc_counts_bruteforce(int32_t n_max, int32_t t, uint64_t* out, size_t capacity);
/* Closed form (t = 2, 3) or class-number combination (t = 7) for n >= 1.
 * Other t yield COREKIT_ERR_INVALID_ARGUMENT. */
COREKIT_API corekit_status corekit_sc_count_formula(int64_t n, int32_t t, uint64_t* out);
/* Odd n with n != 5 (mod 7) only; COREKIT_ERR_PRECONDITION otherwise. */
COREKIT_API corekit_status corekit_sc7_ono_raji(int64_t n, uint64_t* out);
/* H(num/den) as a reduced fraction. COREKIT_ERR_NON_NEGATIVE_ARGUMENT when num/den >= 0. */
COREKIT_API corekit_status corekit_hurwitz(int64_t num, int64_t den, int64_t* out_num, int64_t* out_den);
/* Parses "p" or "p/q". */
COREKIT_API corekit_status corekit_parse_rational(const char* text, int64_t* num, int64_t* den);

/* ---- supernorm ------------------------------------------------------------ */

COREKIT_API corekit_status corekit_nth_prime(uint64_t index, uint64_t* out);
/* Decimal string of prod p_i^{m_i}. */
COREKIT_API corekit_status corekit_supernorm(const corekit_partition* p, char** out);
COREKIT_API corekit_status corekit_supernorm_inverse(const char* decimal, corekit_partition** out);
/* JSON array of decimal strings, ascending. */
COREKIT_API corekit_status corekit_t_core_supernorm_set(int32_t n, int32_t t, char** out_json);

/* ---- verification sweeps --------------------------------------------------- */

typedef void (*corekit_check_callback)(const char* name, int passed, const char* detail, void* user);

/* suite: "hooks", "bijection", "sc7", "supernorm" or "all". threads == 0 uses
 * every hardware thread. *all_passed is 1 iff every check passed. */
COREKIT_API corekit_status corekit_verify(const char* suite, int32_t n_max, unsigned threads,
                                          corekit_check_callback callback, void* user, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* COREKIT_COREKIT_H */
