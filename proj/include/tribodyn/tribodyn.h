/*
 * tribodyn C API.
 *
 * Every function returning tribodyn_status reports failure through its return
 * value and leaves a human-readable message in tribodyn_last_error() for the
 * calling thread. Out-parameters are untouched on failure.
 *
 * Handles (tribodyn_inits, tribodyn_trajectory, ...) are opaque, immutable
 * after creation and must be released with their matching *_free function.
 * Strings returned through `char **` are owned by the caller and released with
 * tribodyn_string_free; `const char *` fields inside result structs borrow
 * from the handle they were read from.
 *
 * Exact values cross the boundary as decimal strings: integers as "123",
 * rationals always as "p/q" in lowest terms with q > 0.
 */
#ifndef TRIBODYN_H
#define TRIBODYN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TRIBODYN_BUILDING)
#    define TRIBODYN_API __declspec(dllexport)
#  else
#    define TRIBODYN_API __declspec(dllimport)
#  endif
#else
#  define TRIBODYN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tribodyn_status {
  TRIBODYN_OK = 0,
  TRIBODYN_ERR_INVALID_ARGUMENT = 1,
  TRIBODYN_ERR_PARSE = 2,
  TRIBODYN_ERR_ZERO_DENOMINATOR = 3,
  TRIBODYN_ERR_DIVISION_BY_ZERO = 4,
  TRIBODYN_ERR_OUT_OF_PRECISION_RANGE = 5,
  TRIBODYN_ERR_FORBIDDEN_ENCOUNTER = 6,
  TRIBODYN_ERR_OUT_OF_RANGE = 7,
  TRIBODYN_ERR_INTERNAL = 8
} tribodyn_status;

typedef enum tribodyn_system {
  TRIBODYN_SYSTEM_PLUS = 0,
  TRIBODYN_SYSTEM_MINUS = 1
} tribodyn_system;

typedef enum tribodyn_branch {
  TRIBODYN_BRANCH_X_ODD = 0,
  TRIBODYN_BRANCH_X_EVEN = 1,
  TRIBODYN_BRANCH_Y_ODD = 2,
  TRIBODYN_BRANCH_Y_EVEN = 3
} tribodyn_branch;

typedef enum tribodyn_terminator_kind {
  TRIBODYN_TERMINATOR_NONE = 0,
  TRIBODYN_TERMINATOR_SINGULAR = 1,
  TRIBODYN_TERMINATOR_GROWTH_LIMIT = 2
} tribodyn_terminator_kind;

typedef enum tribodyn_denominator {
  TRIBODYN_DENOMINATOR_X = 0,
  TRIBODYN_DENOMINATOR_Y = 1,
  TRIBODYN_DENOMINATOR_BOTH = 2
} tribodyn_denominator;

typedef enum tribodyn_component {
  TRIBODYN_COMPONENT_A = 0,
  TRIBODYN_COMPONENT_B = 1,
  TRIBODYN_COMPONENT_C = 2,
  TRIBODYN_COMPONENT_D = 3
} tribodyn_component;

typedef enum tribodyn_verdict {
  TRIBODYN_VERDICT_LOCALLY_ASYMPTOTICALLY_STABLE = 0,
  TRIBODYN_VERDICT_UNSTABLE = 1,
  TRIBODYN_VERDICT_INCONCLUSIVE = 2
} tribodyn_verdict;

typedef struct tribodyn_inits tribodyn_inits;
typedef struct tribodyn_inits_list tribodyn_inits_list;
typedef struct tribodyn_trajectory tribodyn_trajectory;
typedef struct tribodyn_equivalence tribodyn_equivalence;

typedef struct tribodyn_complex {
  double re;
  double im;
} tribodyn_complex;

typedef struct tribodyn_point {
  int64_t n;
  const char *x_exact;
  const char *y_exact;
  double x;
  double y;
} tribodyn_point;

typedef struct tribodyn_terminator {
  tribodyn_terminator_kind kind;
  int64_t step;
  tribodyn_denominator which; /* singular terminators only */
  size_t digits;              /* growth-limit terminators only */
} tribodyn_terminator;

typedef struct tribodyn_forbidden_hit {
  int found;
  int64_t n;
  tribodyn_component which;
  int64_t step; /* sequence index divided by the vanishing expression */
} tribodyn_forbidden_hit;

typedef struct tribodyn_equivalence_summary {
  int64_t n_max;
  int64_t compared;
  size_t discrepancies;
  int runtime_found;
  int64_t runtime_step;
  tribodyn_forbidden_hit analytic;
  int onset_agrees;
} tribodyn_equivalence_summary;

typedef struct tribodyn_discrepancy {
  int64_t index;
  int y_component;
  const char *closed; /* NULL when the formula's denominator vanished */
  const char *iterated;
} tribodyn_discrepancy;

typedef struct tribodyn_roots {
  double alpha;
  tribodyn_complex beta;
  tribodyn_complex gamma;
} tribodyn_roots;

typedef struct tribodyn_equilibrium_report {
  tribodyn_system system;
  double value;
  double residual;
  tribodyn_complex complex_pair[2];
} tribodyn_equilibrium_report;

typedef struct tribodyn_stability_report {
  int has_system; /* 0 for reports built from an arbitrary matrix */
  tribodyn_system system;
  double equilibrium;
  tribodyn_complex eigenvalues[4];
  double moduli[4];
  tribodyn_verdict verdict;
} tribodyn_stability_report;

typedef struct tribodyn_convergence {
  int converged;
  int64_t steps;
  double final_error;
} tribodyn_convergence;

/* ---- diagnostics and memory ------------------------------------------- */

TRIBODYN_API const char *tribodyn_last_error(void);
TRIBODYN_API const char *tribodyn_status_name(tribodyn_status status);
TRIBODYN_API const char *tribodyn_version(void);
TRIBODYN_API void tribodyn_string_free(char *s);

/* ---- names ------------------------------------------------------------- */

TRIBODYN_API tribodyn_status tribodyn_system_parse(const char *name, tribodyn_system *out);
TRIBODYN_API const char *tribodyn_system_name(tribodyn_system system);
TRIBODYN_API tribodyn_status tribodyn_branch_parse(const char *name, tribodyn_branch *out);
TRIBODYN_API const char *tribodyn_branch_name(tribodyn_branch branch);
TRIBODYN_API const char *tribodyn_denominator_name(tribodyn_denominator which);
TRIBODYN_API const char *tribodyn_component_name(tribodyn_component which);
TRIBODYN_API const char *tribodyn_verdict_name(tribodyn_verdict verdict);

/* ---- Tribonacci numbers ------------------------------------------------ */

TRIBODYN_API tribodyn_status tribodyn_trib(int64_t n, char **out);
TRIBODYN_API tribodyn_status tribodyn_characteristic_roots(tribodyn_roots *out);
/* Fails with TRIBODYN_ERR_OUT_OF_PRECISION_RANGE for |n| > 70. */
TRIBODYN_API tribodyn_status tribodyn_binet(int64_t n, double *out);
/* trib(n + r) / trib(n); TRIBODYN_ERR_DIVISION_BY_ZERO when trib(n) = 0. */
TRIBODYN_API tribodyn_status tribodyn_ratio(int64_t n, int64_t r, double *out);

/* ---- rationals and initial conditions ---------------------------------- */

/* Canonical "p/q" form of "p/q" or "p". */
TRIBODYN_API tribodyn_status tribodyn_rational_normalize(const char *text, char **out);
TRIBODYN_API tribodyn_status tribodyn_rational_to_double(const char *text, double *out);

TRIBODYN_API tribodyn_status tribodyn_inits_create(const char *x_m1, const char *y_m1,
                                                   const char *x_0, const char *y_0,
                                                   tribodyn_inits **out);
/* Comma-separated "x_{-1},y_{-1},x_0,y_0". */
TRIBODYN_API tribodyn_status tribodyn_inits_parse(const char *csv, tribodyn_inits **out);
/* component: 0 = x_{-1}, 1 = y_{-1}, 2 = x_0, 3 = y_0. Borrowed string. */
TRIBODYN_API const char *tribodyn_inits_component(const tribodyn_inits *inits, int component);
TRIBODYN_API void tribodyn_inits_free(tribodyn_inits *inits);

/* Deterministic sample: components p/q with |p| <= max_abs_numerator and
 * 1 <= q <= max_denominator; if bound > 0, every |p/q| <= bound. */
TRIBODYN_API tribodyn_status tribodyn_inits_list_random(uint64_t seed, size_t count,
                                                        int64_t max_abs_numerator,
                                                        int64_t max_denominator, int64_t bound,
                                                        tribodyn_inits_list **out);
TRIBODYN_API size_t tribodyn_inits_list_size(const tribodyn_inits_list *list);
/* Borrowed; valid while the list lives. NULL when out of range. */
TRIBODYN_API const tribodyn_inits *tribodyn_inits_list_at(const tribodyn_inits_list *list,
                                                          size_t i);
TRIBODYN_API void tribodyn_inits_list_free(tribodyn_inits_list *list);

/* ---- iteration ----------------------------------------------------------- */

/* digit_limit = 0 selects the default cap of 100000 decimal digits. */
TRIBODYN_API tribodyn_status tribodyn_iterate(tribodyn_system system, const tribodyn_inits *inits,
                                              int64_t n_max, size_t digit_limit,
                                              tribodyn_trajectory **out);
TRIBODYN_API size_t tribodyn_trajectory_size(const tribodyn_trajectory *t);
TRIBODYN_API tribodyn_status tribodyn_trajectory_point(const tribodyn_trajectory *t, size_t i,
                                                       tribodyn_point *out);
TRIBODYN_API void tribodyn_trajectory_terminator(const tribodyn_trajectory *t,
                                                 tribodyn_terminator *out);
TRIBODYN_API void tribodyn_trajectory_free(tribodyn_trajectory *t);

/* First singular step through n_max; *found = 0 when there is none. */
TRIBODYN_API tribodyn_status tribodyn_runtime_forbidden(tribodyn_system system,
                                                        const tribodyn_inits *inits,
                                                        int64_t n_max, int *found,
                                                        int64_t *step);

/* ---- closed form --------------------------------------------------------- */

TRIBODYN_API tribodyn_status tribodyn_closed_value(tribodyn_system system, tribodyn_branch branch,
                                                   int64_t n, const tribodyn_inits *inits,
                                                   char **out);
/* out[0..3] = A_n, B_n, C_n, D_n; free each with tribodyn_string_free. */
TRIBODYN_API tribodyn_status tribodyn_denominators(tribodyn_system system, int64_t n,
                                                   const tribodyn_inits *inits, char *out[4]);
TRIBODYN_API tribodyn_status tribodyn_analytic_forbidden(tribodyn_system system,
                                                         const tribodyn_inits *inits,
                                                         int64_t n_max,
                                                         tribodyn_forbidden_hit *out);

TRIBODYN_API tribodyn_status tribodyn_equivalence_check(tribodyn_system system,
                                                        const tribodyn_inits *inits,
                                                        int64_t n_max,
                                                        tribodyn_equivalence **out);
TRIBODYN_API void tribodyn_equivalence_summary_get(const tribodyn_equivalence *e,
                                                   tribodyn_equivalence_summary *out);
TRIBODYN_API tribodyn_status tribodyn_equivalence_discrepancy(const tribodyn_equivalence *e,
                                                              size_t i,
                                                              tribodyn_discrepancy *out);
TRIBODYN_API void tribodyn_equivalence_free(tribodyn_equivalence *e);

/* ---- equilibrium and stability ------------------------------------------ */

TRIBODYN_API tribodyn_status tribodyn_equilibrium(tribodyn_system system,
                                                  tribodyn_equilibrium_report *out);
/* Row-major 4x4 in the state order (x_n, x_{n-1}, y_n, y_{n-1}). */
TRIBODYN_API tribodyn_status tribodyn_jacobian(tribodyn_system system, double out[16]);
TRIBODYN_API tribodyn_status tribodyn_stability(tribodyn_system system,
                                                tribodyn_stability_report *out);
/* Eigenvalues of an arbitrary row-major 4x4 matrix and the stability rule. */
TRIBODYN_API tribodyn_status tribodyn_stability_matrix(const double matrix[16],
                                                       tribodyn_stability_report *out);
/* Largest pairing distance between factored-quadratic eigenvalues and a
 * general dense eigensolver on the Jacobian. */
TRIBODYN_API tribodyn_status tribodyn_eigen_crosscheck(tribodyn_system system, double *out);

TRIBODYN_API tribodyn_status tribodyn_convergence_test(tribodyn_system system,
                                                       const tribodyn_inits *inits, double tol,
                                                       int64_t n_max,
                                                       tribodyn_convergence *out);
/* (e_to / e_from)^(2 / (to - from)) along the exact trajectory, errors taken
 * in 256-bit floating point. to - from must be positive and even. */
TRIBODYN_API tribodyn_status tribodyn_contraction_rate(tribodyn_system system,
                                                       const tribodyn_inits *inits,
                                                       int64_t from, int64_t to, double *out);

#ifdef __cplusplus
}
#endif

#endif /* TRIBODYN_H */
