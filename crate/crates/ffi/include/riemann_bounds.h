#ifndef RIEMANN_BOUNDS_H
#define RIEMANN_BOUNDS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Estimator codes accepted by `rb_problem_estimate`.
 */
typedef enum RbEstimator {
  RB_ESTIMATOR_DAVIS_A = 0,
  RB_ESTIMATOR_DAVIS_B = 1,
  RB_ESTIMATOR_EINFELDT = 2,
  RB_ESTIMATOR_BATTEN = 3,
  RB_ESTIMATOR_TORO = 4,
  RB_ESTIMATOR_TMS_A = 5,
  RB_ESTIMATOR_TMS_B = 6,
  RB_ESTIMATOR_TMS_C = 7,
  RB_ESTIMATOR_TMS_D = 8,
  RB_ESTIMATOR_EXACT = 9,
} RbEstimator;

typedef enum RbPattern {
  RB_PATTERN_RR = 0,
  RB_PATTERN_RS = 1,
  RB_PATTERN_SR = 2,
  RB_PATTERN_SS = 3,
  RB_PATTERN_VACUUM = 4,
  RB_PATTERN_UNKNOWN = 5,
} RbPattern;

typedef enum RbStatus {
  RB_STATUS_OK = 0,
  RB_STATUS_NULL_POINTER = 1,
  RB_STATUS_INVALID_STATE = 2,
  RB_STATUS_INVALID_PARAMS = 3,
  RB_STATUS_INVALID_ARGUMENT = 4,
  RB_STATUS_VACUUM = 5,
  RB_STATUS_DRY_BED = 6,
  RB_STATUS_COLLAPSE = 7,
  RB_STATUS_UNSUPPORTED_ESTIMATOR = 8,
  RB_STATUS_NO_CONVERGENCE = 9,
  RB_STATUS_INVALID_BRACKET = 10,
  RB_STATUS_DEGENERATE_POINTS = 11,
  RB_STATUS_ZERO_MAX_SPEED = 12,
  RB_STATUS_PANIC = 13,
} RbStatus;

typedef enum RbSystem {
  RB_SYSTEM_EULER = 0,
  RB_SYSTEM_SWE = 1,
  RB_SYSTEM_BFE = 2,
} RbSystem;

/**
 * Opaque handle to a Riemann problem.
 */
typedef struct RbProblem RbProblem;

typedef struct RbEulerState {
  double rho;
  double u;
  double p;
} RbEulerState;

typedef struct RbSweState {
  double h;
  double u;
} RbSweState;

typedef struct RbBfeState {
  double area;
  double u;
} RbBfeState;

/**
 * Exact star state. `star` is the pressure, depth or area depending on
 * the system.
 */
typedef struct RbExactSolution {
  double star;
  double u_star;
  enum RbPattern pattern;
  double s_left;
  double s_right;
} RbExactSolution;

typedef struct RbSpeedBounds {
  double s_left;
  double s_right;
  enum RbEstimator estimator;
  enum RbPattern pattern;
} RbSpeedBounds;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates an Euler problem. `gamma` must exceed 1.
 *
 * # Safety
 * `out` must be valid for writes. On success `*out` owns a handle that
 * must be released with `rb_problem_free`.
 */
enum RbStatus rb_euler_problem_new(struct RbEulerState left,
                                   struct RbEulerState right,
                                   double gamma,
                                   struct RbProblem **out);

/**
 * Creates a shallow-water problem with gravitational acceleration `g`.
 *
 * # Safety
 * As for `rb_euler_problem_new`.
 */
enum RbStatus rb_swe_problem_new(struct RbSweState left,
                                 struct RbSweState right,
                                 double g,
                                 struct RbProblem **out);

/**
 * Creates a blood-flow problem (CGS units).
 *
 * # Safety
 * As for `rb_euler_problem_new`.
 */
enum RbStatus rb_bfe_problem_new(struct RbBfeState left,
                                 struct RbBfeState right,
                                 double beta,
                                 double rho,
                                 struct RbProblem **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `problem` must be null or a handle from an `rb_*_problem_new` call that
 * has not been freed yet.
 */
void rb_problem_free(struct RbProblem *problem);

/**
 * # Safety
 * `problem` must be null or a live handle; `out` null or valid for writes.
 */
enum RbStatus rb_problem_system(const struct RbProblem *problem, enum RbSystem *out);

/**
 * Wave pattern; `RB_PATTERN_VACUUM` when the data leave the domain.
 *
 * # Safety
 * As for `rb_problem_system`.
 */
enum RbStatus rb_problem_classify(const struct RbProblem *problem, enum RbPattern *out);

/**
 * # Safety
 * As for `rb_problem_system`.
 */
enum RbStatus rb_problem_solve_exact(const struct RbProblem *problem, struct RbExactSolution *out);

/**
 * `estimator` is one of the `RbEstimator` codes.
 *
 * # Safety
 * As for `rb_problem_system`.
 */
enum RbStatus rb_problem_estimate(const struct RbProblem *problem,
                                  int32_t estimator,
                                  struct RbSpeedBounds *out);

/**
 * Closed-form two-rarefaction star value, an upper bound for the exact one.
 *
 * # Safety
 * As for `rb_problem_system`.
 */
enum RbStatus rb_problem_two_rarefaction(const struct RbProblem *problem, double *out);

/**
 * Star function `f_L(x) + f_R(x) + u_R - u_L`.
 *
 * # Safety
 * As for `rb_problem_system`.
 */
enum RbStatus rb_problem_star_function(const struct RbProblem *problem, double x, double *out);

/**
 * Courant time step over `len` interface speed pairs.
 *
 * # Safety
 * `speeds` must point to `len` readable elements; `out` must be valid for
 * writes.
 */
enum RbStatus rb_courant_dt(const struct RbSpeedBounds *speeds,
                            size_t len,
                            double dx,
                            double c_cfl,
                            double *out);

/**
 * Static, NUL-terminated description of a status code. Unknown codes get
 * a generic message.
 */
const char *rb_status_message(int32_t status);

/**
 * Library version, NUL-terminated.
 */
const char *rb_version(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* RIEMANN_BOUNDS_H */
