/* Copyright 2026 The maxaffine Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the maxaffine core: exact fat-Cantor-set measures,
 * Lipschitz function probes, minimax affine fitting, and the certification
 * campaigns.
 *
 * Conventions:
 *   - Every function returns a maf_status; MAF_OK means the out parameters
 *     are filled. On failure maf_last_error() describes what went wrong for
 *     the calling thread.
 *   - Rational numbers cross the boundary as canonical "p/q" strings ("p"
 *     when the denominator is 1). Out strings are heap-allocated; release
 *     them with maf_string_free.
 *   - Handles are opaque; release them with the matching _free function.
 *     Passing NULL where a handle or out pointer is required yields
 *     MAF_ERR_INVALID_ARGUMENT.
 */

#ifndef MAXAFFINE_MAXAFFINE_H_
#define MAXAFFINE_MAXAFFINE_H_

#include <stdint.h>

#ifndef MAF_API
#if defined(MAF_BUILD) && defined(__GNUC__)
#define MAF_API __attribute__((visibility("default")))
#else
#define MAF_API
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum maf_status {
  MAF_OK = 0,
  MAF_ERR_INVALID_ARGUMENT = 1,
  MAF_ERR_DOMAIN = 2,
  MAF_ERR_INFEASIBLE = 3,
  MAF_ERR_DEGENERATE = 4,
  MAF_ERR_PARSE = 5,
  MAF_ERR_IO = 6,
  MAF_ERR_INTERNAL = 7
} maf_status;

typedef struct maf_cantor maf_cantor;
typedef struct maf_function maf_function;

/* Message for the calling thread's most recent failure. The pointer stays
 * valid until the next failing call on the same thread; do not free it. */
MAF_API const char* maf_last_error(void);

MAF_API void maf_string_free(char* s);

/* ---- fat Cantor sets ------------------------------------------------- */

/* Step n removes middles of length 3^-n (classic measure-zero set). */
MAF_API maf_status maf_cantor_build_ternary(int depth, maf_cantor** out);

/* Step n removes middles of length k*c^n/4^(n-1); requires 0 < c < 1 and
 * 0 < k <= 1/4, leaving limit measure 1 - kc/(1 - c/2). */
MAF_API maf_status maf_cantor_build_geometric(const char* c, const char* k,
                                              int depth, maf_cantor** out);

/* The same construction carried extra_depth more steps. */
MAF_API maf_status maf_cantor_refine(const maf_cantor* set, int extra_depth,
                                     maf_cantor** out);

MAF_API void maf_cantor_free(maf_cantor* set);

MAF_API int maf_cantor_depth(const maf_cantor* set);
MAF_API maf_status maf_cantor_truncation_measure(const maf_cantor* set, char** out);
MAF_API maf_status maf_cantor_limit_measure(const maf_cantor* set, char** out);

/* truncation measure minus limit measure: bounds every bracket width. */
MAF_API maf_status maf_cantor_tail(const maf_cantor* set, char** out);

/* Certified bracket for the limit set's measure inside [a, b] within [0, 1]. */
MAF_API maf_status maf_cantor_measure_in(const maf_cantor* set, const char* a,
                                         const char* b, char** lo, char** hi);

/* Closed interval of positive length inside a removed middle, disjoint from
 * the set; *found is 0 when the window holds none (then lo/hi stay unset). */
MAF_API maf_status maf_cantor_gap_within(const maf_cantor* set, const char* a,
                                         const char* b, int* found, char** lo,
                                         char** hi);

/* Document {schedule, c, k, depth, truncation_measure, limit_measure, tail,
 * components}; include_components = 0 writes "components": null. */
MAF_API maf_status maf_cantor_to_json(const maf_cantor* set,
                                      int include_components, char** out);
MAF_API maf_status maf_cantor_write_json(const maf_cantor* set,
                                         int include_components,
                                         const char* path);
MAF_API maf_status maf_cantor_from_json(const char* json_text, maf_cantor** out);

/* ---- Lipschitz functions ---------------------------------------------- */

/* Piecewise-linear from {"breakpoints": [[p,q],...], "values": [[p,q],...]}. */
MAF_API maf_status maf_function_pl_from_json(const char* json_text,
                                             maf_function** out);

/* First dim coordinates of the sequence-of-tents map (sup norm). */
MAF_API maf_status maf_function_tent(int dim, maf_function** out);

/* f(t) = t - lambda(C intersect [0, t]); the set handle is copied. */
MAF_API maf_status maf_function_cantor_integral(const maf_cantor* set,
                                                maf_function** out);

MAF_API void maf_function_free(maf_function* f);

MAF_API int maf_function_dim(const maf_function* f);

/* JSON array of per-coordinate value brackets: [["lo","hi"], ...]. */
MAF_API maf_status maf_function_eval(const maf_function* f, const char* t,
                                     char** brackets_json);

/* Certified bracket for the Lipschitz number under the sup norm. */
MAF_API maf_status maf_function_lip_number(const maf_function* f, char** lo,
                                           char** hi);

/* Certified bracket for ||f(x) - f(y)|| / |x - y|. */
MAF_API maf_status maf_function_difference_quotient(const maf_function* f,
                                                    const char* x, const char* y,
                                                    char** lo, char** hi);

/* Per-coordinate brackets of (f(x + h) - f(x)) / h as [["lo","hi"], ...]. */
MAF_API maf_status maf_function_derivative_probe(const maf_function* f,
                                                 const char* x, const char* h,
                                                 char** brackets_json);

typedef enum maf_attainment {
  MAF_ATTAINMENT_INCONCLUSIVE = 0,
  MAF_ATTAINMENT_ATTAINED = 1,
  MAF_ATTAINMENT_NOT_ATTAINED = 2
} maf_attainment;

/* Decides whether the pairs (JSON [["x","y"], ...]) witness attainment of
 * the Lipschitz number within tol; best_lo/best_hi bracket the largest
 * probed quotient and best_pair gets its index (pass NULL to skip any). */
MAF_API maf_status maf_function_strong_attainment(const maf_function* f,
                                                  const char* pairs_json,
                                                  const char* tol,
                                                  maf_attainment* status,
                                                  char** best_lo, char** best_hi,
                                                  int* best_pair);

/* Two secant slopes at x, both at steps under delta in size, whose sup-norm
 * distance is certified >= lower; *found is 0 when the scan comes up empty
 * (then the out strings stay unset). */
MAF_API maf_status maf_function_oscillation_witness(const maf_function* f,
                                                    const char* x,
                                                    const char* delta,
                                                    const char* lower,
                                                    int* found, char** step_a,
                                                    char** step_b,
                                                    char** separation_lo);

/* ---- affine fitting ---------------------------------------------------- */

/* Enclosures for the extremes over [a, b] of f(t) - slope*t. */
MAF_API maf_status maf_residual_extremes(const maf_function* f, const char* a,
                                         const char* b, const char* slope,
                                         char** max_lo, char** max_hi,
                                         char** min_lo, char** min_hi);

/* Minimax intercept at fixed slope over [a, b] and its sup error, both as
 * enclosures (exact points for piecewise-linear f). */
MAF_API maf_status maf_best_intercept(const maf_function* f, const char* a,
                                      const char* b, const char* slope,
                                      char** y_lo, char** y_hi, char** err_lo,
                                      char** err_hi);

/* Affine approximation with slope of maximal size on a sub-window of [a, b];
 * f must be piecewise-linear and nonconstant there, 0 < eps < 1. Returns
 * {interval, slope, intercept, sup_error, bound, lip_restricted, lip_gap,
 * sign} with exact rationals. */
MAF_API maf_status maf_maximal_aap_fit(const maf_function* f, const char* a,
                                       const char* b, const char* eps,
                                       char** report_json);

/* ---- certification campaigns ------------------------------------------ */

/* Certifies lambda(C intersect [a,b]) > (b-a)/2 on every grid window with
 * b-a >= width_floor (pass NULL to default the floor to c; NULL grid_step
 * defaults to c/64). depth <= 0 selects the depth from the closed-form
 * slack; threads = 0 uses all hardware threads (the MAXAFFINE_THREADS env
 * var caps both cases). */
MAF_API maf_status maf_lemma_campaign(const char* c, const char* k,
                                      const char* grid_step,
                                      const char* width_floor, int depth,
                                      int threads, char** report_json,
                                      int* all_certified);

/* Certifies that every affine map with slope in the grid (JSON array of
 * "p/q", each size > 7/8; NULL for the default +-(7/8 + j/64) grid) misses
 * f(t) = t - lambda(C intersect [0,t]) by more than (b-a)/8 on every grid
 * window with b-a >= c, escalating the truncation depth up to depth_budget. */
MAF_API maf_status maf_falsify_campaign(const char* c, const char* grid_step,
                                        const char* slopes_json,
                                        int depth_budget, int threads,
                                        char** report_json, int* all_certified);

/* Campaign report (JSON) to CSV, one row per cell. */
MAF_API maf_status maf_report_to_csv(const char* report_json, char** csv);

/* Campaign report (JSON) to its {params, total, certified, inconclusive}
 * summary. */
MAF_API maf_status maf_report_summary(const char* report_json,
                                      char** summary_json);

/* ---- corpora and worked examples --------------------------------------- */

/* Runs the maximal-slope construction over a seeded random piecewise-linear
 * corpus and checks both guarantees exactly; *all_passed is 1 when every
 * instance passes. */
MAF_API maf_status maf_aap_corpus(uint64_t seed, int count, const char* eps,
                                  char** report_json, int* all_passed);

/* Tent-map example suite: exact Lipschitz number, symmetric secants, and
 * the oscillation-witness scan. */
MAF_API maf_status maf_tent_example(int dim, char** report_json, int* ok);

/* CSV sample of all tent coordinates on the 2^dim-point grid. */
MAF_API maf_status maf_tent_grid_csv(int dim, const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MAXAFFINE_MAXAFFINE_H_ */
