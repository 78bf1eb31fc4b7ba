/* Copyright (c) 2026 the siggb developers
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

/* C interface to the siggb engine: signature Groebner bases of two-sided
 * ideals in the free algebra over the rationals, a classical Buchberger
 * baseline, cofactor certificates and syzygy recovery.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions return SIGGB_OK on success; on failure, siggb_last_error()
 * describes what went wrong for the calling thread. Strings returned through
 * char** are heap-allocated and must be released with siggb_string_free().
 */

#ifndef SIGGB_H
#define SIGGB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct siggb_problem siggb_problem;
typedef struct siggb_result siggb_result;

typedef enum {
  SIGGB_OK = 0,
  SIGGB_ERROR_PARSE = 1,
  SIGGB_ERROR_ARGUMENT = 2,
  SIGGB_ERROR_IO = 3,
  SIGGB_ERROR_NOT_IN_IDEAL = 4,
  SIGGB_ERROR_INCONSISTENT = 5,
  SIGGB_ERROR_INTERNAL = 6
} siggb_status;

typedef struct {
  int max_degree;             /* 0: none; otherwise drop pairs above this degree */
  int use_syzygy_criterion;   /* default 1 */
  int use_f5_criterion;       /* default 1 */
  int use_singular_criterion; /* default 1 */
  int top_only_reduction;     /* default 0: full regular s-reduction */
  long long pairs_budget;     /* 0: unlimited */
  double timeout_seconds;     /* 0: none */
} siggb_options;

/* Fills in the defaults described above. */
void siggb_options_init(siggb_options* opts);

/* Thread-local message for the most recent failure. Never NULL. */
const char* siggb_last_error(void);

/* --- problems ----------------------------------------------------------- */

siggb_status siggb_problem_from_file(const char* path, siggb_problem** out);
siggb_status siggb_problem_from_string(const char* text, siggb_problem** out);
void siggb_problem_free(siggb_problem* prob);

int siggb_problem_variable_count(const siggb_problem* prob);
int siggb_problem_generator_count(const siggb_problem* prob);
/* Degree bound from the problem file; 0 when none. */
int siggb_problem_max_degree(const siggb_problem* prob);
siggb_status siggb_problem_generator(const siggb_problem* prob, int i, char** out);

/* --- computations -------------------------------------------------------- */

/* Signature pipeline (minimal signature Groebner basis + syzygy signatures). */
siggb_status siggb_compute(const siggb_problem* prob, const siggb_options* opts,
                           siggb_result** out);
/* Same loop carrying full module witnesses. */
siggb_status siggb_compute_labelled(const siggb_problem* prob, const siggb_options* opts,
                                    siggb_result** out);
/* Classical Buchberger enumeration; chain_criterion enables the optimized
 * pair elimination. Criteria toggles in opts are ignored here. */
siggb_status siggb_compute_buchberger(const siggb_problem* prob, const siggb_options* opts,
                                      int chain_criterion, siggb_result** out);
void siggb_result_free(siggb_result* res);

/* --- results ------------------------------------------------------------- */

int siggb_result_basis_size(const siggb_result* res);
siggb_status siggb_result_basis_poly(const siggb_result* res, int i, char** out);
/* Fails for Buchberger results, which carry no signatures. */
siggb_status siggb_result_basis_signature(const siggb_result* res, int i, char** out);
/* Fails unless the result carries labels (labelled pipeline or after
 * siggb_result_recover_labels). */
siggb_status siggb_result_basis_label(const siggb_result* res, int i, char** out);

int siggb_result_syzygy_count(const siggb_result* res);
siggb_status siggb_result_syzygy_signature(const siggb_result* res, int i, char** out);
/* The full syzygy witness; fails unless the result carries module data. */
siggb_status siggb_result_syzygy_element(const siggb_result* res, int i, char** out);

/* "complete", "up to signature ...", or "truncated at degree ...". */
siggb_status siggb_result_status_string(const siggb_result* res, char** out);
siggb_status siggb_result_stats_json(const siggb_result* res, char** out);
/* Numeric stats: "spolys", "zero_reductions", "syzygy_hits", "f5_hits",
 * "singular_hits", "chain_hits", "basis_size", "syzygy_count", "complete"
 * (0/1). Returns -1 for unknown keys. */
long long siggb_result_stat(const siggb_result* res, const char* key);
double siggb_result_wall_ms(const siggb_result* res);

/* Rebuilds full module witnesses for a signature-pipeline result. */
siggb_status siggb_result_recover_labels(siggb_result* res);
/* Recovers one syzygy per recorded signature (implies label recovery). */
siggb_status siggb_result_recover_syzygies(siggb_result* res);

/* Newline-separated listing of the syzygy-module basis up to the degree
 * bound: the recovered syzygies plus the trivial syzygies of the basis,
 * deduplicated by signature. Requires recovered syzygies. */
siggb_status siggb_result_enumerate_syzygy_basis(const siggb_result* res, int degree_bound,
                                                 char** out);

/* --- certificates -------------------------------------------------------- */

/* Ideal-membership certificate for the target expression: one
 * "c | a | i | b" row per summand of target = sum c * a * f_i * b.
 * SIGGB_ERROR_NOT_IN_IDEAL when the target does not reduce to zero at this
 * truncation. */
siggb_status siggb_certify(const siggb_problem* prob, const siggb_options* opts,
                           const char* target, char** out);

void siggb_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* SIGGB_H */
