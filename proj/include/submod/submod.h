/*
 * Copyright 2026 The Authors.
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

/*
 * C interface of libsubmod: sparsification of decomposable submodular
 * functions and greedy maximization on the result.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a submod_status; on failure a message is
 * available from submod_last_error() on the same thread until the next
 * failing call. Strings returned through char** are heap-allocated and must
 * be released with submod_string_free().
 */

#ifndef SUBMOD_SUBMOD_H_
#define SUBMOD_SUBMOD_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SUBMOD_API __declspec(dllexport)
#else
#define SUBMOD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum submod_status {
  SUBMOD_OK = 0,
  SUBMOD_INVALID_ARGUMENT = 1,
  SUBMOD_OUT_OF_RANGE = 2,
  SUBMOD_BUDGET_EXCEEDED = 3,
  SUBMOD_INCOMPATIBLE = 4,
  SUBMOD_IO_ERROR = 5,
  SUBMOD_PARSE_ERROR = 6,
  SUBMOD_INTERNAL = 7
} submod_status;

typedef struct submod_instance submod_instance;
typedef struct submod_weights submod_weights;
typedef struct submod_matroid submod_matroid;

SUBMOD_API const char* submod_version(void);
SUBMOD_API const char* submod_status_name(submod_status status);
SUBMOD_API const char* submod_last_error(void);
SUBMOD_API void submod_string_free(char* s);

/* ---- Instances ---------------------------------------------------------- */

SUBMOD_API submod_status submod_instance_load(const char* path,
                                              submod_instance** out);
SUBMOD_API submod_status submod_instance_parse(const char* json_text,
                                               submod_instance** out);
SUBMOD_API submod_status submod_instance_save(const submod_instance* inst,
                                              const char* path);
SUBMOD_API submod_status submod_instance_to_json(const submod_instance* inst,
                                                 char** out);
SUBMOD_API void submod_instance_free(submod_instance* inst);

/* "coverage", "facility", "hypergraph" or "table". */
SUBMOD_API const char* submod_instance_type(const submod_instance* inst);
SUBMOD_API int submod_instance_ground_size(const submod_instance* inst);
SUBMOD_API int submod_instance_num_components(const submod_instance* inst);
/* Coverage only: universe elements dropped because nothing covers them. */
SUBMOD_API int submod_instance_dropped(const submod_instance* inst);

SUBMOD_API submod_status submod_gen_coverage(uint64_t seed, int n_sets,
                                             int universe_size, double density,
                                             submod_instance** out);
/* law: "uniform" or "clustered". */
SUBMOD_API submod_status submod_gen_facility(uint64_t seed, int n_facilities,
                                             int n_clients, const char* law,
                                             submod_instance** out);
/* penalty: "cut", "linear" or "quadratic". */
SUBMOD_API submod_status submod_gen_hypergraph(uint64_t seed, int n_vertices,
                                               int n_edges, int max_edge_size,
                                               const char* penalty,
                                               submod_instance** out);
/* Pickup points and candidate locations as "x,y" CSV files. */
SUBMOD_API submod_status submod_import_pickups(const char* pickups_path,
                                               const char* locations_path,
                                               submod_instance** out);
/* Bipartite "left,right" edge CSV; left vertices form the ground set. */
SUBMOD_API submod_status submod_import_bipartite(const char* edges_path,
                                                 submod_instance** out);

/* F(S), or F'(S) when weights is non-null. */
SUBMOD_API submod_status submod_eval(const submod_instance* inst,
                                     const submod_weights* weights,
                                     const int* subset, size_t len,
                                     double* out);
SUBMOD_API submod_status submod_eval_component(const submod_instance* inst,
                                               int component,
                                               const int* subset, size_t len,
                                               double* out);
/* Lovasz extension of F (or F') at x in [0,1]^n; len must equal n. */
SUBMOD_API submod_status submod_lovasz_eval(const submod_instance* inst,
                                            const submod_weights* weights,
                                            const double* x, size_t len,
                                            double* out);

/* ---- Matroids ----------------------------------------------------------- */

SUBMOD_API submod_status submod_matroid_uniform(int n, int k,
                                                submod_matroid** out);
/* {"blocks": [[...], ...], "capacities": [...]} */
SUBMOD_API submod_status submod_matroid_partition(const char* json_text, int n,
                                                  submod_matroid** out);
SUBMOD_API submod_status submod_matroid_load_partition(const char* path, int n,
                                                       submod_matroid** out);
SUBMOD_API int submod_matroid_rank(const submod_matroid* m);
SUBMOD_API submod_status submod_matroid_is_independent(const submod_matroid* m,
                                                       const int* subset,
                                                       size_t len, int* out);
SUBMOD_API void submod_matroid_free(submod_matroid* m);

/* ---- Importance and sampling -------------------------------------------- */

/* pi_mode: "auto", "exact", "exact-matroid", "closed", "upper". Writes
 * num_components values to out (len must match). */
SUBMOD_API submod_status submod_importance(const submod_instance* inst,
                                           const char* pi_mode,
                                           const submod_matroid* matroid,
                                           double* out, size_t len,
                                           double* sum_p);

/* rank 0 selects the unconstrained formula. */
SUBMOD_API submod_status submod_kappa(int n, int rank, double epsilon,
                                      double delta, double* out);

typedef struct submod_sparsify_options {
  double epsilon;
  double delta;
  uint64_t seed;
  const char* pi_mode;    /* NULL means "auto" */
  int allow_no_guarantee; /* nonzero permits epsilon > 1 */
} submod_sparsify_options;

SUBMOD_API void submod_sparsify_options_init(submod_sparsify_options* opts);
SUBMOD_API submod_status submod_sparsify(const submod_instance* inst,
                                         const submod_sparsify_options* opts,
                                         const submod_matroid* matroid,
                                         submod_weights** out);

SUBMOD_API submod_status submod_weights_from_array(const double* values,
                                                   size_t len,
                                                   submod_weights** out);
SUBMOD_API submod_status submod_weights_parse_csv(const char* csv_text,
                                                  int num_components,
                                                  submod_weights** out);
SUBMOD_API submod_status submod_weights_load(const char* path,
                                             const submod_instance* inst,
                                             submod_weights** out);
SUBMOD_API submod_status submod_weights_to_csv(const submod_weights* w,
                                               char** out);
SUBMOD_API submod_status submod_weights_sidecar(const submod_weights* w,
                                                char** out);
SUBMOD_API int submod_weights_size(const submod_weights* w);
SUBMOD_API int submod_weights_length(const submod_weights* w);
SUBMOD_API submod_status submod_weights_get(const submod_weights* w,
                                            double* out, size_t len);
SUBMOD_API void submod_weights_free(submod_weights* w);

/* ---- Maximization, verification, sweeps --------------------------------- */

SUBMOD_API submod_status submod_maximize(const submod_instance* inst,
                                         const submod_weights* weights, int k,
                                         int lazy, char** report_json);

/* All subsets, or independent sets when matroid is non-null. *pass is set
 * to 1 when the sandwich holds everywhere checked. */
SUBMOD_API submod_status submod_verify(const submod_instance* inst,
                                       const submod_weights* weights,
                                       double epsilon,
                                       const submod_matroid* matroid,
                                       int* pass, char** report_json);
SUBMOD_API submod_status submod_verify_lovasz(const submod_instance* inst,
                                              const submod_weights* weights,
                                              double epsilon, int samples,
                                              uint64_t seed, int* pass,
                                              char** report_json);

typedef struct submod_bench_options {
  const double* epsilons;
  size_t n_epsilons;
  int trials;
  int k;
  double delta;
  uint64_t seed;
  const char* pi_mode; /* NULL means "auto" */
  int lazy;
} submod_bench_options;

SUBMOD_API submod_status submod_bench(const submod_instance* inst,
                                      const submod_bench_options* opts,
                                      char** csv);

#ifdef __cplusplus
}
#endif

#endif /* SUBMOD_SUBMOD_H_ */
