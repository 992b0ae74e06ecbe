/*
 * Copyright 2026 The cyclecreate Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of libcyclecreate.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_free function. Every fallible call returns a cc_status; on
 * failure, cc_last_error() describes the problem for the calling thread until
 * the next failing call. Strings returned through char** are heap allocated
 * and must be released with cc_string_free. Exact integers and rationals
 * cross the boundary as decimal strings ("p" or "p/q").
 *
 * Vertex labels are 1-based. All text formats are those written by the
 * cyclecreate command line tool.
 */

#ifndef CYCLECREATE_CYCLECREATE_H_
#define CYCLECREATE_CYCLECREATE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CC_API __declspec(dllexport)
#else
#define CC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cc_status {
  CC_OK = 0,
  CC_ERR_INVALID_ARGUMENT = 1,
  CC_ERR_PARSE = 2,
  CC_ERR_LIMIT = 3,
  CC_ERR_INTERNAL = 4
} cc_status;

typedef struct cc_graph cc_graph;
typedef struct cc_paths cc_paths;
typedef struct cc_matchings cc_matchings;
typedef struct cc_matrix cc_matrix;

CC_API const char* cc_version(void);
CC_API const char* cc_last_error(void);
CC_API void cc_string_free(char* s);

/* Default object cap for cc_search; overridden by CYCLECREATE_MAX_ENUM. */
CC_API size_t cc_default_max_enum(void);

/* ---- objects and text formats ---------------------------------------- */

CC_API cc_status cc_graph_parse(const char* text, cc_graph** out);
CC_API cc_status cc_graph_format(const cc_graph* g, char** out);
CC_API int cc_graph_vertex_count(const cc_graph* g);
CC_API size_t cc_graph_edge_count(const cc_graph* g);
CC_API void cc_graph_free(cc_graph* g);

CC_API cc_status cc_paths_parse(const char* text, cc_paths** out);
CC_API cc_status cc_paths_format(const cc_paths* p, char** out);
CC_API int cc_paths_vertex_count(const cc_paths* p);
CC_API size_t cc_paths_count(const cc_paths* p);
CC_API void cc_paths_free(cc_paths* p);

CC_API cc_status cc_matchings_parse(const char* text, cc_matchings** out);
CC_API cc_status cc_matchings_format(const cc_matchings* m, char** out);
CC_API int cc_matchings_vertex_count(const cc_matchings* m);
CC_API size_t cc_matchings_count(const cc_matchings* m);
/* Label that `label` carried before any reduction relabeled the family. */
CC_API cc_status cc_matchings_origin(const cc_matchings* m, int label,
                                     int* original);
CC_API void cc_matchings_free(cc_matchings* m);

CC_API cc_status cc_matrix_parse(const char* text, cc_matrix** out);
CC_API int cc_matrix_size(const cc_matrix* a);
CC_API void cc_matrix_free(cc_matrix* a);

/* ---- constructions ---------------------------------------------------- */

CC_API cc_status cc_construct_lower_bound(int n, int k, cc_paths** out);
CC_API cc_status cc_construct_plane(int q, cc_graph** out);
CC_API cc_status cc_choose_plane_order(long long n_target, int* q,
                                       long long* n_actual);

/* ---- verification ----------------------------------------------------- */

typedef struct cc_family_report {
  int passed;
  uint64_t pairs_checked;
  uint64_t violations;
  /* 0-based indices of the first violating pair, -1 when there is none. */
  int64_t first_i;
  int64_t first_j;
} cc_family_report;

/* expect_creating != 0: every pair must contain a cycle of exactly
 * `cycle_length` vertices in its union; 0: no pair may. */
CC_API cc_status cc_verify_paths(const cc_paths* family, int cycle_length,
                                 int expect_creating, int threads,
                                 cc_family_report* report);
CC_API cc_status cc_verify_matchings(const cc_matchings* family,
                                     int cycle_length, int expect_creating,
                                     int threads, cc_family_report* report);

typedef struct cc_c2kfree_report {
  int passed;
  int bipartite;
  int regular;
  int degree; /* valid when regular */
  int girth;  /* 0 when the graph is acyclic */
} cc_c2kfree_report;

CC_API cc_status cc_validate_c2kfree(const cc_graph* g, int k,
                                     cc_c2kfree_report* report);

/* ---- reduction -------------------------------------------------------- */

typedef struct cc_reduction_report {
  size_t input_size;
  size_t distinct_triples;
  size_t class_size;
  size_t terminal_groups;
  size_t output_size;
  int output_vertices;
} cc_reduction_report;

CC_API cc_status cc_reduce_paths_to_matchings(const cc_paths* family, int k,
                                              cc_matchings** out,
                                              cc_reduction_report* report);
/* `partner` receives the label paired with vertex 1 in every survivor. */
CC_API cc_status cc_reduce_shrink(const cc_matchings* family,
                                  cc_matchings** out, int* partner);
CC_API cc_status cc_triple_count(int n, int k, char** value);

/* ---- exact search ----------------------------------------------------- */

typedef enum cc_search_kind {
  CC_SEARCH_H = 0,  /* Hamiltonian paths of K_n */
  CC_SEARCH_M = 1,  /* perfect matchings of K_n */
  CC_SEARCH_RP = 2  /* permutations of 1..n, reversing relation */
} cc_search_kind;

typedef struct cc_search_result {
  size_t vertices;
  uint64_t edges;
  size_t clique_number;
  int has_independence;
  size_t independence_number;
} cc_search_result;

/* max_objects == 0 selects cc_default_max_enum(). `witness`, when non-null,
 * receives the maximum clique in the paths / matchings / permutations text
 * format. `cycle_length` is ignored for CC_SEARCH_RP. */
CC_API cc_status cc_search(cc_search_kind kind, int n, int cycle_length,
                           int threads, size_t max_objects,
                           int with_independence, cc_search_result* result,
                           char** witness);

/* ---- counting --------------------------------------------------------- */

CC_API cc_status cc_count_matchings(const cc_graph* g, char** value);
CC_API cc_status cc_permanent(const cc_matrix* a, char** value);

typedef struct cc_lemma6_report {
  int passed;
  int doubly_stochastic;
  int degree;
  int side;
} cc_lemma6_report;

/* `count` and `bound` receive exact decimal strings when non-null. */
CC_API cc_status cc_check_lemma6(const cc_graph* g, cc_lemma6_report* report,
                                 char** count, char** bound);

/* Perfect matchings of g after validation for cycle length 2k. */
CC_API cc_status cc_noncreating_family(const cc_graph* g, int k,
                                       cc_matchings** out);

/* ---- claim checks ----------------------------------------------------- */

typedef struct cc_claim4_report {
  size_t classes;
  uint64_t sharing_pairs;
  uint64_t violations;
  int64_t first_i; /* 0-based family indices, -1 when clean */
  int64_t first_j;
} cc_claim4_report;

/* Groups the family by associated triple and checks every sharing pair. */
CC_API cc_status cc_check_claim4(const cc_paths* family, int k, int threads,
                                 cc_claim4_report* report);

typedef struct cc_claim7_report {
  uint64_t pairs;
  uint64_t reversing_pairs;
  uint64_t mismatches;
} cc_claim7_report;

/* Compares reversing with C4-creating of the image matchings over all ordered
 * pairs of permutations of 1..m. */
CC_API cc_status cc_check_claim7(int m, cc_claim7_report* report);

/* ---- bounds ----------------------------------------------------------- */

typedef struct cc_rational {
  int64_t num;
  int64_t den;
} cc_rational;

typedef struct cc_exponents {
  int k;
  cc_rational degree;
  cc_rational lower;
  cc_rational matching_upper;
  cc_rational path_upper;
  const char* source; /* static string */
} cc_exponents;

CC_API cc_status cc_bounds(int k, cc_exponents* out);

#ifdef __cplusplus
}
#endif

#endif /* CYCLECREATE_CYCLECREATE_H_ */
