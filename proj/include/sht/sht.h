/*
 * Copyright 2026 The sht authors
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
 * C interface of libsht: randomized spanning-hypertree decisions for
 * 3-uniform hypergraphs, exact brute-force oracles, the star-vertex
 * perfect-matching reduction, and the algebraic self-check suite.
 *
 * Conventions:
 *   - every fallible function returns sht_status; results go to out
 *     parameters, which are written only on SHT_OK
 *   - sht_last_error() returns a thread-local message for the most recent
 *     failure on the calling thread
 *   - objects are opaque; free them with their matching _free function
 *   - strings returned through char** are heap-allocated; release them
 *     with sht_string_free
 */

#ifndef SHT_SHT_H
#define SHT_SHT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SHT_API __declspec(dllexport)
#else
#define SHT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sht_status {
  SHT_OK = 0,
  SHT_ERR_NOT_PRIME = 1,
  SHT_ERR_EVEN_MODULUS = 2,
  SHT_ERR_ZERO_INVERSE = 3,
  SHT_ERR_CONTEXT_MISMATCH = 4,
  SHT_ERR_RANGE_EXCEEDED = 5,
  SHT_ERR_SYNTAX = 6,
  SHT_ERR_VERTEX_OUT_OF_RANGE = 7,
  SHT_ERR_REPEATED_VERTEX = 8,
  SHT_ERR_UNIFORMITY_MISMATCH = 9,
  SHT_ERR_UNSUPPORTED_UNIFORMITY = 10,
  SHT_ERR_INDEX_OUT_OF_RANGE = 11,
  SHT_ERR_NOT_SKEW = 12,
  SHT_ERR_NOT_A_HYPERTREE = 13,
  SHT_ERR_NOT_AN_NCYCLE = 14,
  SHT_ERR_TOO_LARGE = 15,
  SHT_ERR_MISSING_WEIGHT = 16,
  SHT_ERR_NON_INTEGER_RESULT = 17,
  SHT_ERR_INFEASIBLE_PARAMETERS = 18,
  SHT_ERR_INVALID_INSTANCE = 19,
  SHT_ERR_WITNESS_MISMATCH = 20,
  SHT_ERR_IO = 21,
  SHT_ERR_INVALID_ARGUMENT = 22,
  SHT_ERR_INTERNAL = 23
} sht_status;

SHT_API const char* sht_version(void);

/* Thread-local detail message for the last failing call on this thread. */
SHT_API const char* sht_last_error(void);

SHT_API void sht_string_free(char* s);

/* ---------------------------------------------------------------- */
/* Hypergraph instances                                              */
/* ---------------------------------------------------------------- */

typedef struct sht_hypergraph sht_hypergraph;

/* Text format: '#' comment lines, a "shg <k> <N> <M>" header with k in
 * {2,3}, then exactly M lines "e v1 v2 [v3]" with distinct vertices in
 * [1, N]. Duplicate edges are dropped (count retained). */
SHT_API sht_status sht_hypergraph_parse_text(const char* text,
                                             sht_hypergraph** out);
SHT_API sht_status sht_hypergraph_parse_file(const char* path,
                                             sht_hypergraph** out);
SHT_API sht_status sht_hypergraph_complete(uint32_t vertex_count,
                                           uint32_t uniformity,
                                           sht_hypergraph** out);
SHT_API void sht_hypergraph_free(sht_hypergraph* h);

SHT_API uint32_t sht_hypergraph_uniformity(const sht_hypergraph* h);
SHT_API uint32_t sht_hypergraph_vertex_count(const sht_hypergraph* h);
SHT_API uint64_t sht_hypergraph_edge_count(const sht_hypergraph* h);
SHT_API uint32_t sht_hypergraph_duplicates_dropped(const sht_hypergraph* h);
SHT_API int sht_hypergraph_is_connected(const sht_hypergraph* h);

/* Canonical serialization: sorted edges, single spaces, trailing newline.
 * Parsing it back reproduces the instance bit-exactly. */
SHT_API sht_status sht_hypergraph_canonical_text(const sht_hypergraph* h,
                                                 char** out);

/* FNV-1a digest of the canonical form; identifies instances in witnesses. */
SHT_API uint64_t sht_hypergraph_digest(const sht_hypergraph* h);

/* ---------------------------------------------------------------- */
/* Randomized decision                                               */
/* ---------------------------------------------------------------- */

typedef struct sht_decision sht_decision;

enum sht_strategy_mode {
  SHT_STRATEGY_AUTO = 0,
  SHT_STRATEGY_REPEATED = 1,      /* q just above 2n+1, epsilon_exp trials */
  SHT_STRATEGY_SINGLE_FIELD = 2   /* q of order n * 2^epsilon_exp, 1 trial */
};

enum sht_verdict {
  SHT_VERDICT_YES = 0,          /* certified; witness replays */
  SHT_VERDICT_NO_CERTAIN = 1,   /* structurally impossible */
  SHT_VERDICT_NO_PROBABLE = 2   /* wrong with probability <= 2^-epsilon_exp */
};

typedef struct sht_decide_options {
  uint32_t epsilon_exp; /* target error 2^-epsilon_exp; default 20 if 0 */
  uint64_t seed;
  int strategy;         /* enum sht_strategy_mode */
  uint64_t q_override;  /* 0 = automatic field choice */
  uint32_t threads;     /* trial workers; 0 or 1 = sequential */
} sht_decide_options;

SHT_API sht_status sht_decide(const sht_hypergraph* h,
                              const sht_decide_options* opts,
                              sht_decision** out);
SHT_API void sht_decision_free(sht_decision* d);

SHT_API int sht_decision_verdict(const sht_decision* d);
SHT_API uint64_t sht_decision_field_modulus(const sht_decision* d);
SHT_API int sht_decision_strategy_mode(const sht_decision* d);
SHT_API uint32_t sht_decision_trials_planned(const sht_decision* d);
SHT_API uint32_t sht_decision_trials_run(const sht_decision* d);
SHT_API uint64_t sht_decision_seed(const sht_decision* d);
SHT_API uint64_t sht_decision_instance_digest(const sht_decision* d);

/* Fast-path explanation for NO_CERTAIN; empty string otherwise. Valid
 * until the decision is freed. */
SHT_API const char* sht_decision_reason(const sht_decision* d);

/* Witness accessors; only meaningful for YES. has_witness is 0 for the
 * single-vertex fast path, which needs no randomness. */
SHT_API int sht_decision_has_witness(const sht_decision* d);
SHT_API uint32_t sht_decision_witness_trial(const sht_decision* d);
SHT_API uint64_t sht_decision_witness_weights_digest(const sht_decision* d);
SHT_API uint64_t sht_decision_witness_det(const sht_decision* d);

/* Exact failure bound for NO_PROBABLE as a decimal fraction. */
SHT_API sht_status sht_decision_error_bound(const sht_decision* d,
                                            char** numerator,
                                            char** denominator);

/* Re-derives the witness trial and checks the stored determinant; SHT_OK
 * iff the witness replays against this instance. */
SHT_API sht_status sht_decision_replay(const sht_hypergraph* h,
                                       const sht_decision* d);

/* ---------------------------------------------------------------- */
/* Exact oracle                                                      */
/* ---------------------------------------------------------------- */

typedef struct sht_subset_list sht_subset_list;

/* Brute-force enumeration of all spanning hypertrees (3-uniform) as edge
 * index subsets. Guarded: C(M, (N-1)/2) <= 1e7, else SHT_ERR_TOO_LARGE. */
SHT_API sht_status sht_oracle_enumerate(const sht_hypergraph* h,
                                        sht_subset_list** out);
SHT_API sht_status sht_oracle_count(const sht_hypergraph* h, uint64_t* out);

SHT_API void sht_subset_list_free(sht_subset_list* l);
SHT_API uint64_t sht_subset_list_size(const sht_subset_list* l);
SHT_API uint32_t sht_subset_list_subset_size(const sht_subset_list* l);
/* Pointer to subset i (subset_size edge indices); owned by the list. */
SHT_API const uint32_t* sht_subset_list_at(const sht_subset_list* l,
                                           uint64_t i);

/* Closed-form count of spanning hypertrees of the complete k-uniform
 * hypergraph with n hyperedges per hypertree, as a decimal string. */
SHT_API sht_status sht_complete_hypertree_count(uint32_t n, uint32_t k,
                                                char** decimal_out);

/* ---------------------------------------------------------------- */
/* Star-vertex reduction (perfect matchings)                         */
/* ---------------------------------------------------------------- */

/* Lift of a graph (k=2): vertex N+1 joins every edge, giving a 3-uniform
 * instance whose spanning hypertrees are the source's perfect matchings. */
SHT_API sht_status sht_star_lift(const sht_hypergraph* graph,
                                 sht_hypergraph** lifted_out);

/* Decide perfect-matching existence through the lift. */
SHT_API sht_status sht_decide_matching(const sht_hypergraph* graph,
                                       const sht_decide_options* opts,
                                       sht_decision** out);

/* ---------------------------------------------------------------- */
/* Self-check suite                                                  */
/* ---------------------------------------------------------------- */

typedef struct sht_verify_report sht_verify_report;

typedef struct sht_verify_options {
  uint32_t max_vertices; /* odd sizes 3..max; default 9 if 0 */
  uint64_t seed;
  uint32_t weight_draws; /* default 100 if 0 */
} sht_verify_options;

SHT_API sht_status sht_verify_run(const sht_verify_options* opts,
                                  sht_verify_report** out);
SHT_API void sht_verify_report_free(sht_verify_report* r);
SHT_API uint32_t sht_verify_report_size(const sht_verify_report* r);
SHT_API const char* sht_verify_report_name(const sht_verify_report* r,
                                           uint32_t i);
SHT_API uint64_t sht_verify_report_checks(const sht_verify_report* r,
                                          uint32_t i);
SHT_API uint64_t sht_verify_report_failures(const sht_verify_report* r,
                                            uint32_t i);
SHT_API int sht_verify_report_all_pass(const sht_verify_report* r);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SHT_SHT_H */
