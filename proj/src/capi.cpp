// Copyright 2026 The sht authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sht/sht.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "decider.hpp"
#include "errors.hpp"
#include "hypergraph.hpp"
#include "oracle.hpp"
#include "reduction.hpp"
#include "verify.hpp"

// Opaque handle definitions.
struct sht_hypergraph {
  sht::Hypergraph impl;
};

struct sht_decision {
  sht::Decision impl;
};

struct sht_subset_list {
  std::vector<sht::EdgeSubset> subsets;
  uint32_t subset_size = 0;
};

struct sht_verify_report {
  std::vector<sht::PropertyResult> results;
};

namespace {

thread_local std::string g_last_error;

sht_status map_code(sht::Errc c) {
  using sht::Errc;
  switch (c) {
    case Errc::kNotPrime: return SHT_ERR_NOT_PRIME;
    case Errc::kEvenModulus: return SHT_ERR_EVEN_MODULUS;
    case Errc::kZeroInverse: return SHT_ERR_ZERO_INVERSE;
    case Errc::kContextMismatch: return SHT_ERR_CONTEXT_MISMATCH;
    case Errc::kRangeExceeded: return SHT_ERR_RANGE_EXCEEDED;
    case Errc::kSyntaxError: return SHT_ERR_SYNTAX;
    case Errc::kVertexOutOfRange: return SHT_ERR_VERTEX_OUT_OF_RANGE;
    case Errc::kRepeatedVertexInEdge: return SHT_ERR_REPEATED_VERTEX;
    case Errc::kUniformityMismatch: return SHT_ERR_UNIFORMITY_MISMATCH;
    case Errc::kUnsupportedUniformity: return SHT_ERR_UNSUPPORTED_UNIFORMITY;
    case Errc::kIndexOutOfRange: return SHT_ERR_INDEX_OUT_OF_RANGE;
    case Errc::kNotSkew: return SHT_ERR_NOT_SKEW;
    case Errc::kNotAHypertree: return SHT_ERR_NOT_A_HYPERTREE;
    case Errc::kNotAnNCycle: return SHT_ERR_NOT_AN_NCYCLE;
    case Errc::kTooLarge: return SHT_ERR_TOO_LARGE;
    case Errc::kMissingWeight: return SHT_ERR_MISSING_WEIGHT;
    case Errc::kNonIntegerResult: return SHT_ERR_NON_INTEGER_RESULT;
    case Errc::kInfeasibleParameters: return SHT_ERR_INFEASIBLE_PARAMETERS;
    case Errc::kInvalidInstance: return SHT_ERR_INVALID_INSTANCE;
    case Errc::kWitnessMismatch: return SHT_ERR_WITNESS_MISMATCH;
    case Errc::kIoError: return SHT_ERR_IO;
    case Errc::kInvalidArgument: return SHT_ERR_INVALID_ARGUMENT;
  }
  return SHT_ERR_INTERNAL;
}

template <typename Fn>
sht_status guard(Fn&& fn) {
  try {
    fn();
    return SHT_OK;
  } catch (const sht::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SHT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SHT_ERR_INTERNAL;
  }
}

sht_status require(bool ok, const char* what) {
  if (ok) return SHT_OK;
  g_last_error = what;
  return SHT_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sht::DecideOptions convert(const sht_decide_options* opts) {
  sht::DecideOptions o;
  if (!opts) return o;
  if (opts->epsilon_exp != 0) o.epsilon_exp = opts->epsilon_exp;
  o.seed = opts->seed;
  if (opts->strategy == SHT_STRATEGY_REPEATED)
    o.mode_override = sht::StrategyMode::kRepeated;
  else if (opts->strategy == SHT_STRATEGY_SINGLE_FIELD)
    o.mode_override = sht::StrategyMode::kSingleBigField;
  o.q_override = opts->q_override;
  o.threads = opts->threads == 0 ? 1 : opts->threads;
  return o;
}

}  // namespace

extern "C" {

const char* sht_version(void) { return "1.0.0"; }

const char* sht_last_error(void) { return g_last_error.c_str(); }

void sht_string_free(char* s) { std::free(s); }

sht_status sht_hypergraph_parse_text(const char* text, sht_hypergraph** out) {
  if (auto rc = require(text && out, "null argument")) return rc;
  return guard([&] { *out = new sht_hypergraph{sht::Hypergraph::parse(text)}; });
}

sht_status sht_hypergraph_parse_file(const char* path, sht_hypergraph** out) {
  if (auto rc = require(path && out, "null argument")) return rc;
  return guard(
      [&] { *out = new sht_hypergraph{sht::Hypergraph::parse_file(path)}; });
}

sht_status sht_hypergraph_complete(uint32_t vertex_count, uint32_t uniformity,
                                   sht_hypergraph** out) {
  if (auto rc = require(out != nullptr, "null argument")) return rc;
  return guard([&] {
    *out = new sht_hypergraph{
        sht::Hypergraph::complete(vertex_count, uniformity)};
  });
}

void sht_hypergraph_free(sht_hypergraph* h) { delete h; }

uint32_t sht_hypergraph_uniformity(const sht_hypergraph* h) {
  return h->impl.uniformity();
}

uint32_t sht_hypergraph_vertex_count(const sht_hypergraph* h) {
  return h->impl.vertex_count();
}

uint64_t sht_hypergraph_edge_count(const sht_hypergraph* h) {
  return h->impl.edge_count();
}

uint32_t sht_hypergraph_duplicates_dropped(const sht_hypergraph* h) {
  return h->impl.duplicates_dropped();
}

int sht_hypergraph_is_connected(const sht_hypergraph* h) {
  return h->impl.is_connected() ? 1 : 0;
}

sht_status sht_hypergraph_canonical_text(const sht_hypergraph* h, char** out) {
  if (auto rc = require(h && out, "null argument")) return rc;
  return guard([&] { *out = dup_string(h->impl.canonical_text()); });
}

uint64_t sht_hypergraph_digest(const sht_hypergraph* h) {
  return h->impl.digest();
}

sht_status sht_decide(const sht_hypergraph* h, const sht_decide_options* opts,
                      sht_decision** out) {
  if (auto rc = require(h && out, "null argument")) return rc;
  return guard(
      [&] { *out = new sht_decision{sht::decide(h->impl, convert(opts))}; });
}

void sht_decision_free(sht_decision* d) { delete d; }

int sht_decision_verdict(const sht_decision* d) {
  switch (d->impl.verdict) {
    case sht::Verdict::kYes: return SHT_VERDICT_YES;
    case sht::Verdict::kNoCertain: return SHT_VERDICT_NO_CERTAIN;
    case sht::Verdict::kNoProbable: return SHT_VERDICT_NO_PROBABLE;
  }
  return SHT_VERDICT_NO_CERTAIN;
}

uint64_t sht_decision_field_modulus(const sht_decision* d) {
  return d->impl.strategy.q;
}

int sht_decision_strategy_mode(const sht_decision* d) {
  return d->impl.strategy.mode == sht::StrategyMode::kRepeated
             ? SHT_STRATEGY_REPEATED
             : SHT_STRATEGY_SINGLE_FIELD;
}

uint32_t sht_decision_trials_planned(const sht_decision* d) {
  return d->impl.strategy.trials;
}

uint32_t sht_decision_trials_run(const sht_decision* d) {
  return d->impl.trials_run;
}

uint64_t sht_decision_seed(const sht_decision* d) { return d->impl.seed; }

uint64_t sht_decision_instance_digest(const sht_decision* d) {
  return d->impl.instance_digest;
}

const char* sht_decision_reason(const sht_decision* d) {
  return d->impl.reason.c_str();
}

int sht_decision_has_witness(const sht_decision* d) {
  return d->impl.witness.has_value() ? 1 : 0;
}

uint32_t sht_decision_witness_trial(const sht_decision* d) {
  return d->impl.witness ? d->impl.witness->trial : 0;
}

uint64_t sht_decision_witness_weights_digest(const sht_decision* d) {
  return d->impl.witness ? d->impl.witness->weights_digest : 0;
}

uint64_t sht_decision_witness_det(const sht_decision* d) {
  return d->impl.witness ? d->impl.witness->det_value : 0;
}

sht_status sht_decision_error_bound(const sht_decision* d, char** numerator,
                                    char** denominator) {
  if (auto rc = require(d && numerator && denominator, "null argument"))
    return rc;
  if (d->impl.verdict != sht::Verdict::kNoProbable) {
    g_last_error = "decision carries no error bound";
    return SHT_ERR_INVALID_ARGUMENT;
  }
  *numerator = dup_string(d->impl.error_bound_num);
  *denominator = dup_string(d->impl.error_bound_den);
  return SHT_OK;
}

sht_status sht_decision_replay(const sht_hypergraph* h, const sht_decision* d) {
  if (auto rc = require(h && d, "null argument")) return rc;
  return guard([&] { sht::replay_witness(h->impl, d->impl); });
}

sht_status sht_oracle_enumerate(const sht_hypergraph* h,
                                sht_subset_list** out) {
  if (auto rc = require(h && out, "null argument")) return rc;
  return guard([&] {
    auto list = std::make_unique<sht_subset_list>();
    list->subsets = sht::enumerate_spanning_hypertrees(h->impl);
    list->subset_size = h->impl.vertex_count() % 2 == 1
                            ? (h->impl.vertex_count() - 1) / 2
                            : 0;
    *out = list.release();
  });
}

sht_status sht_oracle_count(const sht_hypergraph* h, uint64_t* out) {
  if (auto rc = require(h && out, "null argument")) return rc;
  return guard(
      [&] { *out = sht::enumerate_spanning_hypertrees(h->impl).size(); });
}

void sht_subset_list_free(sht_subset_list* l) { delete l; }

uint64_t sht_subset_list_size(const sht_subset_list* l) {
  return l->subsets.size();
}

uint32_t sht_subset_list_subset_size(const sht_subset_list* l) {
  return l->subset_size;
}

const uint32_t* sht_subset_list_at(const sht_subset_list* l, uint64_t i) {
  if (i >= l->subsets.size()) return nullptr;
  return l->subsets[i].data();
}

sht_status sht_complete_hypertree_count(uint32_t n, uint32_t k,
                                        char** decimal_out) {
  if (auto rc = require(decimal_out != nullptr, "null argument")) return rc;
  return guard([&] {
    *decimal_out = dup_string(sht::complete_hypertree_count(n, k).str());
  });
}

sht_status sht_star_lift(const sht_hypergraph* graph,
                         sht_hypergraph** lifted_out) {
  if (auto rc = require(graph && lifted_out, "null argument")) return rc;
  return guard([&] {
    *lifted_out = new sht_hypergraph{sht::star_lift(graph->impl).lifted};
  });
}

sht_status sht_decide_matching(const sht_hypergraph* graph,
                               const sht_decide_options* opts,
                               sht_decision** out) {
  if (auto rc = require(graph && out, "null argument")) return rc;
  return guard([&] {
    *out = new sht_decision{
        sht::decide_perfect_matching(graph->impl, convert(opts))};
  });
}

sht_status sht_verify_run(const sht_verify_options* opts,
                          sht_verify_report** out) {
  if (auto rc = require(out != nullptr, "null argument")) return rc;
  return guard([&] {
    sht::VerifyOptions o;
    if (opts) {
      if (opts->max_vertices != 0) o.max_vertices = opts->max_vertices;
      o.seed = opts->seed;
      if (opts->weight_draws != 0) o.weight_draws = opts->weight_draws;
    }
    *out = new sht_verify_report{sht::run_verification(o)};
  });
}

void sht_verify_report_free(sht_verify_report* r) { delete r; }

uint32_t sht_verify_report_size(const sht_verify_report* r) {
  return static_cast<uint32_t>(r->results.size());
}

const char* sht_verify_report_name(const sht_verify_report* r, uint32_t i) {
  return i < r->results.size() ? r->results[i].name.c_str() : "";
}

uint64_t sht_verify_report_checks(const sht_verify_report* r, uint32_t i) {
  return i < r->results.size() ? r->results[i].checks : 0;
}

uint64_t sht_verify_report_failures(const sht_verify_report* r, uint32_t i) {
  return i < r->results.size() ? r->results[i].failures : 0;
}

int sht_verify_report_all_pass(const sht_verify_report* r) {
  for (const auto& p : r->results)
    if (!p.pass()) return 0;
  return 1;
}

}  // extern "C"
