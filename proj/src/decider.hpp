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

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "field.hpp"
#include "hypergraph.hpp"

namespace sht {

enum class StrategyMode {
  kRepeated,        // q just above 2n+1, one trial per error-halving
  kSingleBigField,  // q of order n * 2^b, a single trial
};

/// Field size and trial count for a target error of 2^-epsilon_exp. Both
/// modes guarantee (n/q)^trials <= 2^-epsilon_exp.
struct Strategy {
  StrategyMode mode = StrategyMode::kSingleBigField;
  uint64_t q = 0;
  uint32_t trials = 0;
  uint32_t epsilon_exp = 0;

  bool operator==(const Strategy&) const = default;
};

Strategy choose_strategy(uint64_t tree_edges, uint32_t epsilon_exp,
                         std::optional<StrategyMode> mode_override = {});

enum class Verdict {
  kYes,         // certified: a nonzero determinant was found
  kNoCertain,   // structurally impossible (parity, connectivity, edge count)
  kNoProbable,  // every trial vanished; wrong with probability <= bound
};

/// Replayable certificate for a YES: regenerating the trial's weights from
/// (seed, trial) and eliminating again must reproduce det_value.
struct Witness {
  uint64_t q = 0;
  uint64_t seed = 0;
  uint32_t trial = 0;
  uint64_t weights_digest = 0;
  uint64_t det_value = 0;

  bool operator==(const Witness&) const = default;
};

struct Decision {
  Verdict verdict = Verdict::kNoCertain;
  uint64_t instance_digest = 0;
  Strategy strategy;       // zeroed on deterministic fast paths
  uint32_t trials_run = 0;
  uint64_t seed = 0;
  std::string reason;      // fast-path explanation, empty otherwise
  std::optional<Witness> witness;           // YES only (empty for N = 1)
  std::string error_bound_num, error_bound_den;  // NO_PROBABLE only, exact

  bool operator==(const Decision&) const = default;
};

struct DecideOptions {
  uint32_t epsilon_exp = 20;
  uint64_t seed = 0;
  std::optional<StrategyMode> mode_override;
  uint64_t q_override = 0;  // 0 = pick via choose_strategy
  uint32_t threads = 1;
};

/// One-sided-error decision of spanning hypertree existence for a 3-uniform
/// hypergraph. YES answers are never wrong; NO_PROBABLE answers are wrong
/// with probability at most 2^-epsilon_exp.
Decision decide(const Hypergraph& h, const DecideOptions& opts);

/// Audits a YES decision: rebuilds the trial and returns the determinant,
/// which must match the stored nonzero value. Throws WitnessMismatch on any
/// discrepancy (tampered seed, different instance, wrong value).
FieldElem replay_witness(const Hypergraph& h, const Decision& decision);

/// Fraction of `trials` independent single evaluations of det at random
/// weights that return zero, with a 5-sigma binomial half-width.
struct ZeroRateReport {
  uint64_t zeros = 0;
  uint64_t trials = 0;
  double rate = 0.0;
  double sigma = 0.0;  // sqrt(rate * (1-rate) / trials)
};

ZeroRateReport empirical_failure_rate(const Hypergraph& h, const FieldCtx& ctx,
                                      uint64_t trials, uint64_t seed);

/// Exact zero count of det over every weight vector in GF(q)^M. Guarded:
/// q^M must stay below 2^40.
struct ExhaustiveZeroReport {
  uint64_t zeros = 0;
  uint64_t total = 0;
};

ExhaustiveZeroReport exhaustive_zero_count(const Hypergraph& h,
                                           const FieldCtx& ctx);

}  // namespace sht
