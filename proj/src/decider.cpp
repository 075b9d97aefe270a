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

#include "decider.hpp"

#include <atomic>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <thread>

#include "errors.hpp"
#include "matrix.hpp"

namespace sht {

using boost::multiprecision::cpp_int;

namespace {

cpp_int pow_int(cpp_int base, uint32_t exp) {
  cpp_int r = 1;
  while (exp--) r *= base;
  return r;
}

// Smallest t with (n/q)^t <= 2^-b, checked in exact integers.
uint32_t trials_for_bound(uint64_t n, uint64_t q, uint32_t b) {
  if (q <= n)
    fail(Errc::kInfeasibleParameters,
         "field size " + std::to_string(q) +
             " gives per-trial error >= 1 (need q > n = " + std::to_string(n) +
             ")");
  const cpp_int target = pow_int(2, b);
  cpp_int num = 1, den = 1;
  for (uint32_t t = 1; t <= 1'000'000; ++t) {
    num *= n;
    den *= q;
    if (num * target <= den) return t;
  }
  fail(Errc::kInfeasibleParameters,
       "error target needs more than 1e6 trials at this field size");
}

}  // namespace

Strategy choose_strategy(uint64_t tree_edges, uint32_t epsilon_exp,
                         std::optional<StrategyMode> mode_override) {
  const uint64_t n = tree_edges;
  if (n < 1) fail(Errc::kInvalidArgument, "tree edge count must be >= 1");
  if (epsilon_exp < 1)
    fail(Errc::kInvalidArgument, "epsilon exponent must be >= 1");
  if (2 * n + 1 >= kMaxModulusExclusive)
    fail(Errc::kInfeasibleParameters, "instance too large for a 62-bit field");

  const bool big_field_fits =
      epsilon_exp < 62 && n <= (kMaxModulusExclusive - 1) >> epsilon_exp;
  const StrategyMode mode = mode_override.value_or(
      big_field_fits ? StrategyMode::kSingleBigField : StrategyMode::kRepeated);

  Strategy s;
  s.mode = mode;
  s.epsilon_exp = epsilon_exp;
  if (mode == StrategyMode::kSingleBigField) {
    if (!big_field_fits)
      fail(Errc::kInfeasibleParameters,
           "single-big-field strategy needs q ~ n * 2^b below 2^62");
    s.q = smallest_prime_geq(std::max(2 * n + 1, n << epsilon_exp));
    s.trials = 1;
  } else {
    s.q = smallest_prime_geq(2 * n + 1);
    s.trials = epsilon_exp;  // (n/q)^b < 2^-b since q > 2n
  }
  return s;
}

namespace {

struct TrialResult {
  uint64_t weights_digest = 0;
  uint64_t det_value = 0;
};

TrialResult run_trial(const Hypergraph& h, const FieldCtx& ctx, uint64_t seed,
                      uint32_t trial) {
  Rng rng(derive_seed(seed, trial));
  TrialResult r;
  const SkewMatrix lambda =
      skew_adjacency_sampled(h, ctx, rng, &r.weights_digest);
  r.det_value = lambda.principal_minor(1).determinant().value;
  return r;
}

Decision run_trials(const Hypergraph& h, const Strategy& strategy,
                    uint64_t seed, uint32_t threads, uint64_t n) {
  Decision d;
  d.instance_digest = h.digest();
  d.strategy = strategy;
  d.seed = seed;
  const FieldCtx ctx(strategy.q);
  const uint32_t trials = strategy.trials;

  uint32_t winner = trials;  // first trial with nonzero determinant
  TrialResult winner_result;

  const uint32_t workers =
      std::min<uint32_t>(std::max<uint32_t>(threads, 1), trials);
  if (workers <= 1) {
    for (uint32_t t = 0; t < trials; ++t) {
      const TrialResult r = run_trial(h, ctx, seed, t);
      if (r.det_value != 0) {
        winner = t;
        winner_result = r;
        break;
      }
    }
  } else {
    // Trials are independent; the lowest successful index wins so the
    // outcome does not depend on scheduling. Indices above a known success
    // are skipped, indices below must still run.
    std::atomic<uint32_t> next{0};
    std::atomic<uint32_t> first_success{trials};
    std::vector<TrialResult> results(trials);
    auto worker = [&] {
      for (;;) {
        const uint32_t t = next.fetch_add(1);
        if (t >= trials || t > first_success.load()) return;
        results[t] = run_trial(h, ctx, seed, t);
        if (results[t].det_value != 0) {
          uint32_t cur = first_success.load();
          while (t < cur && !first_success.compare_exchange_weak(cur, t)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (uint32_t i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    winner = first_success.load();
    if (winner < trials) winner_result = results[winner];
  }
  // Sequential-equivalent count, so the decision is byte-identical no
  // matter how many workers ran.
  d.trials_run = winner < trials ? winner + 1 : trials;

  if (winner < trials) {
    d.verdict = Verdict::kYes;
    d.witness = Witness{strategy.q, seed, winner, winner_result.weights_digest,
                        winner_result.det_value};
  } else {
    d.verdict = Verdict::kNoProbable;
    d.error_bound_num = pow_int(n, trials).str();
    d.error_bound_den = pow_int(strategy.q, trials).str();
  }
  return d;
}

}  // namespace

Decision decide(const Hypergraph& h, const DecideOptions& opts) {
  if (h.uniformity() != 3)
    fail(Errc::kInvalidInstance, "decide needs a 3-uniform hypergraph");
  if (opts.epsilon_exp < 1)
    fail(Errc::kInvalidArgument, "epsilon exponent must be >= 1");

  const uint32_t n_verts = h.vertex_count();
  Decision d;
  d.instance_digest = h.digest();
  d.seed = opts.seed;

  if (n_verts == 1) {
    // The empty hypertree spans the single vertex.
    d.verdict = Verdict::kYes;
    return d;
  }
  if (n_verts % 2 == 0) {
    d.verdict = Verdict::kNoCertain;
    d.reason = "even vertex count violates N = 2n+1";
    return d;
  }
  const uint64_t n = (n_verts - 1) / 2;
  if (h.edge_count() < n) {
    d.verdict = Verdict::kNoCertain;
    d.reason = "fewer edges than the " + std::to_string(n) +
               " any spanning hypertree needs";
    return d;
  }
  if (!h.is_connected()) {
    d.verdict = Verdict::kNoCertain;
    d.reason = "hypergraph is disconnected";
    return d;
  }

  Strategy strategy;
  if (opts.q_override != 0) {
    const uint64_t q = opts.q_override;
    if (q % 2 == 0 || !is_prime_u64(q))
      fail(Errc::kNotPrime,
           "field override " + std::to_string(q) + " is not an odd prime");
    strategy.q = q;
    strategy.epsilon_exp = opts.epsilon_exp;
    strategy.trials = trials_for_bound(n, q, opts.epsilon_exp);
    strategy.mode = strategy.trials == 1 ? StrategyMode::kSingleBigField
                                         : StrategyMode::kRepeated;
  } else {
    strategy = choose_strategy(n, opts.epsilon_exp, opts.mode_override);
  }
  return run_trials(h, strategy, opts.seed, opts.threads, n);
}

FieldElem replay_witness(const Hypergraph& h, const Decision& decision) {
  if (decision.verdict != Verdict::kYes)
    fail(Errc::kWitnessMismatch, "decision carries no YES witness");
  if (h.digest() != decision.instance_digest)
    fail(Errc::kWitnessMismatch,
         "witness was issued for a different instance");
  if (!decision.witness) {
    if (h.vertex_count() != 1)
      fail(Errc::kWitnessMismatch, "missing witness for a nontrivial YES");
    return {1, 0};  // empty-hypertree case; det of the 0x0 minor is 1
  }
  const Witness& w = *decision.witness;
  const FieldCtx ctx(w.q);
  const TrialResult r = run_trial(h, ctx, w.seed, w.trial);
  if (r.weights_digest != w.weights_digest)
    fail(Errc::kWitnessMismatch, "weight stream does not replay");
  if (r.det_value != w.det_value || r.det_value == 0)
    fail(Errc::kWitnessMismatch, "determinant does not replay");
  return {r.det_value, w.q};
}

ZeroRateReport empirical_failure_rate(const Hypergraph& h, const FieldCtx& ctx,
                                      uint64_t trials, uint64_t seed) {
  if (h.uniformity() != 3)
    fail(Errc::kInvalidInstance, "needs a 3-uniform hypergraph");
  if (trials == 0 || trials > 1'000'000)
    fail(Errc::kInvalidArgument, "trial count must be in [1, 1e6]");
  ZeroRateReport rep;
  rep.trials = trials;
  for (uint64_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const SkewMatrix lambda = skew_adjacency_sampled(h, ctx, rng, nullptr);
    if (lambda.principal_minor(1).determinant().value == 0) ++rep.zeros;
  }
  rep.rate = double(rep.zeros) / double(trials);
  rep.sigma = std::sqrt(rep.rate * (1.0 - rep.rate) / double(trials));
  return rep;
}

ExhaustiveZeroReport exhaustive_zero_count(const Hypergraph& h,
                                           const FieldCtx& ctx) {
  if (h.uniformity() != 3)
    fail(Errc::kInvalidInstance, "needs a 3-uniform hypergraph");
  const size_t m = h.edge_count();
  const uint64_t q = ctx.modulus();
  double total_log2 = double(m) * std::log2(double(q));
  if (total_log2 > 40.0)
    fail(Errc::kTooLarge, "q^M exceeds the exhaustive-evaluation guard");
  uint64_t total = 1;
  for (size_t i = 0; i < m; ++i) total *= q;

  ExhaustiveZeroReport rep;
  rep.total = total;
  WeightAssignment w(h, ctx);
  std::vector<uint64_t> odometer(m, 0);
  for (uint64_t it = 0;; ++it) {
    const SkewMatrix lambda = skew_adjacency(h, w, ctx);
    if (lambda.principal_minor(1).determinant().value == 0) ++rep.zeros;
    // advance the odometer
    size_t pos = 0;
    while (pos < m) {
      odometer[pos] += 1;
      if (odometer[pos] < q) {
        w.set_by_index(pos, FieldElem{odometer[pos], q});
        break;
      }
      odometer[pos] = 0;
      w.set_by_index(pos, FieldElem{0, q});
      ++pos;
    }
    if (pos == m) break;
  }
  return rep;
}

}  // namespace sht
