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

// End-to-end acceptance suite. Each criterion prints a single PASS/FAIL
// line; the binary exits nonzero if any criterion fails. Thresholds are
// fixed here, not tuned at run time.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "decider.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "reduction.hpp"
#include "signs.hpp"
#include "test_oracles.hpp"
#include "verify.hpp"

using namespace sht;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int index, bool pass, const std::string& name,
            const std::string& detail, double ms) {
  std::printf("[%2d] %s  %-28s %s (%.0f ms)\n", index, pass ? "PASS" : "FAIL",
              name.c_str(), detail.c_str(), ms);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

void run(int index, const std::string& name,
         const std::function<std::pair<bool, std::string>()>& body) {
  const auto start = Clock::now();
  bool pass = false;
  std::string detail;
  try {
    std::tie(pass, detail) = body();
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  report(index, pass, name, detail, ms);
}

// Deterministic mixed corpus: every odd N in {3,5,7,9}, complete plus
// random instances (some with hypertrees, some without).
std::vector<Hypergraph> corpus_3uniform(uint64_t seed, int per_size) {
  Rng rng(seed);
  std::vector<Hypergraph> out;
  for (uint32_t n_verts : {3u, 5u, 7u, 9u}) {
    const size_t pool = Hypergraph::complete(n_verts, 3).edge_count();
    const uint32_t tree_edges = (n_verts - 1) / 2;
    for (int i = 0; i < per_size; ++i) {
      const uint32_t cap =
          static_cast<uint32_t>(std::min<size_t>(pool, 3 * tree_edges + 8));
      const uint32_t m = 1 + static_cast<uint32_t>(rng.uniform_below(cap));
      out.push_back(random_uniform_hypergraph(3, n_verts, m, rng));
    }
  }
  return out;
}

std::pair<bool, std::string> criterion_count_identities() {
  bool ok = true;
  std::string detail;
  const uint64_t expected[] = {1, 15, 735};
  int i = 0;
  for (uint32_t n_verts : {3u, 5u, 7u}) {
    const auto trees =
        enumerate_spanning_hypertrees(Hypergraph::complete(n_verts, 3));
    const auto closed = complete_hypertree_count((n_verts - 1) / 2, 3);
    ok = ok && trees.size() == expected[i] && closed == trees.size();
    detail += "K(" + std::to_string(n_verts) + ",3)=" +
              std::to_string(trees.size()) + " ";
    ++i;
  }
  return {ok, detail};
}

std::pair<bool, std::string> criterion_pfaffian_theorem() {
  std::vector<Hypergraph> corpus = corpus_3uniform(20260809, 25);  // 100
  corpus.push_back(Hypergraph::complete(5, 3));
  corpus.push_back(Hypergraph::complete(7, 3));
  const FieldCtx ctx(10007);
  uint64_t checks = 0, failures = 0;
  Rng seeds(1);
  for (const Hypergraph& h : corpus) {
    const SignedHypertreePoly poly = signed_hypertree_polynomial(h);
    for (uint32_t draw = 0; draw < 100; ++draw) {
      Rng rng(seeds.next());
      const WeightAssignment w = WeightAssignment::sample(h, ctx, rng);
      const FieldElem expected = evaluate_poly(poly, w, ctx);
      const SkewMatrix m = skew_adjacency(h, w, ctx);
      for (uint32_t i0 = 1; i0 <= h.vertex_count(); ++i0) {
        FieldElem pf = m.principal_minor(i0).pfaffian();
        if (i0 % 2 == 0) pf = ctx.neg(pf);
        ++checks;
        if (pf != expected) ++failures;
      }
    }
  }
  return {failures == 0, std::to_string(corpus.size()) + " instances, " +
                             std::to_string(checks) + " checks, " +
                             std::to_string(failures) + " failures"};
}

std::pair<bool, std::string> criterion_sign_consistency() {
  std::vector<Hypergraph> corpus = corpus_3uniform(77, 25);
  corpus.push_back(Hypergraph::complete(5, 3));
  corpus.push_back(Hypergraph::complete(7, 3));
  Rng rng(2);
  uint64_t trees_checked = 0, failures = 0;
  for (const Hypergraph& h : corpus) {
    for (const auto& tree : enumerate_spanning_hypertrees(h)) {
      ++trees_checked;
      const int conj = hypertree_sign_conjugation(h, tree);
      for (uint32_t root = 1; root <= h.vertex_count(); ++root)
        if (hypertree_sign_exterior(h, tree, root) != conj) ++failures;
      std::vector<uint32_t> order(tree);
      for (int s = 0; s < 20; ++s) {
        for (size_t i = order.size(); i > 1; --i)
          std::swap(order[i - 1], order[rng.uniform_below(i)]);
        if (hypertree_sign_conjugation(h, order) != conj) ++failures;
      }
    }
  }
  return {failures == 0 && trees_checked > 800,
          std::to_string(trees_checked) + " hypertrees, " +
              std::to_string(failures) + " failures"};
}

std::pair<bool, std::string> criterion_soundness() {
  // oracle-certified hypertree-free instances
  Rng rng(404);
  std::vector<Hypergraph> empty_ones;
  while (empty_ones.size() < 50) {
    const uint32_t n_verts = 5 + 2 * static_cast<uint32_t>(
        rng.uniform_below(3));
    const uint32_t tree_edges = (n_verts - 1) / 2;
    const Hypergraph h = random_uniform_hypergraph(
        3, n_verts,
        1 + static_cast<uint32_t>(rng.uniform_below(3 * tree_edges)), rng);
    if (enumerate_spanning_hypertrees(h).empty()) empty_ones.push_back(h);
  }
  uint64_t yes_answers = 0, runs = 0;
  for (const Hypergraph& h : empty_ones) {
    for (uint64_t seed = 0; seed < 200; ++seed) {
      ++runs;
      if (decide(h, {.epsilon_exp = 8, .seed = seed}).verdict == Verdict::kYes)
        ++yes_answers;
    }
  }
  return {yes_answers == 0 && runs == 10'000,
          std::to_string(empty_ones.size()) + " instances x 200 seeds, " +
              std::to_string(yes_answers) + " YES answers"};
}

std::pair<bool, std::string> criterion_schwartz_zippel() {
  // Exhaustive: K(5,3) over GF(5), all 5^10 weight vectors.
  const Hypergraph k53 = Hypergraph::complete(5, 3);
  const FieldCtx f5(5);
  const ExhaustiveZeroReport ex = exhaustive_zero_count(k53, f5);
  const bool exhaustive_ok =
      ex.total == 9'765'625 && 5 * ex.zeros <= 2 * ex.total;

  // Sampled: single edge over GF(7); true rate is exactly 1/7.
  const Hypergraph single(3, 3, {{1, 2, 3}});
  const ZeroRateReport r =
      empirical_failure_rate(single, FieldCtx(7), 100'000, 20260809);
  const double p = 1.0 / 7;
  const double sigma = std::sqrt(p * (1 - p) / 100'000);
  const bool sampled_ok = std::abs(r.rate - p) <= 5 * sigma;

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "exhaustive zeros %llu / %llu (%.4f <= 0.4); sampled %.4f "
                "vs 1/7 +- %.4f",
                static_cast<unsigned long long>(ex.zeros),
                static_cast<unsigned long long>(ex.total),
                double(ex.zeros) / double(ex.total), r.rate, 5 * sigma);
  return {exhaustive_ok && sampled_ok, buf};
}

std::pair<bool, std::string> criterion_rp_contract() {
  // q >= 2n: measured per-trial zero rate <= 1/2 and <= n/q + 5 sigma.
  struct Case {
    Hypergraph h;
    uint64_t trials;
  };
  const std::vector<Case> cases = {
      {Hypergraph(3, 3, {{1, 2, 3}}), 100'000},
      {Hypergraph::complete(5, 3), 50'000},
      {Hypergraph::complete(7, 3), 20'000},
      {Hypergraph(3, 9,
                  {{1, 2, 3}, {3, 4, 5}, {5, 6, 7}, {7, 8, 9}, {1, 4, 9}}),
       20'000},
  };
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    const uint64_t n = (c.h.vertex_count() - 1) / 2;
    const uint64_t q = smallest_prime_geq(2 * n + 1);
    const ZeroRateReport r =
        empirical_failure_rate(c.h, FieldCtx(q), c.trials, 99);
    const double bound = double(n) / double(q);
    const double sigma = std::sqrt(bound * (1 - bound) / double(c.trials));
    if (r.rate > 0.5 || r.rate > bound + 5 * sigma) ok = false;
    char buf[64];
    std::snprintf(buf, sizeof buf, "n=%llu:%.3f<=%.3f ",
                  static_cast<unsigned long long>(n), r.rate,
                  bound + 5 * sigma);
    detail += buf;
  }
  return {ok, detail};
}

std::pair<bool, std::string> criterion_matching_pipeline() {
  Rng rng(7);
  int graphs = 0;
  uint64_t wrong_no = 0, wrong_yes = 0, matchable = 0;
  while (graphs < 50) {
    const uint32_t n = 2 + 2 * static_cast<uint32_t>(rng.uniform_below(5));
    const size_t pool = Hypergraph::complete(n, 2).edge_count();
    const uint32_t m = static_cast<uint32_t>(rng.uniform_below(pool + 1));
    const Hypergraph g = random_uniform_hypergraph(2, n, m, rng);
    ++graphs;
    const bool has_matching = !enumerate_perfect_matchings(g).empty();
    if (has_matching) {
      ++matchable;
      // YES must arrive within 1000 seeded runs at epsilon 2^-10
      bool saw_yes = false;
      for (uint64_t seed = 0; seed < 1000 && !saw_yes; ++seed)
        saw_yes = decide_perfect_matching(g, {.epsilon_exp = 10, .seed = seed})
                      .verdict == Verdict::kYes;
      if (!saw_yes) ++wrong_no;
    } else {
      for (uint64_t seed = 0; seed < 20; ++seed)
        if (decide_perfect_matching(g, {.epsilon_exp = 10, .seed = seed})
                .verdict == Verdict::kYes)
          ++wrong_yes;
    }
  }
  return {wrong_no == 0 && wrong_yes == 0,
          "50 graphs (" + std::to_string(matchable) + " matchable), " +
              std::to_string(wrong_yes) + " unsound YES, " +
              std::to_string(wrong_no) + " missed"};
}

std::pair<bool, std::string> criterion_matrix_tree() {
  bool ok = spanning_tree_count(Hypergraph::complete(3, 2)) == 3 &&
            spanning_tree_count(Hypergraph::complete(4, 2)) == 16;
  Rng rng(5);
  uint64_t checked = 2;
  for (int it = 0; it < 20; ++it) {
    const uint32_t n = 2 + static_cast<uint32_t>(rng.uniform_below(6));
    const size_t pool = Hypergraph::complete(n, 2).edge_count();
    const uint32_t m = static_cast<uint32_t>(rng.uniform_below(pool + 1));
    const Hypergraph g = random_uniform_hypergraph(2, n, m, rng);
    ++checked;
    if (spanning_tree_count(g) != testing::naive_spanning_tree_count(g))
      ok = false;
  }
  return {ok, std::to_string(checked) + " graphs, exact agreement"};
}

std::pair<bool, std::string> criterion_performance() {
  auto time_decide = [](uint32_t n_verts) {
    const Hypergraph h = Hypergraph::complete(n_verts, 3);
    double best = 1e18;
    for (int rep = 0; rep < 3; ++rep) {
      const auto start = Clock::now();
      const Decision d = decide(h, {.epsilon_exp = 20, .seed = 1});
      const double ms = std::chrono::duration<double, std::milli>(
                            Clock::now() - start)
                            .count();
      if (d.verdict != Verdict::kYes) return -1.0;  // complete => YES
      best = std::min(best, ms);
    }
    return best;
  };
  const double t201 = time_decide(201);
  const double t401 = time_decide(401);
  if (t201 <= 0 || t401 <= 0) return {false, "unexpected verdict"};
  const double ratio = t401 / t201;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "N=201: %.0f ms, N=401: %.0f ms, ratio %.2f in [6,10]", t201,
                t401, ratio);
  return {t401 < 5000.0 && ratio >= 6.0 && ratio <= 10.0, buf};
}

std::pair<bool, std::string> criterion_pfaffian_determinant() {
  const FieldCtx ctx(10007);
  Rng rng(31337);
  uint64_t failures = 0;
  for (uint32_t dim = 2; dim <= 8; dim += 2) {
    for (int it = 0; it < 1000; ++it) {
      SkewMatrix m(ctx, dim);
      for (uint32_t r = 0; r < dim; ++r)
        for (uint32_t c = r + 1; c < dim; ++c)
          m.set_pair(r, c, ctx.sample(rng));
      const FieldElem pf = m.pfaffian();
      if (ctx.mul(pf, pf) != m.determinant()) ++failures;
    }
  }
  return {failures == 0,
          "4000 matrices, " + std::to_string(failures) + " failures"};
}

}  // namespace

int main() {
  std::printf("acceptance suite (libsht)\n");
  run(1, "count identities", criterion_count_identities);
  run(2, "pfaffian-hypertree theorem", criterion_pfaffian_theorem);
  run(3, "sign consistency", criterion_sign_consistency);
  run(4, "soundness", criterion_soundness);
  run(5, "schwartz-zippel bound", criterion_schwartz_zippel);
  run(6, "rp contract", criterion_rp_contract);
  run(7, "matching pipeline", criterion_matching_pipeline);
  run(8, "matrix-tree baseline", criterion_matrix_tree);
  run(9, "performance scaling", criterion_performance);
  run(10, "pfaffian^2 = det", criterion_pfaffian_determinant);
  if (g_failures == 0) {
    std::printf("ACCEPTANCE: 10/10 criteria passed\n");
    return 0;
  }
  std::printf("ACCEPTANCE: %d criteria FAILED\n", g_failures);
  return 1;
}
