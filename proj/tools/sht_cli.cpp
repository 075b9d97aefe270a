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

// Command-line front end over the libsht C interface.
//
// Output contract: exactly one JSON object on stdout per run; progress and
// summaries go to stderr. Exit codes: 0 = YES / pass, 1 = NO / fail,
// 2 = usage or input error. Runs with the same flags and seed produce
// byte-identical JSON apart from the wall_ms timing fields.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sht/sht.h"

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

[[noreturn]] void die(const std::string& command, const std::string& message) {
  json out;
  out["command"] = command;
  out["error"] = message;
  std::cout << out.dump() << '\n';
  std::cerr << "error: " << message << '\n';
  std::exit(kExitError);
}

struct Graph {
  sht_hypergraph* h = nullptr;
  Graph() = default;
  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;
  ~Graph() { sht_hypergraph_free(h); }
};

struct Decision {
  sht_decision* d = nullptr;
  ~Decision() { sht_decision_free(d); }
};

void load_instance(const std::string& command, const std::string& path,
                   Graph& g) {
  if (sht_hypergraph_parse_file(path.c_str(), &g.h) != SHT_OK)
    die(command, std::string("cannot load '") + path +
                     "': " + sht_last_error());
}

json instance_json(const sht_hypergraph* h, const std::string& path) {
  json j;
  if (!path.empty()) j["path"] = path;
  j["digest"] = hex64(sht_hypergraph_digest(h));
  j["uniformity"] = sht_hypergraph_uniformity(h);
  j["vertices"] = sht_hypergraph_vertex_count(h);
  j["edges"] = sht_hypergraph_edge_count(h);
  if (sht_hypergraph_duplicates_dropped(h) > 0)
    j["duplicates_dropped"] = sht_hypergraph_duplicates_dropped(h);
  return j;
}

const char* verdict_name(int verdict) {
  switch (verdict) {
    case SHT_VERDICT_YES: return "YES";
    case SHT_VERDICT_NO_CERTAIN: return "NO_CERTAIN";
    default: return "NO_PROBABLE";
  }
}

json decision_json(const sht_hypergraph* h, const sht_decision* d) {
  json j;
  j["verdict"] = verdict_name(sht_decision_verdict(d));
  j["seed"] = sht_decision_seed(d);
  j["trials_run"] = sht_decision_trials_run(d);
  if (const uint64_t q = sht_decision_field_modulus(d); q != 0) {
    j["q"] = q;
    j["strategy"] = sht_decision_strategy_mode(d) == SHT_STRATEGY_REPEATED
                        ? "repeated"
                        : "single";
    j["trials_planned"] = sht_decision_trials_planned(d);
  }
  const std::string reason = sht_decision_reason(d);
  if (!reason.empty()) j["reason"] = reason;
  if (sht_decision_verdict(d) == SHT_VERDICT_YES &&
      sht_decision_has_witness(d)) {
    json w;
    w["trial"] = sht_decision_witness_trial(d);
    w["weights_digest"] = hex64(sht_decision_witness_weights_digest(d));
    w["det"] = sht_decision_witness_det(d);
    w["replays"] = sht_decision_replay(h, d) == SHT_OK;
    j["witness"] = w;
  }
  if (sht_decision_verdict(d) == SHT_VERDICT_NO_PROBABLE) {
    char* num = nullptr;
    char* den = nullptr;
    if (sht_decision_error_bound(d, &num, &den) == SHT_OK) {
      j["error_bound"] = {{"numerator", num}, {"denominator", den}};
      sht_string_free(num);
      sht_string_free(den);
    }
  }
  return j;
}

int emit(const json& out, int exit_code, const std::string& summary) {
  std::cout << out.dump() << '\n';
  std::cerr << summary << '\n';
  return exit_code;
}

uint64_t default_seed_from_env() {
  if (const char* env = std::getenv("SHT_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

int cmd_decide(const std::string& path, uint32_t epsilon_exp, uint64_t seed,
               const std::string& strategy, uint64_t q_override,
               uint32_t threads) {
  const auto start = Clock::now();
  Graph g;
  load_instance("decide", path, g);
  if (sht_hypergraph_uniformity(g.h) != 3)
    die("decide", "instance is not 3-uniform; use 'reduce' for graphs");

  sht_decide_options opts{};
  opts.epsilon_exp = epsilon_exp;
  opts.seed = seed;
  opts.strategy = strategy == "repeated" ? SHT_STRATEGY_REPEATED
                  : strategy == "single" ? SHT_STRATEGY_SINGLE_FIELD
                                         : SHT_STRATEGY_AUTO;
  opts.q_override = q_override;
  opts.threads = threads;

  Decision d;
  if (sht_decide(g.h, &opts, &d.d) != SHT_OK)
    die("decide", sht_last_error());

  json out;
  out["command"] = "decide";
  out["instance"] = instance_json(g.h, path);
  out["params"] = {{"epsilon_exp", epsilon_exp},
                   {"seed", seed},
                   {"strategy", strategy},
                   {"threads", threads}};
  if (q_override != 0) out["params"]["q_override"] = q_override;
  out["decision"] = decision_json(g.h, d.d);
  out["wall_ms"] = ms_since(start);

  const int verdict = sht_decision_verdict(d.d);
  return emit(out, verdict == SHT_VERDICT_YES ? kExitYes : kExitNo,
              std::string("verdict: ") + verdict_name(verdict));
}

int cmd_oracle(const std::string& path, bool count_only) {
  const auto start = Clock::now();
  Graph g;
  load_instance("oracle", path, g);

  sht_subset_list* list = nullptr;
  const sht_status rc = sht_oracle_enumerate(g.h, &list);
  if (rc == SHT_ERR_TOO_LARGE)
    die("oracle", std::string(sht_last_error()) +
                      " (the exact oracle is desk-scale; use 'decide' for "
                      "large instances)");
  if (rc != SHT_OK) die("oracle", sht_last_error());

  const uint64_t count = sht_subset_list_size(list);
  json out;
  out["command"] = "oracle";
  out["instance"] = instance_json(g.h, path);
  out["count"] = count;
  if (!count_only) {
    json trees = json::array();
    const uint32_t size = sht_subset_list_subset_size(list);
    for (uint64_t i = 0; i < count; ++i) {
      const uint32_t* s = sht_subset_list_at(list, i);
      trees.push_back(std::vector<uint32_t>(s, s + size));
    }
    out["hypertrees"] = trees;
  }
  sht_subset_list_free(list);
  out["wall_ms"] = ms_since(start);
  return emit(out, count > 0 ? kExitYes : kExitNo,
              "spanning hypertrees: " + std::to_string(count));
}

int cmd_verify(uint32_t max_n, uint64_t seed, uint32_t trials) {
  const auto start = Clock::now();
  sht_verify_options opts{};
  opts.max_vertices = max_n;
  opts.seed = seed;
  opts.weight_draws = trials;
  sht_verify_report* report = nullptr;
  if (sht_verify_run(&opts, &report) != SHT_OK) die("verify", sht_last_error());

  json props = json::array();
  for (uint32_t i = 0; i < sht_verify_report_size(report); ++i) {
    const uint64_t failures = sht_verify_report_failures(report, i);
    props.push_back({{"name", sht_verify_report_name(report, i)},
                     {"checks", sht_verify_report_checks(report, i)},
                     {"failures", failures},
                     {"pass", failures == 0}});
    std::cerr << (failures == 0 ? "PASS " : "FAIL ")
              << sht_verify_report_name(report, i) << " ("
              << sht_verify_report_checks(report, i) << " checks, "
              << failures << " failures)\n";
  }
  const bool all_pass = sht_verify_report_all_pass(report) == 1;
  sht_verify_report_free(report);

  json out;
  out["command"] = "verify";
  out["params"] = {{"max_n", max_n}, {"seed", seed}, {"trials", trials}};
  out["properties"] = props;
  out["all_pass"] = all_pass;
  out["wall_ms"] = ms_since(start);
  return emit(out, all_pass ? kExitYes : kExitNo,
              all_pass ? "all properties pass" : "property failures detected");
}

int cmd_reduce(const std::string& path, bool also_decide,
               const std::string& out_path, uint32_t epsilon_exp,
               uint64_t seed, uint32_t threads) {
  const auto start = Clock::now();
  Graph g;
  load_instance("reduce", path, g);

  Graph lifted;
  if (sht_star_lift(g.h, &lifted.h) != SHT_OK) die("reduce", sht_last_error());

  char* text = nullptr;
  if (sht_hypergraph_canonical_text(lifted.h, &text) != SHT_OK)
    die("reduce", sht_last_error());
  std::string lifted_text(text);
  sht_string_free(text);

  json out;
  out["command"] = "reduce";
  out["instance"] = instance_json(g.h, path);
  out["lifted"] = instance_json(lifted.h, "");
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f || !(f << lifted_text))
      die("reduce", "cannot write '" + out_path + "'");
    out["lifted"]["path"] = out_path;
  } else {
    out["lifted"]["text"] = lifted_text;
  }

  int exit_code = kExitYes;
  std::string summary = "lifted " + std::to_string(
      sht_hypergraph_edge_count(g.h)) + " edges onto star vertex " +
      std::to_string(sht_hypergraph_vertex_count(g.h) + 1);
  if (also_decide) {
    sht_decide_options opts{};
    opts.epsilon_exp = epsilon_exp;
    opts.seed = seed;
    opts.threads = threads;
    Decision d;
    if (sht_decide(lifted.h, &opts, &d.d) != SHT_OK)
      die("reduce", sht_last_error());
    out["decision"] = decision_json(lifted.h, d.d);
    const int verdict = sht_decision_verdict(d.d);
    exit_code = verdict == SHT_VERDICT_YES ? kExitYes : kExitNo;
    summary += std::string("; perfect matching: ") + verdict_name(verdict);
  }
  out["wall_ms"] = ms_since(start);
  return emit(out, exit_code, summary);
}

std::vector<uint32_t> parse_sizes(const std::string& spec) {
  std::vector<uint32_t> sizes;
  size_t pos = 0;
  while (pos <= spec.size()) {
    const size_t comma = std::min(spec.find(',', pos), spec.size());
    const std::string tok = spec.substr(pos, comma - pos);
    pos = comma + 1;
    if (tok.empty()) continue;
    char* end = nullptr;
    const unsigned long v = std::strtoul(tok.c_str(), &end, 10);
    if (end == nullptr || *end != '\0' || v == 0 || v > 100'000)
      die("bench", "bad size '" + tok + "' (expected comma-separated odd "
                   "vertex counts)");
    sizes.push_back(static_cast<uint32_t>(v));
  }
  return sizes;
}

int cmd_bench(const std::vector<uint32_t>& sizes, uint64_t seed,
              uint32_t epsilon_exp, uint32_t threads) {
  json results = json::array();
  json skipped = json::array();
  std::vector<std::pair<uint32_t, double>> timings;
  for (uint32_t n : sizes) {
    if (n % 2 == 0 || n < 3) {
      skipped.push_back({{"vertices", n}, {"reason", "even vertex count"}});
      std::cerr << "skip N=" << n << " (even vertex count)\n";
      continue;
    }
    Graph g;
    if (sht_hypergraph_complete(n, 3, &g.h) != SHT_OK)
      die("bench", sht_last_error());
    sht_decide_options opts{};
    opts.epsilon_exp = epsilon_exp;
    opts.seed = seed;
    opts.threads = threads;
    const auto start = Clock::now();
    Decision d;
    if (sht_decide(g.h, &opts, &d.d) != SHT_OK) die("bench", sht_last_error());
    const double ms = ms_since(start);
    timings.emplace_back(n, ms);
    results.push_back({{"vertices", n},
                       {"edges", sht_hypergraph_edge_count(g.h)},
                       {"q", sht_decision_field_modulus(d.d)},
                       {"verdict", verdict_name(sht_decision_verdict(d.d))},
                       {"wall_ms", ms}});
    std::cerr << "N=" << n << ": " << ms << " ms\n";
  }
  json ratios = json::array();
  for (size_t i = 1; i < timings.size(); ++i) {
    const double factor = timings[i].second / timings[i - 1].second;
    ratios.push_back({{"from", timings[i - 1].first},
                      {"to", timings[i].first},
                      {"factor", factor}});
    std::cerr << "ratio " << timings[i - 1].first << " -> "
              << timings[i].first << ": " << factor << "x\n";
  }
  json out;
  out["command"] = "bench";
  out["params"] = {{"seed", seed}, {"epsilon_exp", epsilon_exp}};
  out["results"] = results;
  out["skipped"] = skipped;
  out["ratios"] = ratios;
  std::cout << out.dump() << '\n';
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "spanning-hypertree decisions for 3-uniform hypergraphs "
      "(randomized, one-sided error) with exact desk-scale oracles"};
  app.require_subcommand(1);

  const uint64_t env_seed = default_seed_from_env();

  std::string path;
  uint32_t epsilon_exp = 20;
  uint64_t seed = env_seed;
  std::string strategy = "auto";
  uint64_t q_override = 0;
  uint32_t threads = std::thread::hardware_concurrency();
  bool count_only = false;
  uint32_t max_n = 9;
  uint32_t trials = 100;
  bool also_decide = false;
  std::string out_path;
  std::string sizes_spec{"201,401"};

  auto add_decide_flags = [&](CLI::App* cmd) {
    cmd->add_option("--epsilon-exp", epsilon_exp,
                    "error target exponent b, failure bound 2^-b")
        ->check(CLI::Range(1u, 4096u));
    cmd->add_option("--seed", seed, "RNG seed (default: $SHT_SEED or 0)");
    cmd->add_option("--threads", threads, "max parallel trial workers");
  };

  CLI::App* decide = app.add_subcommand("decide",
                                        "decide spanning-hypertree existence");
  decide->add_option("path", path, "instance file")->required();
  add_decide_flags(decide);
  decide->add_option("--strategy", strategy, "auto | repeated | single")
      ->check(CLI::IsMember({"auto", "repeated", "single"}));
  decide->add_option("--q", q_override, "odd prime field override");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "exact brute-force hypertree enumeration");
  oracle->add_option("path", path, "instance file")->required();
  oracle->add_flag("--count-only", count_only, "suppress the hypertree list");

  CLI::App* verify = app.add_subcommand(
      "verify", "run the algebraic property suite");
  verify->add_option("--max-n", max_n, "largest (odd) vertex count")
      ->check(CLI::Range(3u, 11u));
  verify->add_option("--seed", seed, "RNG seed (default: $SHT_SEED or 0)");
  verify->add_option("--trials", trials, "weight draws per instance")
      ->check(CLI::Range(1u, 100000u));

  CLI::App* reduce = app.add_subcommand(
      "reduce", "lift a graph to a 3-uniform matching instance");
  reduce->add_option("path", path, "2-uniform instance file")->required();
  reduce->add_flag("--decide", also_decide,
                   "also decide perfect-matching existence");
  reduce->add_option("-o,--out", out_path, "write the lifted instance here");
  add_decide_flags(reduce);

  CLI::App* bench = app.add_subcommand(
      "bench", "time decide on complete instances");
  bench->add_option("--sizes", sizes_spec,
                    "comma-separated vertex counts (odd)");
  add_decide_flags(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11 prints its own message; keep the JSON contract
    if (e.get_exit_code() != 0) {
      json out;
      out["command"] = "usage";
      out["error"] = e.what();
      std::cout << out.dump() << '\n';
      std::cerr << e.what() << '\n';
      return kExitError;
    }
    return app.exit(e);  // --help and friends
  }

  try {
    if (decide->parsed())
      return cmd_decide(path, epsilon_exp, seed, strategy, q_override,
                        threads);
    if (oracle->parsed()) return cmd_oracle(path, count_only);
    if (verify->parsed()) return cmd_verify(max_n, seed, trials);
    if (reduce->parsed())
      return cmd_reduce(path, also_decide, out_path, epsilon_exp, seed,
                        threads);
    if (bench->parsed())
      return cmd_bench(parse_sizes(sizes_spec), seed, epsilon_exp, threads);
  } catch (const std::exception& e) {
    die("internal", e.what());
  }
  return kExitError;
}
