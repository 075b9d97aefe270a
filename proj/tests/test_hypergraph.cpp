// Copyright 2026 The sht authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain it at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include <array>
#include <functional>

#include "doctest.h"
#include "errors.hpp"
#include "hypergraph.hpp"
#include "test_oracles.hpp"
#include "verify.hpp"

using namespace sht;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::kInvalidArgument;
}

}  // namespace

TEST_SUITE_BEGIN("hypergraph");

TEST_CASE("parse minimal instance") {
  const Hypergraph h = Hypergraph::parse("shg 3 3 1\ne 1 2 3\n");
  CHECK(h.uniformity() == 3);
  CHECK(h.vertex_count() == 3);
  CHECK(h.edge_count() == 1);
  const auto e = h.edge(0);
  CHECK(e[0] == 1);
  CHECK(e[1] == 2);
  CHECK(e[2] == 3);
}

TEST_CASE("parse comments, blank lines, unsorted vertices") {
  const Hypergraph h =
      Hypergraph::parse("# a comment\n\nshg 3 5 2\ne 3 1 2\n# mid\ne 5 4 3\n");
  CHECK(h.edge_count() == 2);
  CHECK(h.edge_index(std::array<uint32_t, 3>{1, 2, 3}).has_value());
  CHECK(h.edge_index(std::array<uint32_t, 3>{3, 4, 5}).has_value());
  CHECK_FALSE(h.edge_index(std::array<uint32_t, 3>{1, 2, 4}).has_value());
}

TEST_CASE("parse errors carry codes and line numbers") {
  CHECK(code_of([] { Hypergraph::parse("shg 3 5 1\ne 1 1 2\n"); }) ==
        Errc::kRepeatedVertexInEdge);
  CHECK(code_of([] { Hypergraph::parse("shg 3 5 1\ne 1 2 9\n"); }) ==
        Errc::kVertexOutOfRange);
  CHECK(code_of([] { Hypergraph::parse("shg 4 5 0\n"); }) ==
        Errc::kUniformityMismatch);
  CHECK(code_of([] { Hypergraph::parse("shg 3 5 1\ne 1 2\n"); }) ==
        Errc::kUniformityMismatch);
  CHECK(code_of([] { Hypergraph::parse("hello\n"); }) == Errc::kSyntaxError);
  CHECK(code_of([] { Hypergraph::parse("shg 3 5 2\ne 1 2 3\n"); }) ==
        Errc::kSyntaxError);
  CHECK(code_of([] { Hypergraph::parse("shg 3 5 0\ne 1 2 3\n"); }) ==
        Errc::kSyntaxError);
  CHECK(code_of([] { Hypergraph::parse(""); }) == Errc::kSyntaxError);
  try {
    Hypergraph::parse("shg 3 5 1\ne 1 2 x\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("duplicate edges are dropped with a count") {
  const Hypergraph h =
      Hypergraph::parse("shg 3 5 3\ne 1 2 3\ne 3 2 1\ne 1 4 5\n");
  CHECK(h.edge_count() == 2);
  CHECK(h.duplicates_dropped() == 1);
}

TEST_CASE("complete hypergraphs") {
  CHECK(Hypergraph::complete(5, 3).edge_count() == 10);
  CHECK(Hypergraph::complete(4, 2).edge_count() == 6);
  CHECK(Hypergraph::complete(3, 3).edge_count() == 1);
  CHECK_THROWS_AS(Hypergraph::complete(5, 4), Error);
}

TEST_CASE("K4 parses as a 2-uniform instance") {
  const Hypergraph h = Hypergraph::parse(
      "shg 2 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
  CHECK(h == Hypergraph::complete(4, 2));
}

TEST_CASE("connectivity") {
  const Hypergraph shared = Hypergraph(3, 5, {{1, 2, 3}, {3, 4, 5}});
  CHECK(shared.is_connected());
  const Hypergraph split = Hypergraph(3, 7, {{1, 2, 3}, {4, 5, 6}});
  CHECK_FALSE(split.is_connected());  // vertex 7 is isolated anyway
  const Hypergraph lonely(3, 1, {});
  CHECK(lonely.is_connected());
  const Hypergraph isolated(3, 4, {{1, 2, 3}});
  CHECK_FALSE(isolated.is_connected());
}

TEST_CASE("spanning hypertree recognition") {
  const Hypergraph k53 = Hypergraph::complete(5, 3);
  const auto idx = [&](std::array<uint32_t, 3> verts) {
    return static_cast<uint32_t>(*k53.edge_index(verts));
  };
  CHECK(k53.is_spanning_hypertree({idx({1, 2, 3}), idx({3, 4, 5})}));
  CHECK_FALSE(k53.is_spanning_hypertree({idx({1, 2, 3}), idx({1, 2, 4})}));

  const Hypergraph k73 = Hypergraph::complete(7, 3);
  const auto idx7 = [&](std::array<uint32_t, 3> verts) {
    return static_cast<uint32_t>(*k73.edge_index(verts));
  };
  CHECK(k73.is_spanning_hypertree(
      {idx7({1, 2, 3}), idx7({3, 4, 5}), idx7({5, 6, 7})}));
  // two edges sharing two vertices close a Berge cycle
  CHECK_FALSE(k73.is_spanning_hypertree(
      {idx7({1, 2, 3}), idx7({2, 3, 4}), idx7({5, 6, 7})}));

  const Hypergraph lonely(3, 1, {});
  CHECK(lonely.is_spanning_hypertree({}));
}

TEST_CASE("edge-count condition is implied for full covers") {
  // For 3-uniform, N = 2n+1, |S| = n subsets covering all vertices, the
  // incidence tree condition reduces to connectivity; both paths agree.
  Rng rng(31);
  for (int it = 0; it < 200; ++it) {
    const uint32_t n_verts = 5 + 2 * (it % 3);
    const Hypergraph h = random_uniform_hypergraph(
        3, n_verts, 2 + static_cast<uint32_t>(rng.uniform_below(8)), rng);
    const uint32_t n = (n_verts - 1) / 2;
    if (h.edge_count() < n) continue;
    // random n-subset of edge indices
    EdgeSubset s;
    for (uint32_t e = 0; e < h.edge_count() && s.size() < n; ++e)
      if (rng.uniform_below(2) == 0) s.push_back(e);
    if (s.size() < n) continue;
    const Hypergraph sub = [&] {
      std::vector<std::vector<uint32_t>> edges;
      for (uint32_t e : s) {
        const auto verts = h.edge(e);
        edges.emplace_back(verts.begin(), verts.end());
      }
      return Hypergraph(3, n_verts, edges);
    }();
    const bool covers_all = [&] {
      std::vector<bool> seen(n_verts + 1, false);
      for (uint32_t e : s)
        for (uint32_t v : h.edge(e)) seen[v] = true;
      for (uint32_t v = 1; v <= n_verts; ++v)
        if (!seen[v]) return false;
      return true;
    }();
    if (covers_all)
      CHECK(h.is_spanning_hypertree(s) == sub.is_connected());
  }
}

TEST_CASE("connectivity agrees with the BFS oracle on random instances") {
  Rng rng(17);
  for (int it = 0; it < 300; ++it) {
    const uint32_t k = it % 2 == 0 ? 3 : 2;
    const uint32_t n = k + static_cast<uint32_t>(rng.uniform_below(8));
    const Hypergraph pool = Hypergraph::complete(n, k);
    const uint32_t m =
        static_cast<uint32_t>(rng.uniform_below(pool.edge_count() + 1));
    const Hypergraph h = random_uniform_hypergraph(k, n, m, rng);
    CHECK(h.is_connected() == testing::bfs_connected(h));
  }
}

TEST_CASE("canonical serialization round-trips") {
  const Hypergraph h =
      Hypergraph::parse("shg 3 6 3\n e 6 4 2\ne 1 2 3\ne 2 4 6\n");
  CHECK(h.canonical_text() == "shg 3 6 2\ne 1 2 3\ne 2 4 6\n");
  Rng rng(5);
  for (int it = 0; it < 100; ++it) {
    const uint32_t k = it % 2 == 0 ? 3 : 2;
    const uint32_t n = k + static_cast<uint32_t>(rng.uniform_below(7));
    const Hypergraph pool = Hypergraph::complete(n, k);
    const uint32_t m =
        static_cast<uint32_t>(rng.uniform_below(pool.edge_count() + 1));
    const Hypergraph a = random_uniform_hypergraph(k, n, m, rng);
    const Hypergraph b = Hypergraph::parse(a.canonical_text());
    CHECK(a == b);
    CHECK(a.canonical_text() == b.canonical_text());
    CHECK(a.digest() == b.digest());
  }
}

TEST_SUITE_END();
