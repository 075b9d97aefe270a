// Copyright 2026 The sht authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain it at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include <algorithm>

#include "doctest.h"
#include "errors.hpp"
#include "oracle.hpp"
#include "signs.hpp"
#include "verify.hpp"

using namespace sht;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("hypertree enumeration on complete instances") {
  CHECK(enumerate_spanning_hypertrees(Hypergraph::complete(3, 3)).size() == 1);
  CHECK(enumerate_spanning_hypertrees(Hypergraph::complete(5, 3)).size() == 15);
  CHECK(enumerate_spanning_hypertrees(Hypergraph::complete(7, 3)).size() ==
        735);
}

TEST_CASE("enumeration output is lexicographic and deduplicated") {
  const auto trees = enumerate_spanning_hypertrees(Hypergraph::complete(5, 3));
  CHECK(std::is_sorted(trees.begin(), trees.end()));
  CHECK(std::adjacent_find(trees.begin(), trees.end()) == trees.end());
  for (const auto& t : trees) CHECK(t.size() == 2);
}

TEST_CASE("instances without hypertrees") {
  CHECK(enumerate_spanning_hypertrees(Hypergraph(3, 5, {{1, 2, 3}, {1, 2, 4}}))
            .empty());
  CHECK(enumerate_spanning_hypertrees(Hypergraph(3, 4, {{1, 2, 3}})).empty());
  CHECK(enumerate_spanning_hypertrees(Hypergraph(3, 6, {{1, 2, 3}, {4, 5, 6}}))
            .empty());
}

TEST_CASE("single vertex has the empty hypertree") {
  const auto trees = enumerate_spanning_hypertrees(Hypergraph(3, 1, {}));
  REQUIRE(trees.size() == 1);
  CHECK(trees[0].empty());
}

TEST_CASE("enumeration guard") {
  // C(165, 5) is about 8e8, over the 1e7 guard
  CHECK_THROWS_AS(enumerate_spanning_hypertrees(Hypergraph::complete(11, 3)),
                  Error);
  try {
    enumerate_spanning_hypertrees(Hypergraph::complete(11, 3));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kTooLarge);
  }
}

TEST_CASE("signed polynomial of a single edge") {
  const Hypergraph h(3, 3, {{1, 2, 3}});
  const SignedHypertreePoly poly = signed_hypertree_polynomial(h);
  REQUIRE(poly.terms.size() == 1);
  CHECK(poly.terms[0].edges == EdgeSubset{0});
  CHECK(poly.terms[0].sign == 1);
}

TEST_CASE("signed polynomial support equals the enumeration") {
  Rng rng(6);
  for (int it = 0; it < 30; ++it) {
    const uint32_t n_verts = 5 + 2 * (it % 3);
    const auto pool = Hypergraph::complete(n_verts, 3).edge_count();
    const uint32_t m = std::min<uint32_t>(
        static_cast<uint32_t>(pool),
        2 + static_cast<uint32_t>(rng.uniform_below(10)));
    const Hypergraph h = random_uniform_hypergraph(3, n_verts, m, rng);
    const auto trees = enumerate_spanning_hypertrees(h);
    const SignedHypertreePoly poly = signed_hypertree_polynomial(h);
    REQUIRE(poly.terms.size() == trees.size());
    for (size_t i = 0; i < trees.size(); ++i) {
      CHECK(poly.terms[i].edges == trees[i]);
      CHECK((poly.terms[i].sign == 1 || poly.terms[i].sign == -1));
      CHECK(poly.terms[i].sign == hypertree_sign_conjugation(h, trees[i]));
    }
  }
}

TEST_CASE("polynomial evaluation") {
  const FieldCtx f(7);
  const Hypergraph none(3, 5, {{1, 2, 3}, {1, 2, 4}});
  CHECK(evaluate_poly(signed_hypertree_polynomial(none),
                      WeightAssignment::all_ones(none, f), f) == f.zero());

  const Hypergraph one(3, 3, {{1, 2, 3}});
  WeightAssignment w(one, f);
  w.set_by_index(0, f.from(5));
  CHECK(evaluate_poly(signed_hypertree_polynomial(one), w, f) == f.from(5));

  // all-ones evaluation of K(5,3) is the sum of the 15 signs
  const Hypergraph k53 = Hypergraph::complete(5, 3);
  const SignedHypertreePoly poly = signed_hypertree_polynomial(k53);
  int64_t sign_sum = 0;
  for (const auto& term : poly.terms) sign_sum += term.sign;
  const FieldCtx big(10007);
  CHECK(evaluate_poly(poly, WeightAssignment::all_ones(k53, big), big) ==
        big.from_signed(sign_sum));
}

TEST_CASE("evaluation rejects missing weights") {
  const FieldCtx f(7);
  const Hypergraph k53 = Hypergraph::complete(5, 3);
  const SignedHypertreePoly poly = signed_hypertree_polynomial(k53);
  const Hypergraph small(3, 3, {{1, 2, 3}});
  CHECK_THROWS_AS(evaluate_poly(poly, WeightAssignment(small, f), f), Error);
  CHECK_THROWS_AS(
      evaluate_poly(poly, WeightAssignment(k53, FieldCtx(11)), f), Error);
}

TEST_CASE("closed-form complete counts") {
  CHECK(complete_hypertree_count(1, 3) == 1);
  CHECK(complete_hypertree_count(2, 3) == 15);
  CHECK(complete_hypertree_count(3, 3) == 735);
  CHECK(complete_hypertree_count(4, 3) == 76545);
  CHECK(complete_hypertree_count(3, 2) == 16);
  CHECK(complete_hypertree_count(0, 3) == 1);
}

TEST_CASE("closed-form count matches Cayley for k = 2") {
  for (uint32_t n = 1; n <= 8; ++n) {
    // (n+1)^(n-1) spanning trees of the complete graph on n+1 vertices
    boost::multiprecision::cpp_int cayley = 1;
    for (uint32_t i = 0; i + 1 < n; ++i) cayley *= n + 1;
    CHECK(complete_hypertree_count(n, 2) == cayley);
  }
}

TEST_CASE("closed-form count matches enumeration for k = 3") {
  for (uint32_t n_verts : {3u, 5u, 7u, 9u}) {
    const auto trees =
        enumerate_spanning_hypertrees(Hypergraph::complete(n_verts, 3));
    CHECK(complete_hypertree_count((n_verts - 1) / 2, 3) == trees.size());
  }
}

TEST_CASE("perfect matchings") {
  CHECK(enumerate_perfect_matchings(Hypergraph::complete(4, 2)).size() == 3);
  CHECK(enumerate_perfect_matchings(Hypergraph(2, 3, {{1, 2}, {2, 3}}))
            .empty());
  CHECK(enumerate_perfect_matchings(Hypergraph(2, 2, {{1, 2}})).size() == 1);
  CHECK(enumerate_perfect_matchings(Hypergraph::complete(6, 2)).size() == 15);
  CHECK_THROWS_AS(enumerate_perfect_matchings(Hypergraph::complete(18, 2)),
                  Error);
}

TEST_SUITE_END();
