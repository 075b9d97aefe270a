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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "field.hpp"
#include "hypergraph.hpp"
#include "matrix.hpp"

namespace sht {

/// Subset-space guard for the brute-force enumerators: C(M, n) at most 1e7.
inline constexpr uint64_t kEnumerationGuard = 10'000'000;

/// Every spanning hypertree of a 3-uniform hypergraph, as sorted edge-index
/// subsets in lexicographic order. Even vertex count has none; instances
/// whose subset space exceeds the guard throw TooLarge.
std::vector<EdgeSubset> enumerate_spanning_hypertrees(const Hypergraph& h);

/// The exact signed spanning-hypertree polynomial: one +-1 monomial per
/// spanning hypertree, keyed by its edge set. Identically zero iff the
/// hypergraph has no spanning hypertree.
struct SignedHypertreePoly {
  struct Term {
    EdgeSubset edges;
    int sign;  // +1 or -1
  };
  std::vector<Term> terms;     // lexicographic by edge set
  uint64_t source_digest = 0;  // hypergraph the edge indices refer to
  size_t source_edge_count = 0;
};

SignedHypertreePoly signed_hypertree_polynomial(const Hypergraph& h);

/// Sum of sign * product of edge weights, over all monomials.
FieldElem evaluate_poly(const SignedHypertreePoly& poly,
                        const WeightAssignment& w, const FieldCtx& ctx);

/// Closed-form number of spanning hypertrees of the complete k-uniform
/// hypergraph with n edges per hypertree (Cayley's count when k = 2):
///   ((k-1)n)! / (((k-1)n+1) * n!) * (((k-1)n+1)/(k-1)!)^n
/// evaluated in exact rationals and asserted integral.
boost::multiprecision::cpp_int complete_hypertree_count(uint32_t n,
                                                        uint32_t k);

/// All exact covers of a graph (k=2), i.e. perfect matchings, as sorted
/// edge-index subsets. Guarded to N <= 16.
std::vector<EdgeSubset> enumerate_perfect_matchings(const Hypergraph& g);

}  // namespace sht
