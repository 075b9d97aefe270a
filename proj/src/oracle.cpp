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

#include "oracle.hpp"

#include <algorithm>

#include "disjoint_set.hpp"
#include "errors.hpp"
#include "signs.hpp"

namespace sht {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

namespace {

// C(m, n) saturating at the guard cap, to keep the precheck overflow-free.
uint64_t binomial_capped(uint64_t m, uint64_t n, uint64_t cap) {
  if (n > m) return 0;
  n = std::min(n, m - n);
  cpp_int c = 1;
  for (uint64_t i = 1; i <= n; ++i) {
    c = c * cpp_int(m - n + i) / cpp_int(i);
    if (c > cap) return cap + 1;
  }
  return static_cast<uint64_t>(c);
}

// Depth-first walk over ascending edge-index subsets of size `want`,
// pruning any branch whose partial subset already closes a Berge cycle
// (a failed union in the incidence structure).
void enumerate_trees_rec(const Hypergraph& h, uint32_t first, uint32_t want,
                         EdgeSubset& chosen, const DisjointSet& ds,
                         std::vector<EdgeSubset>& out) {
  if (want == 0) {
    if (h.is_spanning_hypertree(chosen)) out.push_back(chosen);
    return;
  }
  const uint32_t m = static_cast<uint32_t>(h.edge_count());
  for (uint32_t e = first; e + want <= m; ++e) {
    DisjointSet next = ds;
    bool acyclic = true;
    const auto verts = h.edge(e);
    for (uint32_t j = 1; j < verts.size() && acyclic; ++j)
      acyclic = next.unite(verts[0] - 1, verts[j] - 1);
    if (!acyclic) continue;
    chosen.push_back(e);
    enumerate_trees_rec(h, e + 1, want - 1, chosen, next, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<EdgeSubset> enumerate_spanning_hypertrees(const Hypergraph& h) {
  if (h.uniformity() != 3)
    fail(Errc::kUnsupportedUniformity,
         "hypertree enumeration needs a 3-uniform hypergraph");
  const uint32_t n_verts = h.vertex_count();
  if (n_verts % 2 == 0) return {};  // N = 2n+1 is violated; no hypertree
  const uint32_t n_edges_tree = (n_verts - 1) / 2;
  if (binomial_capped(h.edge_count(), n_edges_tree, kEnumerationGuard) >
      kEnumerationGuard)
    fail(Errc::kTooLarge,
         "subset space C(" + std::to_string(h.edge_count()) + ", " +
             std::to_string(n_edges_tree) + ") exceeds the enumeration guard");
  std::vector<EdgeSubset> out;
  EdgeSubset chosen;
  chosen.reserve(n_edges_tree);
  DisjointSet ds(n_verts);
  enumerate_trees_rec(h, 0, n_edges_tree, chosen, ds, out);
  return out;  // recursion emits ascending subsets in lexicographic order
}

SignedHypertreePoly signed_hypertree_polynomial(const Hypergraph& h) {
  SignedHypertreePoly poly;
  poly.source_digest = h.digest();
  poly.source_edge_count = h.edge_count();
  for (auto& tree : enumerate_spanning_hypertrees(h))
    poly.terms.push_back({tree, hypertree_sign_exterior(h, tree, 1)});
  return poly;
}

FieldElem evaluate_poly(const SignedHypertreePoly& poly,
                        const WeightAssignment& w, const FieldCtx& ctx) {
  if (w.modulus() != ctx.modulus())
    fail(Errc::kContextMismatch, "weights from a different field");
  if (w.size() < poly.source_edge_count)
    fail(Errc::kMissingWeight,
         "weight assignment does not cover the polynomial's edges");
  uint64_t acc = 0;
  for (const auto& term : poly.terms) {
    uint64_t prod = 1 % ctx.modulus();
    for (uint32_t e : term.edges) {
      if (e >= w.size())
        fail(Errc::kMissingWeight,
             "no weight for edge index " + std::to_string(e));
      prod = ctx.mul_raw(prod, w.raw(e));
    }
    acc = term.sign > 0 ? ctx.add_raw(acc, prod) : ctx.sub_raw(acc, prod);
  }
  return {acc, ctx.modulus()};
}

cpp_int complete_hypertree_count(uint32_t n, uint32_t k) {
  if (k < 2) fail(Errc::kInvalidArgument, "uniformity must be at least 2");
  if (n == 0) return 1;
  const cpp_int big_n = cpp_int(k - 1) * n + 1;  // vertex count
  cpp_int factorial_part = 1;                    // ((k-1)n)!
  for (cpp_int i = 2; i <= big_n - 1; ++i) factorial_part *= i;
  cpp_int n_factorial = 1;
  for (uint32_t i = 2; i <= n; ++i) n_factorial *= i;
  cpp_int k1_factorial = 1;
  for (uint32_t i = 2; i <= k - 1; ++i) k1_factorial *= i;

  cpp_rational value(factorial_part, big_n * n_factorial);
  cpp_rational ratio(big_n, k1_factorial);
  for (uint32_t i = 0; i < n; ++i) value *= ratio;
  if (denominator(value) != 1)
    fail(Errc::kNonIntegerResult,
         "hypertree count formula produced a non-integer");
  return numerator(value);
}

namespace {

void enumerate_matchings_rec(const Hypergraph& g,
                             const std::vector<std::vector<uint32_t>>& incident,
                             std::vector<bool>& covered, uint32_t vertex,
                             EdgeSubset& chosen,
                             std::vector<EdgeSubset>& out) {
  const uint32_t n = g.vertex_count();
  while (vertex <= n && covered[vertex]) ++vertex;
  if (vertex > n) {
    EdgeSubset sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
    return;
  }
  for (uint32_t e : incident[vertex]) {
    const auto verts = g.edge(e);
    const uint32_t other = verts[0] == vertex ? verts[1] : verts[0];
    if (covered[other]) continue;
    covered[vertex] = covered[other] = true;
    chosen.push_back(e);
    enumerate_matchings_rec(g, incident, covered, vertex + 1, chosen, out);
    chosen.pop_back();
    covered[vertex] = covered[other] = false;
  }
}

}  // namespace

std::vector<EdgeSubset> enumerate_perfect_matchings(const Hypergraph& g) {
  if (g.uniformity() != 2)
    fail(Errc::kUnsupportedUniformity,
         "perfect matching enumeration needs a graph (k=2)");
  const uint32_t n = g.vertex_count();
  if (n > 16)
    fail(Errc::kTooLarge, "matching enumeration guarded to N <= 16");
  if (n % 2 != 0) return {};
  std::vector<std::vector<uint32_t>> incident(n + 1);
  for (uint32_t e = 0; e < g.edge_count(); ++e)
    for (uint32_t v : g.edge(e)) incident[v].push_back(e);
  std::vector<bool> covered(n + 1, false);
  std::vector<EdgeSubset> out;
  EdgeSubset chosen;
  enumerate_matchings_rec(g, incident, covered, 1, chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sht
