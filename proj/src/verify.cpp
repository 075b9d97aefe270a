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

#include "verify.hpp"

#include <algorithm>

#include "errors.hpp"
#include "matrix.hpp"
#include "signs.hpp"

namespace sht {

Hypergraph random_uniform_hypergraph(uint32_t uniformity, uint32_t vertices,
                                     uint32_t edges, Rng& rng) {
  const Hypergraph pool = Hypergraph::complete(vertices, uniformity);
  const size_t pool_size = pool.edge_count();
  if (edges > pool_size)
    fail(Errc::kInvalidArgument, "more edges requested than the pool holds");
  // Partial Fisher-Yates over edge indices.
  std::vector<uint32_t> idx(pool_size);
  for (size_t i = 0; i < pool_size; ++i) idx[i] = static_cast<uint32_t>(i);
  std::vector<std::vector<uint32_t>> chosen;
  chosen.reserve(edges);
  for (uint32_t i = 0; i < edges; ++i) {
    const size_t j = i + rng.uniform_below(pool_size - i);
    std::swap(idx[i], idx[j]);
    const auto e = pool.edge(idx[i]);
    chosen.emplace_back(e.begin(), e.end());
  }
  return Hypergraph(uniformity, vertices, chosen);
}

namespace {

// The signed Pfaffian of the principal minor: (-1)^(i0-1) Pf(M(i0)).
FieldElem signed_minor_pfaffian(const SkewMatrix& m, uint32_t i0,
                                const FieldCtx& ctx) {
  const FieldElem pf = m.principal_minor(i0).pfaffian();
  return i0 % 2 == 1 ? pf : ctx.neg(pf);
}

std::vector<Hypergraph> build_corpus(const VerifyOptions& opts, Rng& rng) {
  std::vector<Hypergraph> corpus;
  for (uint32_t n_verts = 3; n_verts <= opts.max_vertices; n_verts += 2) {
    corpus.push_back(Hypergraph::complete(n_verts, 3));
    const size_t pool = corpus.back().edge_count();
    const uint32_t tree_edges = (n_verts - 1) / 2;
    for (int i = 0; i < 6; ++i) {
      const uint32_t cap =
          static_cast<uint32_t>(std::min<size_t>(pool, 3 * tree_edges + 6));
      const uint32_t m = 1 + static_cast<uint32_t>(rng.uniform_below(cap));
      corpus.push_back(random_uniform_hypergraph(3, n_verts, m, rng));
    }
  }
  return corpus;
}

}  // namespace

uint64_t count_pfaffian_mismatches(const Hypergraph& h,
                                   const SignedHypertreePoly& poly,
                                   const FieldCtx& ctx, uint32_t weight_draws,
                                   uint64_t seed) {
  uint64_t mismatches = 0;
  for (uint32_t draw = 0; draw < weight_draws; ++draw) {
    Rng rng(derive_seed(seed, draw));
    const WeightAssignment w = WeightAssignment::sample(h, ctx, rng);
    const FieldElem expected = evaluate_poly(poly, w, ctx);
    const SkewMatrix m = skew_adjacency(h, w, ctx);
    for (uint32_t i0 = 1; i0 <= h.vertex_count(); ++i0)
      if (signed_minor_pfaffian(m, i0, ctx) != expected) ++mismatches;
  }
  return mismatches;
}

std::vector<PropertyResult> run_verification(const VerifyOptions& opts) {
  Rng rng(opts.seed);
  const std::vector<Hypergraph> corpus = build_corpus(opts, rng);
  const FieldCtx ctx(10007);

  PropertyResult theorem{"pfaffian_hypertree_at_points"};
  PropertyResult signs{"sign_agreement"};
  PropertyResult shuffles{"sign_edge_order_invariance"};
  PropertyResult minors{"minor_independence"};
  PropertyResult pf_det{"pf_squared_equals_det"};

  for (const Hypergraph& h : corpus) {
    const SignedHypertreePoly poly = signed_hypertree_polynomial(h);
    const uint64_t draws = std::max(1u, opts.weight_draws / 10);
    theorem.checks += draws * h.vertex_count();
    theorem.failures +=
        count_pfaffian_mismatches(h, poly, ctx, static_cast<uint32_t>(draws),
                                  rng.next());

    // minor independence on a fresh weight draw
    {
      Rng wrng(rng.next());
      const WeightAssignment w = WeightAssignment::sample(h, ctx, wrng);
      const SkewMatrix m = skew_adjacency(h, w, ctx);
      const FieldElem ref = signed_minor_pfaffian(m, 1, ctx);
      for (uint32_t i0 = 2; i0 <= h.vertex_count(); ++i0) {
        ++minors.checks;
        if (signed_minor_pfaffian(m, i0, ctx) != ref) ++minors.failures;
      }
    }

    for (const auto& term : poly.terms) {
      const EdgeSubset& tree = term.edges;
      const int conj = hypertree_sign_conjugation(h, tree);
      for (uint32_t root = 1; root <= h.vertex_count(); ++root) {
        ++signs.checks;
        if (hypertree_sign_exterior(h, tree, root) != conj) ++signs.failures;
      }
      std::vector<uint32_t> shuffled(tree);
      for (int s = 0; s < 20; ++s) {
        for (size_t i = shuffled.size(); i > 1; --i)
          std::swap(shuffled[i - 1], shuffled[rng.uniform_below(i)]);
        ++shuffles.checks;
        if (hypertree_sign_conjugation(h, shuffled) != conj)
          ++shuffles.failures;
      }
    }
  }

  // Random skew matrices, even dimensions.
  for (uint32_t dim = 2; dim <= 8; dim += 2) {
    for (int i = 0; i < 250; ++i) {
      SkewMatrix m(ctx, dim);
      for (uint32_t r = 0; r < dim; ++r)
        for (uint32_t c = r + 1; c < dim; ++c)
          m.set_pair(r, c, ctx.sample(rng));
      ++pf_det.checks;
      const FieldElem pf = m.pfaffian();
      if (ctx.mul(pf, pf) != m.determinant()) ++pf_det.failures;
    }
  }

  return {theorem, signs, shuffles, minors, pf_det};
}

}  // namespace sht
