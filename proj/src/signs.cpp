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

#include "signs.hpp"

#include <algorithm>
#include <queue>

#include "errors.hpp"
#include "matrix.hpp"

namespace sht {

int permutation_parity(const std::vector<uint32_t>& perm) {
  const size_t n = perm.size();
  std::vector<bool> seen(n, false);
  size_t cycles = 0;
  for (size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return (n - cycles) % 2 == 0 ? 1 : -1;
}

RootedOrientation orient_toward_root(const Hypergraph& h,
                                     const EdgeSubset& tree, uint32_t root) {
  if (h.uniformity() != 3)
    fail(Errc::kUnsupportedUniformity, "orientation needs a 3-uniform hypergraph");
  if (root < 1 || root > h.vertex_count())
    fail(Errc::kIndexOutOfRange, "root vertex out of range");
  if (!h.is_spanning_hypertree(tree))
    fail(Errc::kNotAHypertree, "edge subset is not a spanning hypertree");

  const uint32_t n_verts = h.vertex_count();
  std::vector<std::vector<uint32_t>> incident(n_verts + 1);  // vertex -> subset positions
  for (uint32_t pos = 0; pos < tree.size(); ++pos)
    for (uint32_t v : h.edge(tree[pos])) incident[v].push_back(pos);

  RootedOrientation out;
  out.root = root;
  out.edges.resize(tree.size());
  std::vector<bool> edge_done(tree.size(), false);
  std::vector<bool> vertex_seen(n_verts + 1, false);
  std::queue<uint32_t> frontier;
  frontier.push(root);
  vertex_seen[root] = true;
  while (!frontier.empty()) {
    const uint32_t v = frontier.front();
    frontier.pop();
    for (uint32_t pos : incident[v]) {
      if (edge_done[pos]) continue;
      edge_done[pos] = true;
      const auto e = h.edge(tree[pos]);
      uint32_t tails[2];
      int t = 0;
      for (uint32_t u : e)
        if (u != v) tails[t++] = u;
      // tails[] is ascending (edge vertices are sorted); reorder so the
      // triple (tip, tail_a, tail_b) is an even permutation of sorted order.
      if (levi_civita(v, tails[0], tails[1]) < 0) std::swap(tails[0], tails[1]);
      out.edges[pos] = {tree[pos], v, tails[0], tails[1]};
      for (int i = 0; i < 2; ++i) {
        if (!vertex_seen[tails[i]]) {
          vertex_seen[tails[i]] = true;
          frontier.push(tails[i]);
        }
      }
    }
  }
  return out;
}

int hypertree_sign_exterior(const Hypergraph& h, const EdgeSubset& tree,
                            uint32_t root) {
  const RootedOrientation o = orient_toward_root(h, tree, root);
  // Sequence (root, j_1, k_1, ..., j_n, k_n) covers each vertex once; its
  // parity as a permutation of 1..N is the sign.
  std::vector<uint32_t> perm;
  perm.reserve(h.vertex_count());
  perm.push_back(o.root - 1);
  for (const auto& e : o.edges) {
    perm.push_back(e.tail_a - 1);
    perm.push_back(e.tail_b - 1);
  }
  return permutation_parity(perm);
}

int hypertree_sign_conjugation(const Hypergraph& h,
                               const std::vector<uint32_t>& tree) {
  if (h.uniformity() != 3)
    fail(Errc::kUnsupportedUniformity, "hypertree signs need a 3-uniform hypergraph");
  const uint32_t n_verts = h.vertex_count();
  const size_t m = h.edge_count();
  std::vector<bool> used(m, false);
  for (uint32_t e : tree) {
    if (e >= m) fail(Errc::kInvalidArgument, "edge index out of range");
    if (used[e]) fail(Errc::kInvalidArgument, "edge repeated in subset");
    used[e] = true;
  }
  if (3 * tree.size() != size_t(n_verts) + tree.size() - 1)
    fail(Errc::kNotAnNCycle, "edge count rules out a spanning hypertree");

  // Compose the per-edge rotations tau_A (a -> b -> c -> a on the sorted
  // vertices of A), rightmost first in subset order.
  std::vector<uint32_t> tau(n_verts + 1);
  for (uint32_t v = 1; v <= n_verts; ++v) tau[v] = v;
  std::vector<uint32_t> next(n_verts + 1);
  for (size_t i = tree.size(); i-- > 0;) {
    const auto e = h.edge(tree[i]);
    for (uint32_t v = 1; v <= n_verts; ++v) next[v] = v;
    next[e[0]] = e[1];
    next[e[1]] = e[2];
    next[e[2]] = e[0];
    for (uint32_t v = 1; v <= n_verts; ++v) tau[v] = next[tau[v]];
  }

  // A spanning hypertree always yields one N-cycle; anything else is a
  // structural failure of the input.
  std::vector<uint32_t> chain;
  chain.reserve(n_verts);
  uint32_t cur = 1;
  for (uint32_t i = 0; i < n_verts; ++i) {
    chain.push_back(cur);
    cur = tau[cur];
  }
  std::vector<bool> seen(n_verts + 1, false);
  for (uint32_t v : chain) {
    if (seen[v]) fail(Errc::kNotAnNCycle, "rotation product is not a single N-cycle");
    seen[v] = true;
  }
  if (cur != 1)
    fail(Errc::kNotAnNCycle, "rotation product is not a single N-cycle");

  // chain[i] is the image of i+1 under the positioning permutation that
  // conjugates the canonical cycle (1 2 ... N) into the product above.
  std::vector<uint32_t> sigma(n_verts);
  for (uint32_t i = 0; i < n_verts; ++i) sigma[i] = chain[i] - 1;
  return permutation_parity(sigma);
}

}  // namespace sht
