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
#include <vector>

#include "hypergraph.hpp"

namespace sht {

/// A spanning hypertree oriented toward a root: every edge gets a tip (its
/// vertex nearest the root) and an ordered tail pair (j, k) normalized so
/// levi_civita(tip, j, k) = +1. Each non-root vertex is a tail of exactly
/// one edge; the root is a tail of none.
struct RootedOrientation {
  struct OrientedEdge {
    uint32_t edge_index;
    uint32_t tip;
    uint32_t tail_a;
    uint32_t tail_b;
  };
  uint32_t root;
  std::vector<OrientedEdge> edges;  // in subset order
};

/// BFS orientation of a spanning hypertree; throws NotAHypertree when the
/// subset is not one.
RootedOrientation orient_toward_root(const Hypergraph& h,
                                     const EdgeSubset& tree, uint32_t root);

/// Sign of the hypertree via the exterior-algebra monomial: the parity of
/// the length-N vertex sequence (root, j_1, k_1, ..., j_n, k_n) read as a
/// permutation of 1..N. Root choice does not affect the value.
int hypertree_sign_exterior(const Hypergraph& h, const EdgeSubset& tree,
                            uint32_t root);

/// Sign of the hypertree via permutation conjugation: compose the cyclic
/// rotations of the edge vertex sets in list order (rightmost first), check
/// the product is a single N-cycle, and take the parity of the positioning
/// permutation that conjugates it to the canonical cycle (1 2 ... N). The
/// edge list may be in any order -- the value does not depend on it. Throws
/// NotAnNCycle when the subset is not a spanning hypertree.
int hypertree_sign_conjugation(const Hypergraph& h,
                               const std::vector<uint32_t>& tree);

/// Parity of a permutation given as images perm[i] in [0, n); +1 or -1.
int permutation_parity(const std::vector<uint32_t>& perm);

}  // namespace sht
