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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sht {

/// Indices into the owning hypergraph's edge list, sorted ascending and
/// duplicate-free.
using EdgeSubset = std::vector<uint32_t>;

/// Immutable k-uniform hypergraph, k in {2,3}. Vertices are labeled 1..N in
/// every interface. Edges are kept with vertices ascending, the edge list
/// lexicographically sorted and duplicate-free.
class Hypergraph {
 public:
  /// Validating constructor; duplicate edges are dropped (count retained).
  Hypergraph(uint32_t uniformity, uint32_t vertex_count,
             const std::vector<std::vector<uint32_t>>& edges);

  /// Parses the line-oriented instance format:
  ///   # comment
  ///   shg <k> <N> <M>
  ///   e v1 v2 [v3]     (M lines)
  static Hypergraph parse(std::string_view text);
  static Hypergraph parse_file(const std::string& path);

  /// All C(N,k) edges.
  static Hypergraph complete(uint32_t vertex_count, uint32_t uniformity);

  uint32_t uniformity() const { return k_; }
  uint32_t vertex_count() const { return n_; }
  size_t edge_count() const { return flat_.size() / k_; }
  uint32_t duplicates_dropped() const { return dups_; }

  std::span<const uint32_t> edge(size_t index) const {
    return {flat_.data() + index * k_, k_};
  }

  /// Index of an edge given as ascending vertices; nullopt if absent.
  std::optional<size_t> edge_index(std::span<const uint32_t> verts) const;

  /// One component containing every vertex (via shared-vertex walks).
  /// Isolated vertices disconnect the hypergraph unless N = 1.
  bool is_connected() const;

  /// Spanning hypertree test for the sub-hypergraph (all N vertices, edges
  /// `subset`): its vertex-edge incidence graph must be connected and
  /// satisfy the tree edge count k|S| = N + |S| - 1. Equivalent to
  /// connected + Berge-acyclic.
  bool is_spanning_hypertree(const EdgeSubset& subset) const;

  /// Header plus lexicographically sorted edge lines, single spaces,
  /// trailing newline. Bit-exact: parse(canonical_text()) == *this.
  std::string canonical_text() const;

  /// FNV-1a over the canonical binary form (k, N, M, sorted edge list);
  /// identifies the instance in witnesses. Computed once at construction.
  uint64_t digest() const { return digest_; }

  bool operator==(const Hypergraph& o) const {
    return k_ == o.k_ && n_ == o.n_ && flat_ == o.flat_;
  }

 private:
  struct CompleteTag {};
  Hypergraph(CompleteTag, uint32_t uniformity, uint32_t vertex_count);
  uint64_t compute_digest() const;

  uint32_t k_;
  uint32_t n_;
  std::vector<uint32_t> flat_;  // stride k_
  uint32_t dups_ = 0;
  uint64_t digest_ = 0;
};

}  // namespace sht
