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

#include "reduction.hpp"

#include "errors.hpp"

namespace sht {

StarLift star_lift(const Hypergraph& graph) {
  if (graph.uniformity() != 2)
    fail(Errc::kUnsupportedUniformity,
         "star lift is only supported from graphs (k=2)");
  const uint32_t star = graph.vertex_count() + 1;
  std::vector<std::vector<uint32_t>> lifted_edges;
  lifted_edges.reserve(graph.edge_count());
  for (size_t i = 0; i < graph.edge_count(); ++i) {
    const auto e = graph.edge(i);
    lifted_edges.push_back({e[0], e[1], star});
  }
  // The star vertex gets the highest label, so source edges keep their
  // lexicographic order and edge i maps to lifted edge i.
  return {graph, Hypergraph(3, star, lifted_edges), star};
}

EdgeSubset pull_back(const StarLift& lift, const EdgeSubset& lifted_tree) {
  if (!lift.lifted.is_spanning_hypertree(lifted_tree))
    fail(Errc::kNotAHypertree,
         "subset is not a spanning hypertree of the lift");
  return lifted_tree;  // index correspondence is the identity
}

Decision decide_perfect_matching(const Hypergraph& graph,
                                 const DecideOptions& opts) {
  return decide(star_lift(graph).lifted, opts);
}

}  // namespace sht
