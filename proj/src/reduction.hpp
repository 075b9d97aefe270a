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

#include "decider.hpp"
#include "hypergraph.hpp"

namespace sht {

/// Star-vertex lift of a graph: a fresh vertex N+1 is added to every edge,
/// turning perfect matchings of the source into spanning hypertrees of the
/// 3-uniform lift (and vice versa). Source edge i is lifted edge i.
struct StarLift {
  Hypergraph source;
  Hypergraph lifted;
  uint32_t star;  // always source N + 1
};

/// Only the k=2 -> k=3 lift is supported; larger uniformities would produce
/// instances outside the decider's domain.
StarLift star_lift(const Hypergraph& graph);

/// Maps a spanning hypertree of the lift back to the perfect matching of
/// the source it came from (delete the star vertex from each edge). Throws
/// NotAHypertree if the subset is not a spanning hypertree of the lift.
EdgeSubset pull_back(const StarLift& lift, const EdgeSubset& lifted_tree);

/// One-sided-error perfect-matching decision: YES is certified, NO_PROBABLE
/// is wrong with probability at most 2^-epsilon_exp.
Decision decide_perfect_matching(const Hypergraph& graph,
                                 const DecideOptions& opts);

}  // namespace sht
