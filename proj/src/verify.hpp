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
#include <string>
#include <vector>

#include "field.hpp"
#include "hypergraph.hpp"
#include "oracle.hpp"
#include "rng.hpp"

namespace sht {

/// Uniform random k-uniform hypergraph: `edges` distinct edges sampled from
/// the complete edge pool on `vertices` labels.
Hypergraph random_uniform_hypergraph(uint32_t uniformity, uint32_t vertices,
                                     uint32_t edges, Rng& rng);

struct PropertyResult {
  std::string name;
  uint64_t checks = 0;
  uint64_t failures = 0;

  bool pass() const { return failures == 0; }
};

struct VerifyOptions {
  uint32_t max_vertices = 9;  // odd sizes 3..max are exercised
  uint64_t seed = 1;
  uint32_t weight_draws = 100;
};

/// Cross-checks of the algebraic identities the decider rests on, at desk
/// scale against the exact enumeration oracle:
///   - pfaffian_hypertree_at_points: signed Pfaffian of every principal
///     minor equals the evaluated signed hypertree polynomial
///   - sign_agreement: both sign definitions agree; exterior sign is
///     root-independent
///   - sign_edge_order_invariance: conjugation sign survives shuffles
///   - minor_independence: the signed minor Pfaffian is the same for all i0
///   - pf_squared_equals_det: on random skew matrices
std::vector<PropertyResult> run_verification(const VerifyOptions& opts);

/// Number of (weight draw, root) pairs where the signed minor Pfaffian and
/// the evaluated polynomial disagree; 0 for a correct polynomial. Exposed
/// so tests can prove the comparison detects corrupted inputs.
uint64_t count_pfaffian_mismatches(const Hypergraph& h,
                                   const SignedHypertreePoly& poly,
                                   const FieldCtx& ctx, uint32_t weight_draws,
                                   uint64_t seed);

}  // namespace sht
