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
#include "rng.hpp"

namespace sht {

/// Sign of the index triple: 0 when any two coincide, +1 for even
/// permutations of ascending order, -1 for odd (the totally antisymmetric
/// Levi-Civita tensor on three indices).
int levi_civita(uint32_t i, uint32_t j, uint32_t k);

/// One field value per edge of a fixed hypergraph, addressed by edge index.
/// Edges absent from the hypergraph implicitly carry weight zero.
class WeightAssignment {
 public:
  WeightAssignment(const Hypergraph& h, const FieldCtx& ctx);

  static WeightAssignment all_ones(const Hypergraph& h, const FieldCtx& ctx);
  static WeightAssignment sample(const Hypergraph& h, const FieldCtx& ctx,
                                 Rng& rng);

  /// Keyed by ascending vertex tuple; rejects edges the hypergraph does not
  /// own (ContextMismatch).
  void set(const Hypergraph& h, std::span<const uint32_t> edge_verts,
           FieldElem w);
  void set_by_index(size_t edge_index, FieldElem w);

  FieldElem at(size_t edge_index) const;
  uint64_t raw(size_t edge_index) const { return values_[edge_index]; }
  size_t size() const { return values_.size(); }
  uint64_t modulus() const { return q_; }

 private:
  std::vector<uint64_t> values_;
  uint64_t q_;
};

class SkewMatrix;

/// Dense square matrix over GF(q), no structural constraint.
class SquareMatrix {
 public:
  SquareMatrix(const FieldCtx& ctx, uint32_t dim);

  uint32_t dim() const { return dim_; }
  const FieldCtx& field() const { return ctx_; }

  FieldElem at(uint32_t row, uint32_t col) const {
    return {raw(row, col), ctx_.modulus()};
  }
  void set(uint32_t row, uint32_t col, FieldElem v);

  /// Row and column i0 removed; i0 is 1-based.
  SquareMatrix principal_minor(uint32_t i0) const;

  /// Exact determinant by Gaussian elimination: first-nonzero pivots, row
  /// swaps flip the accumulated sign. The 0x0 matrix has determinant 1.
  FieldElem determinant() const;

  uint64_t raw(uint32_t row, uint32_t col) const {
    return a_[size_t(row) * dim_ + col];
  }
  uint64_t& raw(uint32_t row, uint32_t col) {
    return a_[size_t(row) * dim_ + col];
  }

 protected:
  FieldCtx ctx_;
  uint32_t dim_;
  std::vector<uint64_t> a_;
};

/// Square matrix constrained to M^T = -M (zero diagonal). Writes go through
/// set_pair, which maintains both triangles.
class SkewMatrix : public SquareMatrix {
 public:
  SkewMatrix(const FieldCtx& ctx, uint32_t dim);

  /// Validating constructor from raw residues (row-major); throws NotSkew.
  static SkewMatrix from_rows(const FieldCtx& ctx,
                              const std::vector<std::vector<uint64_t>>& rows);

  /// Sets (row,col) = v and (col,row) = -v; row == col requires v = 0.
  void set_pair(uint32_t row, uint32_t col, FieldElem v);
  void add_pair_raw(uint32_t row, uint32_t col, uint64_t v);

  SkewMatrix principal_minor(uint32_t i0) const;

  /// Exact Pfaffian by congruence elimination (O(dim^3)); odd dimension
  /// gives 0. Satisfies pfaffian()^2 == determinant().
  FieldElem pfaffian() const;
};

/// The N x N skew matrix of a weighted 3-uniform hypergraph: entry (i,j)
/// sums, over edges A containing i and j with third vertex m, the signed
/// weight levi_civita(i,j,m) * w_A.
SkewMatrix skew_adjacency(const Hypergraph& h, const WeightAssignment& w,
                          const FieldCtx& ctx);

/// Same matrix with weights drawn i.i.d. uniform from the field in edge
/// order, without materializing the weight vector. Optionally reports the
/// FNV digest of the (edge, residue) stream.
SkewMatrix skew_adjacency_sampled(const Hypergraph& h, const FieldCtx& ctx,
                                  Rng& rng, uint64_t* weights_digest);

/// Weighted graph Laplacian: off-diagonal -w_ij, diagonal row sums.
SquareMatrix laplacian(const Hypergraph& g, const WeightAssignment& w,
                       const FieldCtx& ctx);

/// Exact number of spanning trees of a graph (k=2), via fraction-free
/// Bareiss elimination of the integer Laplacian minor.
boost::multiprecision::cpp_int spanning_tree_count(const Hypergraph& g);

}  // namespace sht
