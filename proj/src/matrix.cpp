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

#include "matrix.hpp"

#include <algorithm>

#include "digest.hpp"
#include "errors.hpp"

namespace sht {

using boost::multiprecision::cpp_int;

int levi_civita(uint32_t i, uint32_t j, uint32_t k) {
  if (i == j || j == k || i == k) return 0;
  int sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  if (j > k) {
    std::swap(j, k);
    sign = -sign;
  }
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  return sign;
}

WeightAssignment::WeightAssignment(const Hypergraph& h, const FieldCtx& ctx)
    : values_(h.edge_count(), 0), q_(ctx.modulus()) {}

WeightAssignment WeightAssignment::all_ones(const Hypergraph& h,
                                            const FieldCtx& ctx) {
  WeightAssignment w(h, ctx);
  std::fill(w.values_.begin(), w.values_.end(), ctx.one().value);
  return w;
}

WeightAssignment WeightAssignment::sample(const Hypergraph& h,
                                          const FieldCtx& ctx, Rng& rng) {
  WeightAssignment w(h, ctx);
  for (auto& v : w.values_) v = rng.uniform_below(ctx.modulus());
  return w;
}

void WeightAssignment::set(const Hypergraph& h,
                           std::span<const uint32_t> edge_verts, FieldElem w) {
  const auto idx = h.edge_index(edge_verts);
  if (!idx)
    fail(Errc::kContextMismatch,
         "weight keyed by an edge the hypergraph does not contain");
  set_by_index(*idx, w);
}

void WeightAssignment::set_by_index(size_t edge_index, FieldElem w) {
  if (edge_index >= values_.size())
    fail(Errc::kIndexOutOfRange, "edge index out of range");
  if (w.modulus != q_)
    fail(Errc::kContextMismatch, "weight from a different field");
  values_[edge_index] = w.value;
}

FieldElem WeightAssignment::at(size_t edge_index) const {
  if (edge_index >= values_.size())
    fail(Errc::kMissingWeight, "no weight for edge index " +
                                   std::to_string(edge_index));
  return {values_[edge_index], q_};
}

SquareMatrix::SquareMatrix(const FieldCtx& ctx, uint32_t dim)
    : ctx_(ctx), dim_(dim), a_(size_t(dim) * dim, 0) {}

void SquareMatrix::set(uint32_t row, uint32_t col, FieldElem v) {
  if (row >= dim_ || col >= dim_)
    fail(Errc::kIndexOutOfRange, "matrix index out of range");
  if (v.modulus != ctx_.modulus())
    fail(Errc::kContextMismatch, "element from a different field");
  raw(row, col) = v.value;
}

SquareMatrix SquareMatrix::principal_minor(uint32_t i0) const {
  if (i0 < 1 || i0 > dim_)
    fail(Errc::kIndexOutOfRange,
         "minor index " + std::to_string(i0) + " outside [1, " +
             std::to_string(dim_) + "]");
  SquareMatrix m(ctx_, dim_ - 1);
  const uint32_t skip = i0 - 1;
  for (uint32_t r = 0, mr = 0; r < dim_; ++r) {
    if (r == skip) continue;
    for (uint32_t c = 0, mc = 0; c < dim_; ++c) {
      if (c == skip) continue;
      m.raw(mr, mc) = raw(r, c);
      ++mc;
    }
    ++mr;
  }
  return m;
}

FieldElem SquareMatrix::determinant() const {
  std::vector<uint64_t> a(a_);
  const uint32_t d = dim_;
  auto at = [&](uint32_t r, uint32_t c) -> uint64_t& {
    return a[size_t(r) * d + c];
  };
  bool negate = false;
  uint64_t det = 1 % ctx_.modulus();
  for (uint32_t col = 0; col < d; ++col) {
    uint32_t pivot = col;
    while (pivot < d && at(pivot, col) == 0) ++pivot;
    if (pivot == d) return ctx_.zero();
    if (pivot != col) {
      for (uint32_t c = 0; c < d; ++c) std::swap(at(pivot, c), at(col, c));
      negate = !negate;
    }
    const uint64_t p = at(col, col);
    det = ctx_.mul_raw(det, p);
    const uint64_t pinv = ctx_.inv_raw(p);
    for (uint32_t r = col + 1; r < d; ++r) {
      const uint64_t f = ctx_.mul_raw(at(r, col), pinv);
      if (f == 0) continue;
      for (uint32_t c = col; c < d; ++c)
        at(r, c) = ctx_.sub_raw(at(r, c), ctx_.mul_raw(f, at(col, c)));
    }
  }
  return {negate ? ctx_.neg_raw(det) : det, ctx_.modulus()};
}

SkewMatrix::SkewMatrix(const FieldCtx& ctx, uint32_t dim)
    : SquareMatrix(ctx, dim) {}

SkewMatrix SkewMatrix::from_rows(
    const FieldCtx& ctx, const std::vector<std::vector<uint64_t>>& rows) {
  const uint32_t d = static_cast<uint32_t>(rows.size());
  SkewMatrix m(ctx, d);
  for (uint32_t r = 0; r < d; ++r) {
    if (rows[r].size() != d)
      fail(Errc::kInvalidArgument, "ragged matrix rows");
    for (uint32_t c = 0; c < d; ++c) m.raw(r, c) = rows[r][c] % ctx.modulus();
  }
  for (uint32_t r = 0; r < d; ++r) {
    if (m.raw(r, r) != 0)
      fail(Errc::kNotSkew, "nonzero diagonal entry");
    for (uint32_t c = r + 1; c < d; ++c)
      if (m.raw(c, r) != ctx.neg_raw(m.raw(r, c)))
        fail(Errc::kNotSkew, "entries (r,c) and (c,r) are not negatives");
  }
  return m;
}

void SkewMatrix::set_pair(uint32_t row, uint32_t col, FieldElem v) {
  if (row >= dim_ || col >= dim_)
    fail(Errc::kIndexOutOfRange, "matrix index out of range");
  if (v.modulus != ctx_.modulus())
    fail(Errc::kContextMismatch, "element from a different field");
  if (row == col) {
    if (v.value != 0) fail(Errc::kNotSkew, "nonzero diagonal entry");
    return;
  }
  raw(row, col) = v.value;
  raw(col, row) = ctx_.neg_raw(v.value);
}

void SkewMatrix::add_pair_raw(uint32_t row, uint32_t col, uint64_t v) {
  raw(row, col) = ctx_.add_raw(raw(row, col), v);
  raw(col, row) = ctx_.sub_raw(raw(col, row), v);
}

SkewMatrix SkewMatrix::principal_minor(uint32_t i0) const {
  SquareMatrix base = SquareMatrix::principal_minor(i0);
  SkewMatrix m(ctx_, base.dim());
  for (uint32_t r = 0; r < base.dim(); ++r)
    for (uint32_t c = 0; c < base.dim(); ++c) m.raw(r, c) = base.raw(r, c);
  return m;
}

FieldElem SkewMatrix::pfaffian() const {
  for (uint32_t r = 0; r < dim_; ++r) {
    if (raw(r, r) != 0) fail(Errc::kNotSkew, "nonzero diagonal entry");
    for (uint32_t c = r + 1; c < dim_; ++c)
      if (raw(c, r) != ctx_.neg_raw(raw(r, c)))
        fail(Errc::kNotSkew, "entries (r,c) and (c,r) are not negatives");
  }
  if (dim_ % 2 != 0) return ctx_.zero();  // no perfect pairings
  std::vector<uint64_t> a(a_);
  const uint32_t d = dim_;
  auto at = [&](uint32_t r, uint32_t c) -> uint64_t& {
    return a[size_t(r) * d + c];
  };
  bool negate = false;
  uint64_t pf = 1 % ctx_.modulus();
  for (uint32_t p = 0; p < d; p += 2) {
    uint32_t pivot = p + 1;
    while (pivot < d && at(p, pivot) == 0) ++pivot;
    if (pivot == d) return ctx_.zero();
    if (pivot != p + 1) {
      // Swapping row and column pivot <-> p+1 is a congruence by a
      // transposition; it multiplies the Pfaffian by -1.
      for (uint32_t c = 0; c < d; ++c) std::swap(at(pivot, c), at(p + 1, c));
      for (uint32_t r = 0; r < d; ++r) std::swap(at(r, pivot), at(r, p + 1));
      negate = !negate;
    }
    const uint64_t block = at(p, p + 1);
    pf = ctx_.mul_raw(pf, block);
    const uint64_t binv = ctx_.inv_raw(block);
    // Schur update of the trailing submatrix:
    //   a[k][l] -= (a[p][k] * a[p+1][l] - a[p][l] * a[p+1][k]) / block
    for (uint32_t k = p + 2; k < d; ++k) {
      const uint64_t fk = ctx_.mul_raw(at(p, k), binv);
      const uint64_t gk = ctx_.mul_raw(at(p + 1, k), binv);
      if (fk == 0 && gk == 0) continue;
      for (uint32_t l = k + 1; l < d; ++l) {
        const uint64_t cross = ctx_.sub_raw(ctx_.mul_raw(fk, at(p + 1, l)),
                                            ctx_.mul_raw(at(p, l), gk));
        const uint64_t v = ctx_.sub_raw(at(k, l), cross);
        at(k, l) = v;
        at(l, k) = ctx_.neg_raw(v);
      }
    }
  }
  return {negate ? ctx_.neg_raw(pf) : pf, ctx_.modulus()};
}

namespace {

void check_weights(const Hypergraph& h, const WeightAssignment& w,
                   const FieldCtx& ctx) {
  if (w.size() != h.edge_count())
    fail(Errc::kContextMismatch,
         "weight assignment covers " + std::to_string(w.size()) +
             " edges, hypergraph has " + std::to_string(h.edge_count()));
  if (w.modulus() != ctx.modulus())
    fail(Errc::kContextMismatch, "weights from a different field");
}

// Signed contributions of edge {a<b<c} with weight w to the three entries
// above the diagonal: levi_civita(a,b,c) = +1, (a,c,b) = -1, (b,c,a) = +1.
inline void add_edge_contribution(SkewMatrix& m, uint32_t a, uint32_t b,
                                  uint32_t c, uint64_t w,
                                  const FieldCtx& ctx) {
  m.add_pair_raw(a - 1, b - 1, w);
  m.add_pair_raw(a - 1, c - 1, ctx.neg_raw(w));
  m.add_pair_raw(b - 1, c - 1, w);
}

}  // namespace

SkewMatrix skew_adjacency(const Hypergraph& h, const WeightAssignment& w,
                          const FieldCtx& ctx) {
  if (h.uniformity() != 3)
    fail(Errc::kUnsupportedUniformity, "skew adjacency needs a 3-uniform hypergraph");
  check_weights(h, w, ctx);
  SkewMatrix m(ctx, h.vertex_count());
  for (size_t i = 0; i < h.edge_count(); ++i) {
    const auto e = h.edge(i);
    add_edge_contribution(m, e[0], e[1], e[2], w.raw(i), ctx);
  }
  return m;
}

SkewMatrix skew_adjacency_sampled(const Hypergraph& h, const FieldCtx& ctx,
                                  Rng& rng, uint64_t* weights_digest) {
  if (h.uniformity() != 3)
    fail(Errc::kUnsupportedUniformity, "skew adjacency needs a 3-uniform hypergraph");
  SkewMatrix m(ctx, h.vertex_count());
  Digest dg;
  for (size_t i = 0; i < h.edge_count(); ++i) {
    const auto e = h.edge(i);
    const uint64_t w = rng.uniform_below(ctx.modulus());
    dg.u32(e[0]).u32(e[1]).u32(e[2]).u64(w);
    add_edge_contribution(m, e[0], e[1], e[2], w, ctx);
  }
  if (weights_digest) *weights_digest = dg.value();
  return m;
}

SquareMatrix laplacian(const Hypergraph& g, const WeightAssignment& w,
                       const FieldCtx& ctx) {
  if (g.uniformity() != 2)
    fail(Errc::kUnsupportedUniformity, "Laplacian needs a graph (k=2)");
  check_weights(g, w, ctx);
  SquareMatrix m(ctx, g.vertex_count());
  for (size_t i = 0; i < g.edge_count(); ++i) {
    const auto e = g.edge(i);
    const uint32_t a = e[0] - 1, b = e[1] - 1;
    const uint64_t v = w.raw(i);
    m.raw(a, b) = ctx.sub_raw(m.raw(a, b), v);
    m.raw(b, a) = ctx.sub_raw(m.raw(b, a), v);
    m.raw(a, a) = ctx.add_raw(m.raw(a, a), v);
    m.raw(b, b) = ctx.add_raw(m.raw(b, b), v);
  }
  return m;
}

cpp_int spanning_tree_count(const Hypergraph& g) {
  if (g.uniformity() != 2)
    fail(Errc::kUnsupportedUniformity, "spanning_tree_count needs a graph (k=2)");
  const uint32_t n = g.vertex_count();
  if (n == 1) return 1;
  // Integer Laplacian with row/column 1 removed, unit weights.
  const uint32_t d = n - 1;
  std::vector<cpp_int> a(size_t(d) * d, 0);
  auto at = [&](uint32_t r, uint32_t c) -> cpp_int& {
    return a[size_t(r) * d + c];
  };
  for (size_t i = 0; i < g.edge_count(); ++i) {
    const auto e = g.edge(i);
    const uint32_t u = e[0] - 1, v = e[1] - 1;
    if (u >= 1 && v >= 1) {
      at(u - 1, v - 1) -= 1;
      at(v - 1, u - 1) -= 1;
    }
    if (u >= 1) at(u - 1, u - 1) += 1;
    if (v >= 1) at(v - 1, v - 1) += 1;
  }
  // Fraction-free Bareiss; divisions stay exact, final pivot is det.
  cpp_int prev = 1;
  int sign = 1;
  for (uint32_t col = 0; col < d; ++col) {
    uint32_t pivot = col;
    while (pivot < d && at(pivot, col) == 0) ++pivot;
    if (pivot == d) return 0;
    if (pivot != col) {
      for (uint32_t c = 0; c < d; ++c) std::swap(at(pivot, c), at(col, c));
      sign = -sign;
    }
    for (uint32_t r = col + 1; r < d; ++r) {
      for (uint32_t c = col + 1; c < d; ++c)
        at(r, c) = (at(r, c) * at(col, col) - at(r, col) * at(col, c)) / prev;
      at(r, col) = 0;
    }
    prev = at(col, col);
  }
  return sign > 0 ? prev : -prev;
}

}  // namespace sht
