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

#include "hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "digest.hpp"
#include "disjoint_set.hpp"
#include "errors.hpp"

namespace sht {

namespace {

void validate_uniformity(uint32_t k) {
  if (k != 2 && k != 3)
    fail(Errc::kUnsupportedUniformity,
         "uniformity " + std::to_string(k) + " not supported (k must be 2 or 3)");
}

}  // namespace

Hypergraph::Hypergraph(uint32_t uniformity, uint32_t vertex_count,
                       const std::vector<std::vector<uint32_t>>& edges)
    : k_(uniformity), n_(vertex_count) {
  validate_uniformity(k_);
  if (n_ < 1) fail(Errc::kInvalidArgument, "vertex count must be at least 1");

  std::vector<std::vector<uint32_t>> canon;
  canon.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.size() != k_)
      fail(Errc::kUniformityMismatch,
           "edge has " + std::to_string(e.size()) + " vertices, expected " +
               std::to_string(k_));
    std::vector<uint32_t> s(e);
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 1 || s[i] > n_)
        fail(Errc::kVertexOutOfRange,
             "vertex " + std::to_string(s[i]) + " outside [1, " +
                 std::to_string(n_) + "]");
      if (i > 0 && s[i] == s[i - 1])
        fail(Errc::kRepeatedVertexInEdge,
             "vertex " + std::to_string(s[i]) + " repeated within an edge");
    }
    canon.push_back(std::move(s));
  }
  std::sort(canon.begin(), canon.end());
  flat_.reserve(canon.size() * k_);
  for (size_t i = 0; i < canon.size(); ++i) {
    if (i > 0 && canon[i] == canon[i - 1]) {
      ++dups_;
      continue;
    }
    flat_.insert(flat_.end(), canon[i].begin(), canon[i].end());
  }
  digest_ = compute_digest();
}

Hypergraph::Hypergraph(CompleteTag, uint32_t uniformity, uint32_t vertex_count)
    : k_(uniformity), n_(vertex_count) {}

Hypergraph Hypergraph::complete(uint32_t vertex_count, uint32_t uniformity) {
  validate_uniformity(uniformity);
  if (vertex_count < uniformity)
    fail(Errc::kInvalidArgument, "complete hypergraph needs N >= k");
  Hypergraph h(CompleteTag{}, uniformity, vertex_count);
  // Generated directly in lexicographic order; no canonicalization pass.
  if (uniformity == 2) {
    h.flat_.reserve(size_t(vertex_count) * (vertex_count - 1));
    for (uint32_t a = 1; a <= vertex_count; ++a)
      for (uint32_t b = a + 1; b <= vertex_count; ++b) {
        h.flat_.push_back(a);
        h.flat_.push_back(b);
      }
  } else {
    h.flat_.reserve(size_t(vertex_count) * (vertex_count - 1) *
                    (vertex_count - 2) / 2);
    for (uint32_t a = 1; a <= vertex_count; ++a)
      for (uint32_t b = a + 1; b <= vertex_count; ++b)
        for (uint32_t c = b + 1; c <= vertex_count; ++c) {
          h.flat_.push_back(a);
          h.flat_.push_back(b);
          h.flat_.push_back(c);
        }
  }
  h.digest_ = h.compute_digest();
  return h;
}

Hypergraph Hypergraph::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool got_header = false;
  uint32_t k = 0, n = 0;
  size_t m = 0;
  std::vector<std::vector<uint32_t>> edges;

  auto syntax = [&](const std::string& what) {
    fail(Errc::kSyntaxError, "line " + std::to_string(lineno) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream toks(line);
    std::string tag;
    toks >> tag;
    if (!got_header) {
      if (tag != "shg") syntax("expected header 'shg <k> <N> <M>'");
      long long kv = -1, nv = -1, mv = -1;
      if (!(toks >> kv >> nv >> mv) || !(toks >> std::ws).eof())
        syntax("malformed header");
      if (kv != 2 && kv != 3)
        fail(Errc::kUniformityMismatch,
             "line " + std::to_string(lineno) + ": uniformity " +
                 std::to_string(kv) + " not supported (k must be 2 or 3)");
      if (nv < 1 || mv < 0) syntax("vertex/edge counts out of range");
      k = static_cast<uint32_t>(kv);
      n = static_cast<uint32_t>(nv);
      m = static_cast<size_t>(mv);
      got_header = true;
      continue;
    }
    if (tag != "e") syntax("expected edge line 'e v1 v2 ...'");
    if (edges.size() == m) syntax("more edge lines than declared");
    std::vector<uint32_t> verts;
    long long v;
    while (toks >> v) {
      if (v < 1 || v > n)
        fail(Errc::kVertexOutOfRange,
             "line " + std::to_string(lineno) + ": vertex " +
                 std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
      verts.push_back(static_cast<uint32_t>(v));
    }
    if (!toks.eof()) syntax("non-numeric vertex token");
    if (verts.size() != k)
      fail(Errc::kUniformityMismatch,
           "line " + std::to_string(lineno) + ": edge has " +
               std::to_string(verts.size()) + " vertices, expected " +
               std::to_string(k));
    std::sort(verts.begin(), verts.end());
    for (size_t i = 1; i < verts.size(); ++i)
      if (verts[i] == verts[i - 1])
        fail(Errc::kRepeatedVertexInEdge,
             "line " + std::to_string(lineno) + ": vertex " +
                 std::to_string(verts[i]) + " repeated within an edge");
    edges.push_back(std::move(verts));
  }
  ++lineno;
  if (!got_header) syntax("missing header");
  if (edges.size() != m) syntax("fewer edge lines than declared");
  return Hypergraph(k, n, edges);
}

Hypergraph Hypergraph::parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::kIoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::optional<size_t> Hypergraph::edge_index(
    std::span<const uint32_t> verts) const {
  if (verts.size() != k_) return std::nullopt;
  const size_t m = edge_count();
  size_t lo = 0, hi = m;
  while (lo < hi) {
    const size_t mid = (lo + hi) / 2;
    const uint32_t* e = flat_.data() + mid * k_;
    if (std::lexicographical_compare(e, e + k_, verts.data(),
                                     verts.data() + k_))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < m &&
      std::equal(verts.begin(), verts.end(), flat_.data() + lo * k_))
    return lo;
  return std::nullopt;
}

bool Hypergraph::is_connected() const {
  if (n_ == 1) return true;
  DisjointSet ds(n_);
  const size_t m = edge_count();
  for (size_t i = 0; i < m; ++i) {
    const auto e = edge(i);
    for (uint32_t j = 1; j < k_; ++j) ds.unite(e[0] - 1, e[j] - 1);
  }
  return ds.components() == 1;
}

bool Hypergraph::is_spanning_hypertree(const EdgeSubset& subset) const {
  const size_t m = edge_count();
  for (size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= m)
      fail(Errc::kInvalidArgument, "edge index out of range in subset");
    if (i > 0 && subset[i] <= subset[i - 1])
      fail(Errc::kInvalidArgument, "edge subset not strictly ascending");
  }
  const size_t s = subset.size();
  if (size_t(k_) * s != size_t(n_) + s - 1) return false;
  // Incidence graph: N vertex nodes followed by s edge nodes.
  DisjointSet ds(n_ + s);
  for (size_t i = 0; i < s; ++i) {
    const auto e = edge(subset[i]);
    for (uint32_t j = 0; j < k_; ++j) ds.unite(n_ + i, e[j] - 1);
  }
  return ds.components() == 1;
}

std::string Hypergraph::canonical_text() const {
  std::ostringstream out;
  const size_t m = edge_count();
  out << "shg " << k_ << ' ' << n_ << ' ' << m << '\n';
  for (size_t i = 0; i < m; ++i) {
    const auto e = edge(i);
    out << 'e';
    for (uint32_t v : e) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

uint64_t Hypergraph::compute_digest() const {
  Digest dg;
  dg.u32(k_).u32(n_).u64(edge_count());
  for (uint32_t v : flat_) dg.u32(v);  // endian-stable
  return dg.value();
}

}  // namespace sht
