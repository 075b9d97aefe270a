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
#include <numeric>
#include <vector>

namespace sht {

class DisjointSet {
 public:
  explicit DisjointSet(size_t n) : parent_(n), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  size_t find(size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// True if the roots were distinct (a merge happened).
  bool unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    --components_;
    return true;
  }

  size_t components() const { return components_; }

 private:
  std::vector<size_t> parent_;
  size_t components_;
};

}  // namespace sht
