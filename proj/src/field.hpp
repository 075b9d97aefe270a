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

#include "errors.hpp"
#include "rng.hpp"

namespace sht {

/// Largest admissible modulus: q must fit a 63-bit word with headroom for
/// the prime scan.
inline constexpr uint64_t kMaxModulusExclusive = 1ULL << 62;

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

/// Least prime >= x, forced odd: x <= 2 yields 3. Throws RangeExceeded for
/// x >= 2^62.
uint64_t smallest_prime_geq(uint64_t x);

/// Residue bound to the field it lives in. The modulus tag lets mixed-field
/// arithmetic be rejected instead of silently wrapping.
struct FieldElem {
  uint64_t value = 0;
  uint64_t modulus = 0;

  bool operator==(const FieldElem&) const = default;
};

/// GF(q) for an odd prime q < 2^62. Construction validates primality; all
/// element operations keep canonical representatives in [0, q).
class FieldCtx {
 public:
  explicit FieldCtx(uint64_t q);

  uint64_t modulus() const { return q_; }

  FieldElem from(uint64_t v) const { return {v % q_, q_}; }
  FieldElem from_signed(int64_t v) const;
  FieldElem zero() const { return {0, q_}; }
  FieldElem one() const { return {1 % q_, q_}; }

  FieldElem add(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    return {add_raw(a.value, b.value), q_};
  }
  FieldElem sub(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    return {sub_raw(a.value, b.value), q_};
  }
  FieldElem mul(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    return {mul_raw(a.value, b.value), q_};
  }
  FieldElem neg(FieldElem a) const {
    check(a);
    return {neg_raw(a.value), q_};
  }
  FieldElem inv(FieldElem a) const {
    check(a);
    return {inv_raw(a.value), q_};
  }
  bool is_zero(FieldElem a) const {
    check(a);
    return a.value == 0;
  }

  /// Uniform over all q residues, zero included.
  FieldElem sample(Rng& rng) const { return {rng.uniform_below(q_), q_}; }

  // Raw kernels on canonical residues; the elimination loops use these to
  // stay off the per-element tag checks.
  uint64_t add_raw(uint64_t a, uint64_t b) const {
    const uint64_t s = a + b;
    return s >= q_ || s < a ? s - q_ : s;
  }
  uint64_t sub_raw(uint64_t a, uint64_t b) const {
    return a >= b ? a - b : a + q_ - b;
  }
  uint64_t mul_raw(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % q_);
  }
  uint64_t neg_raw(uint64_t a) const { return a == 0 ? 0 : q_ - a; }
  uint64_t inv_raw(uint64_t a) const;
  uint64_t pow_raw(uint64_t base, uint64_t exp) const;

  bool operator==(const FieldCtx& o) const { return q_ == o.q_; }

 private:
  void check(const FieldElem& e) const {
    if (e.modulus != q_)
      fail(Errc::kContextMismatch, "field element belongs to GF(" +
                                       std::to_string(e.modulus) +
                                       "), expected GF(" +
                                       std::to_string(q_) + ")");
  }

  uint64_t q_;
};

}  // namespace sht
