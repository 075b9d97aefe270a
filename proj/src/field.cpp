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

#include "field.hpp"

namespace sht {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                     23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This witness set decides primality for every n < 3.3 * 10^24, which
  // covers the full 64-bit range.
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                     23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

uint64_t smallest_prime_geq(uint64_t x) {
  if (x >= kMaxModulusExclusive)
    fail(Errc::kRangeExceeded,
         "prime search bound " + std::to_string(x) + " exceeds 2^62");
  if (x <= 3) return 3;
  uint64_t c = x | 1;  // skip even candidates
  while (!is_prime_u64(c)) c += 2;
  return c;
}

FieldCtx::FieldCtx(uint64_t q) : q_(q) {
  if (q % 2 == 0)
    fail(Errc::kEvenModulus,
         "modulus " + std::to_string(q) + " is even; GF(2^h) is not supported");
  if (q >= kMaxModulusExclusive)
    fail(Errc::kRangeExceeded,
         "modulus " + std::to_string(q) + " exceeds 2^62");
  if (!is_prime_u64(q))
    fail(Errc::kNotPrime, "modulus " + std::to_string(q) + " is not prime");
}

FieldElem FieldCtx::from_signed(int64_t v) const {
  int64_t r = v % static_cast<int64_t>(q_);
  if (r < 0) r += static_cast<int64_t>(q_);
  return {static_cast<uint64_t>(r), q_};
}

uint64_t FieldCtx::inv_raw(uint64_t a) const {
  if (a == 0) fail(Errc::kZeroInverse, "inverse of zero");
  return pow_raw(a, q_ - 2);
}

uint64_t FieldCtx::pow_raw(uint64_t base, uint64_t exp) const {
  return powmod_u64(base, exp, q_);
}

}  // namespace sht
