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

#include <stdexcept>
#include <string>

namespace sht {

enum class Errc {
  kNotPrime,
  kEvenModulus,
  kZeroInverse,
  kContextMismatch,
  kRangeExceeded,
  kSyntaxError,
  kVertexOutOfRange,
  kRepeatedVertexInEdge,
  kUniformityMismatch,
  kUnsupportedUniformity,
  kIndexOutOfRange,
  kNotSkew,
  kNotAHypertree,
  kNotAnNCycle,
  kTooLarge,
  kMissingWeight,
  kNonIntegerResult,
  kInfeasibleParameters,
  kInvalidInstance,
  kWitnessMismatch,
  kIoError,
  kInvalidArgument,
};

/// Library-wide exception; carries a stable error code for the C surface.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace sht
