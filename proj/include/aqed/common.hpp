// Copyright 2026 The AQED Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace aqed {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Raised when a caller violates an operation's preconditions (bad index,
/// bad dimension, malformed input).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when signals sampled under different configurations are combined.
class ConfigMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Raised when an engine cannot execute an operation (unsupported gate or
/// engine combination).
class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

/// log2 of a power of two. Throws if `v` is not one.
int log2_exact(std::size_t v);

/// max_i |a_i - b_i|
double max_abs_diff(const CVector& a, const CVector& b);

/// max_i |a_i - b_i| / max_i |b_i|; the vector-infinity-norm relative error
/// used by every "relative" tolerance in this library. Falls back to the
/// absolute difference when `b` is identically zero.
double max_rel_diff(const CVector& a, const CVector& b);

}  // namespace aqed
