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

#include "aqed/common.hpp"

#include <algorithm>
#include <cmath>

namespace aqed {

int log2_exact(std::size_t v) {
  if (!is_power_of_two(v)) {
    throw InvalidArgument("length " + std::to_string(v) + " is not a power of two");
  }
  int n = 0;
  while ((std::size_t{1} << n) < v) ++n;
  return n;
}

double max_abs_diff(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("vector length mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double max_rel_diff(const CVector& a, const CVector& b) {
  double diff = max_abs_diff(a, b);
  double ref = 0.0;
  for (const auto& v : b) ref = std::max(ref, std::abs(v));
  return ref > 0.0 ? diff / ref : diff;
}

}  // namespace aqed
