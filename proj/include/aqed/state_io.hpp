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

// JSON state files: {"n": int, "coeffs": [[re, im], ...]} in ascending
// basis order. Used for both spectral and spatial amplitude vectors.

#include <iosfwd>

#include "aqed/common.hpp"
#include "json.hpp"

namespace aqed {

nlohmann::json complex_to_json(const CVector& v);
CVector complex_from_json(const nlohmann::json& j);

nlohmann::json state_to_json(const CVector& coeffs);

/// Throws InvalidArgument when the length is not 2^n or entries are malformed.
CVector state_from_json(const nlohmann::json& j);

}  // namespace aqed
