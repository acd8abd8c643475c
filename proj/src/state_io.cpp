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

#include "aqed/state_io.hpp"

#include <cmath>

namespace aqed {

nlohmann::json complex_to_json(const CVector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : v) arr.push_back({c.real(), c.imag()});
  return arr;
}

CVector complex_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidArgument("coefficients must be an array");
  CVector out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (e.is_number()) {
      out.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      out.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      throw InvalidArgument("coefficient must be a number or a [re, im] pair");
    }
    if (!std::isfinite(out.back().real()) || !std::isfinite(out.back().imag())) {
      throw InvalidArgument("coefficient is not finite");
    }
  }
  return out;
}

nlohmann::json state_to_json(const CVector& coeffs) {
  nlohmann::json j;
  j["n"] = log2_exact(coeffs.size());
  j["coeffs"] = complex_to_json(coeffs);
  return j;
}

CVector state_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw InvalidArgument("state JSON needs 'coeffs'");
  CVector coeffs = complex_from_json(j.at("coeffs"));
  if (!is_power_of_two(coeffs.size())) {
    throw InvalidArgument("state length " + std::to_string(coeffs.size()) + " is not a power of two");
  }
  if (j.contains("n")) {
    if (!j.at("n").is_number_integer()) throw InvalidArgument("'n' must be an integer");
    const int n = j.at("n").get<int>();
    if (n < 0 || n > 30 || (std::size_t{1} << n) != coeffs.size()) {
      throw InvalidArgument("'n' does not match the number of coefficients");
    }
  }
  return coeffs;
}

}  // namespace aqed
