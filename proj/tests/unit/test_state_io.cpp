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

#include <gtest/gtest.h>

#include <limits>

#include "aqed/state_io.hpp"
#include "support/generators.hpp"

namespace aqed {
namespace {

using nlohmann::json;

TEST(StateIo, RoundTripIsExact) {
  testing::Rng rng(5);
  for (int n = 0; n <= 5; ++n) {
    const CVector v = testing::random_state(rng, n);
    const json j = state_to_json(v);
    EXPECT_EQ(j["n"], n);
    EXPECT_EQ(state_from_json(json::parse(j.dump())), v);
  }
}

TEST(StateIo, Layout) {
  const json j = state_to_json(CVector{{1.0, -2.0}, {0.5, 0.0}});
  EXPECT_EQ(j, json::parse(R"({"n": 1, "coeffs": [[1.0, -2.0], [0.5, 0.0]]})"));
}

TEST(StateIo, AcceptsRealNumbersAndMissingN) {
  const CVector v = state_from_json(json::parse(R"({"coeffs": [1, [0, 1]]})"));
  EXPECT_EQ(v, (CVector{{1.0, 0.0}, {0.0, 1.0}}));
}

TEST(StateIo, RejectsMalformedStates) {
  for (const char* text : {R"({"coeffs": [1, 2, 3]})", R"({"n": 2, "coeffs": [1, 2]})",
                           R"({"coeffs": [[1, 2, 3], 0]})", R"({"coeffs": ["a", 0]})",
                           R"({"coeffs": []})", R"([1, 0])", R"({"n": 1})"}) {
    EXPECT_THROW(state_from_json(json::parse(text)), InvalidArgument) << text;
  }
  json inf = state_to_json(CVector{1.0, 0.0});
  inf["coeffs"][0][0] = std::numeric_limits<double>::infinity();
  EXPECT_THROW(state_from_json(inf), InvalidArgument);
}

}  // namespace
}  // namespace aqed
