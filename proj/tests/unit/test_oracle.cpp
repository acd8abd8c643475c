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

#include <array>
#include <cmath>

#include "aqed/oracle.hpp"
#include "support/generators.hpp"

namespace aqed::oracle {
namespace {

using aqed::testing::Rng;

TEST(Oracle, XOnZero) {
  const std::array<int, 1> t{0};
  const auto out = oracle_apply(basis_state(1, 0), x_n(1), t);
  EXPECT_EQ(out.amps, (CVector{0.0, 1.0}));
  EXPECT_EQ(out.scale, 1.0);
}

TEST(Oracle, TracksUnnormalizedScale) {
  const std::array<int, 1> t{0};
  const auto out = oracle_apply(basis_state(1, 0), hadamard_n(1), t);
  EXPECT_DOUBLE_EQ(out.scale, std::sqrt(2.0));
  EXPECT_NEAR(out.norm(), 1.0, 1e-15);
}

TEST(Oracle, DimensionErrors) {
  const std::array<int, 1> t{2};
  const std::array<int, 1> t0{0};
  EXPECT_THROW(oracle_apply(basis_state(2, 0), x_n(1), t), InvalidArgument);
  EXPECT_THROW(oracle_apply(basis_state(2, 0), x_n(2), t0), InvalidArgument);
  EXPECT_THROW(basis_state(2, 4), InvalidArgument);
  EXPECT_THROW(oracle_run(build_qft(3), basis_state(2, 0)), InvalidArgument);
}

TEST(Oracle, TextbookGatesAgreeWithLibrary) {
  Rng rng(81);
  for (int trial = 0; trial < 50; ++trial) {
    const Circuit c = aqed::testing::random_circuit(rng, 4, 1);
    const Operation& op = c.ops[0];
    const OracleGate g = oracle_gate(op);
    const BoundGate b = bind_operation(op, true);
    EXPECT_EQ(g.qubits, b.qubits);
    ASSERT_LT(max_abs_diff(g.matrix, b.matrix), 1e-15);
  }
  const Operation h3{GateKind::H, 0, {}, {0, 2, 1}};
  EXPECT_LT(max_abs_diff(oracle_gate(h3).matrix, hadamard_n(3, true)), 1e-15);
  const Operation rev{GateKind::SWAPREV, 0, {}, {0, 1, 2, 3}};
  EXPECT_EQ(max_abs_diff(oracle_gate(rev).matrix, reversal_permutation(4)), 0.0);
}

TEST(Oracle, NormPreservedByNormalizedGates) {
  Rng rng(82);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = aqed::testing::uniform_int(rng, 1, 5);
    StateVector v{aqed::testing::random_state(rng, n), 1.0};
    const double before = v.norm();
    const Circuit c = aqed::testing::random_circuit(rng, n, 15);
    const auto out = oracle_run(c, v);
    EXPECT_DOUBLE_EQ(out.scale, 1.0);
    ASSERT_NEAR(out.norm(), before, 1e-12);
  }
}

TEST(Oracle, GroverSixQubitsSixIterations) {
  const auto out = oracle_run(build_grover({6, 0, 6}), basis_state(6, 0));
  EXPECT_NEAR(std::norm(out.amps[0]), 0.9965856807867991, 1e-12);
}

TEST(Oracle, QftOfZeroIsUniform) {
  const auto out = oracle_run(build_qft(6), basis_state(6, 0));
  for (const auto& a : out.amps) ASSERT_LT(std::abs(a - 0.125), 1e-12);
}

TEST(ClosedForm, Examples) {
  EXPECT_NEAR(oracle_grover_probability(2, 0, 1), 1.0, 1e-15);
  EXPECT_NEAR(oracle_grover_probability(6, 0, 1), 0.13482666015625, 1e-14);
  EXPECT_DOUBLE_EQ(oracle_grover_probability(6, 0, 0), 1.0 / 64.0);
  EXPECT_NEAR(oracle_grover_probability(6, 0, 6), 0.9965856807867991, 1e-14);
  EXPECT_NEAR(oracle_grover_probability(1, 1, 1), 0.5, 1e-15);
  EXPECT_NEAR(oracle_grover_probability(3, 5, 2), 0.9453125, 1e-14);
  EXPECT_THROW(oracle_grover_probability(0, 0, 1), InvalidArgument);
  EXPECT_THROW(oracle_grover_probability(2, 4, 1), InvalidArgument);
}

TEST(ClosedForm, AgreesWithSimulationForEveryTarget) {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); t += 1 + (n > 4 ? 7 : 0)) {
      for (int k = 1; k <= 10; k += 3) {
        const auto out = oracle_run(build_grover({n, t, k}), basis_state(n, 0));
        ASSERT_NEAR(std::norm(out.amps[t]), oracle_grover_probability(n, t, k), 1e-10);
      }
    }
  }
}

}  // namespace
}  // namespace aqed::oracle
