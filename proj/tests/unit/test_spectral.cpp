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

#include "aqed/oracle.hpp"
#include "aqed/circuit.hpp"
#include "aqed/spectral.hpp"
#include "support/generators.hpp"

namespace aqed {
namespace {

using testing::Rng;

SampledSignal direct_tone(double h, const SignalConfig& cfg) {
  CVector v(cfg.samples_per_window());
  for (std::size_t k = 0; k < v.size(); ++k) {
    v[k] = std::exp(Complex(0.0, h * cfg.omega0() * cfg.time(k)));
  }
  return SampledSignal(cfg, std::move(v));
}

double max_sample_diff(const SampledSignal& a, const SampledSignal& b) {
  return max_abs_diff(a.samples(), b.samples());
}

// Reference gate action: spectral qubit i is bit i of the index, which the
// MSB-first oracle calls qubit n-1-i.
CVector oracle_gate_on(const CVector& v, const GateMatrix& u, int spectral_qubit) {
  const int n = log2_exact(v.size());
  const std::array<int, 1> target{n - 1 - spectral_qubit};
  return oracle::oracle_apply({v, 1.0}, u, target).amps;
}

TEST(EncodeSpectral, Examples) {
  const SignalConfig cfg;
  EXPECT_LT(max_sample_diff(encode_spectral({1.0, 0.0}, cfg).signal, direct_tone(1, cfg)), 1e-12);
  const CVector a{{0.1, 0.2}, {-0.3, 0.4}, {0.5, -0.6}, {0.7, 0.8}};
  // a0 e^{3j} + a1 e^{j} + a2 e^{-j} + a3 e^{-3j}
  SampledSignal eq = a[0] * direct_tone(3, cfg);
  eq += a[1] * direct_tone(1, cfg);
  eq += a[2] * direct_tone(-1, cfg);
  eq += a[3] * direct_tone(-3, cfg);
  const SpectralState s = encode_spectral(a, cfg);
  EXPECT_LT(max_sample_diff(s.signal, eq), 1e-12);
  EXPECT_EQ(s.n, 2);
  EXPECT_TRUE(s.complete());
  EXPECT_EQ(encode_spectral(CVector(8, 0.0), cfg).signal.max_abs(), 0.0);
  EXPECT_THROW(encode_spectral(CVector(3), cfg), InvalidArgument);
  EXPECT_THROW(encode_spectral(CVector(128), SignalConfig(1.0, 256)), InvalidArgument);
}

TEST(SupportHarmonics, SignedSums) {
  EXPECT_EQ(support_harmonics(0), (std::set<std::int64_t>{0}));
  EXPECT_EQ(support_harmonics(0b10), (std::set<std::int64_t>{-2, 2}));
  EXPECT_EQ(support_harmonics(0b11), (std::set<std::int64_t>{-3, -1, 1, 3}));
  EXPECT_EQ(support_harmonics(0b101), (std::set<std::int64_t>{-5, -3, 3, 5}));
}

TEST(ProjectParallel, Examples) {
  const SignalConfig cfg;
  const CVector a{{0.1, 0.2}, {-0.3, 0.4}, {0.5, -0.6}, {0.7, 0.8}};
  const auto s = encode_spectral(a, cfg);
  EXPECT_LT(std::abs(project_parallel(s, BasisIndex(0, 2)) - a[0]), 1e-12);
  EXPECT_LT(std::abs(project_parallel(encode_spectral({0.0, 1.0}, cfg), BasisIndex(1, 1)) - 1.0),
            1e-12);
  EXPECT_THROW(project_parallel(s, BasisIndex(0, 3)), InvalidArgument);
}

TEST(ProjectParallel, RecoversRandomSixQubitState) {
  Rng rng(31);
  const SignalConfig cfg;
  const CVector a = testing::random_state(rng, 6);
  const auto s = encode_spectral(a, cfg);
  for (std::uint64_t x = 0; x < 64; ++x) {
    ASSERT_LT(std::abs(project_parallel(s, BasisIndex(x, 6)) - a[x]), 1e-9) << x;
  }
}

TEST(ProjectRecursive, TwoQubitWalkthrough) {
  const SignalConfig cfg;
  const CVector a{{0.1, 0.2}, {-0.3, 0.4}, {0.5, -0.6}, {0.7, 0.8}};
  const auto s = encode_spectral(a, cfg);
  // Qubit 0, bit 0: multiply by e^{-j w0 t} and keep the +-2 w0 band.
  const auto first = project_recursive(s, 0, 0);
  SampledSignal expect = a[0] * direct_tone(2, cfg);
  expect += a[2] * direct_tone(-2, cfg);
  EXPECT_LT(max_sample_diff(first.residual.signal, expect), 1e-12);
  EXPECT_EQ(first.residual.active, 0b10u);
  // Then qubit 1, bit 0: low-pass leaves a0.
  const auto second = project_recursive(first.residual, 1, 0);
  EXPECT_EQ(second.residual.active, 0u);
  EXPECT_LT(std::abs(second.residual.signal[0] - a[0]), 1e-12);
  EXPECT_THROW(project_recursive(first.residual, 0, 1), InvalidArgument);
  EXPECT_THROW(project_recursive(s, 2, 0), InvalidArgument);
  EXPECT_THROW(project_recursive(s, 0, 2), InvalidArgument);
}

TEST(ProjectRecursive, OrthogonalBranchIsZero) {
  const SignalConfig cfg;
  CVector phi3(4, 0.0);
  phi3[3] = 1.0;
  EXPECT_LT(project_recursive(encode_spectral(phi3, cfg), 0, 0).residual.signal.max_abs(), 1e-12);
}

TEST(ProjectRecursive, BranchesReconstructState) {
  Rng rng(32);
  const SignalConfig cfg;
  for (int n = 1; n <= 5; ++n) {
    const auto s = encode_spectral(testing::random_state(rng, n), cfg);
    for (int i = 0; i < n; ++i) {
      const SampledSignal sum =
          project_recursive(s, i, 0).projected() + project_recursive(s, i, 1).projected();
      ASSERT_LT(max_sample_diff(sum, s.signal), 1e-9) << "n=" << n << " qubit=" << i;
    }
  }
}

TEST(ProjectRecursive, ChainEqualsParallelExhaustive) {
  Rng rng(33);
  const SignalConfig cfg;
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const CVector a = testing::random_state(rng, n);
      const auto s = encode_spectral(a, cfg);
      for (std::uint64_t x = 0; x < a.size(); ++x) {
        const BasisIndex b(x, n);
        const Complex par = project_parallel(s, b);
        ASSERT_LT(std::abs(project_recursive_chain(s, b) - par), 1e-9 * std::max(1.0, std::abs(par)));
      }
    }
  }
}

TEST(ProjectRecursive, ChainEqualsParallelSixQubits) {
  Rng rng(34);
  const SignalConfig cfg;
  for (int trial = 0; trial < 100; ++trial) {
    const CVector a = testing::random_state(rng, 6);
    const auto s = encode_spectral(a, cfg);
    const BasisIndex b(rng() % 64, 6);
    const Complex par = project_parallel(s, b);
    ASSERT_LT(std::abs(project_recursive_chain(s, b) - par), 1e-9 * std::max(1.0, std::abs(par)));
  }
}

TEST(ApplyGateSpectral, Examples) {
  const SignalConfig cfg;
  Rng rng(35);
  const CVector v = testing::random_state(rng, 3);
  const auto s = encode_spectral(v, cfg);
  const auto same = apply_gate_spectral(s, GateMatrix::identity(2), 1);
  EXPECT_LT(max_sample_diff(same.signal, s.signal), 1e-12);

  const auto flipped = measure_spectral(apply_gate_spectral(encode_spectral({1.0, 0.0}, cfg), x_n(1), 0));
  EXPECT_LT(max_abs_diff(flipped, CVector{0.0, 1.0}), 1e-12);

  const auto h = measure_spectral(apply_gate_spectral(encode_spectral({1.0, 0.0}, cfg), hadamard_n(1), 0));
  EXPECT_LT(max_abs_diff(h, CVector{1.0, 1.0}), 1e-12);

  EXPECT_THROW(apply_gate_spectral(s, hadamard_n(1), 3), InvalidArgument);
  EXPECT_THROW(apply_gate_spectral(s, hadamard_n(2), 0), InvalidArgument);
}

TEST(ApplyGateSpectral, MatchesOracleOnLibraryGates) {
  Rng rng(36);
  const SignalConfig cfg;
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const CVector v = testing::random_state(rng, n);
      const GateMatrix u = testing::random_library_gate(rng);
      const int i = testing::uniform_int(rng, 0, n - 1);
      const CVector got = measure_spectral(apply_gate_spectral(encode_spectral(v, cfg), u, i));
      const CVector want = oracle_gate_on(v, u, i);
      ASSERT_LT(max_rel_diff(got, want), 1e-9) << "n=" << n << " qubit=" << i;
    }
  }
}

TEST(ApplyGateSpectral, MatchesOracleOnRandomUnitaries) {
  Rng rng(37);
  const SignalConfig cfg;
  for (int trial = 0; trial < 10; ++trial) {
    const int n = testing::uniform_int(rng, 1, 4);
    const CVector v = testing::random_state(rng, n);
    const GateMatrix u = testing::random_unitary2(rng);
    const int i = testing::uniform_int(rng, 0, n - 1);
    const CVector got = measure_spectral(apply_gate_spectral(encode_spectral(v, cfg), u, i));
    ASSERT_LT(max_rel_diff(got, oracle_gate_on(v, u, i)), 1e-9);
  }
}

TEST(ApplyGateSpectral, LinearInTheState) {
  Rng rng(38);
  const SignalConfig cfg;
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 3;
    const CVector a = testing::random_state(rng, n);
    const CVector b = testing::random_state(rng, n);
    const Complex alpha = testing::random_complex(rng);
    const Complex beta = testing::random_complex(rng);
    CVector mixed(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) mixed[k] = alpha * a[k] + beta * b[k];
    const GateMatrix u = testing::random_unitary2(rng);
    const int i = testing::uniform_int(rng, 0, n - 1);
    const auto lhs = apply_gate_spectral(encode_spectral(mixed, cfg), u, i).signal;
    const auto rhs = alpha * apply_gate_spectral(encode_spectral(a, cfg), u, i).signal +
                     beta * apply_gate_spectral(encode_spectral(b, cfg), u, i).signal;
    EXPECT_LE(max_sample_diff(lhs, rhs), 1e-12 * std::max(1.0, rhs.max_abs()));
  }
}

TEST(MixerMode, MatchesIdealMultiplication) {
  Rng rng(39);
  const SignalConfig cfg;
  const SpectralOptions mixer{MultiplyMode::mixer, 0};
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const CVector v = testing::random_state(rng, n);
      const GateMatrix u = testing::random_library_gate(rng);
      const int i = testing::uniform_int(rng, 0, n - 1);
      const CVector got =
          measure_spectral(apply_gate_spectral(encode_spectral(v, cfg), u, i, mixer), mixer);
      ASSERT_LT(max_rel_diff(got, oracle_gate_on(v, u, i)), 1e-9) << "n=" << n;
    }
  }
}

TEST(MixerMode, TooFewPhasesLeakImages) {
  // Four phases leave the -3 image of a unit carrier inside the band of a 3-qubit state.
  Rng rng(42);
  const SignalConfig cfg;
  const SpectralOptions coarse{MultiplyMode::mixer, 4};
  const CVector v = testing::random_state(rng, 3);
  const GateMatrix h = hadamard_n(1);
  const CVector got =
      measure_spectral(apply_gate_spectral(encode_spectral(v, cfg), h, 0, coarse), coarse);
  EXPECT_GT(max_abs_diff(got, oracle_gate_on(v, h, 0)), 1e-3);
}

TEST(MixerMode, PhaseCountDefaultsAndOverrides) {
  EXPECT_EQ(effective_mixer_phases(3, 1, {}), 32);
  EXPECT_EQ(effective_mixer_phases(3, -4, {}), 8);
  EXPECT_EQ(effective_mixer_phases(6, 1, {MultiplyMode::mixer, 0}), 256);
  EXPECT_EQ(effective_mixer_phases(6, 32, {MultiplyMode::mixer, 0}), 8);
  EXPECT_EQ(effective_mixer_phases(6, -63, {MultiplyMode::mixer, 0}), 8);
  EXPECT_EQ(effective_mixer_phases(6, 64, {MultiplyMode::mixer, 0}), 4);
  EXPECT_EQ(effective_mixer_phases(6, 3, {MultiplyMode::mixer, 8}), 8);
}

TEST(MeasureSpectral, Examples) {
  Rng rng(40);
  const SignalConfig cfg;
  for (int n = 1; n <= 6; ++n) {
    const CVector v = testing::random_state(rng, n);
    ASSERT_LT(max_abs_diff(measure_spectral(encode_spectral(v, cfg)), v), 1e-9) << n;
  }
  EXPECT_EQ(max_abs_diff(measure_spectral(encode_spectral(CVector(4, 0.0), cfg)), CVector(4, 0.0)),
            0.0);
  CVector phi5(8, 0.0);
  phi5[5] = 1.0;
  EXPECT_LT(max_abs_diff(measure_spectral(encode_spectral(phi5, cfg)), phi5), 1e-12);
}

TEST(MeasureSpectral, ParallelMatchesSerial) {
  Rng rng(41);
  const SignalConfig cfg;
  const auto s = encode_spectral(testing::random_state(rng, 5), cfg);
  EXPECT_EQ(measure_spectral(s), measure_spectral_serial(s));
}

}  // namespace
}  // namespace aqed
