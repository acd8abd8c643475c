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

// Spectral encoding: an n-qubit state is one signal whose 2^n octave-spaced
// frequency components carry the basis amplitudes.

#include <cstdint>
#include <set>

#include "aqed/gate.hpp"
#include "aqed/signal.hpp"

namespace aqed {

enum class MultiplyMode { ideal, mixer };

/// How signal-by-carrier products are realised.
struct SpectralOptions {
  MultiplyMode mode = MultiplyMode::ideal;
  /// Staircase steps of the harmonic-rejection mixer. 0 picks, per carrier
  /// harmonic h, the smallest power of two >= max(4, 4 * 2^n / |h|), which
  /// keeps every staircase harmonic clear of the retained bands without
  /// asking for more steps than the sampled carrier period can hold.
  /// 2 is the plain single-comparator mixer.
  int mixer_phases = 0;
};

/// A spectrally encoded state. `active` lists the qubits still carried by the
/// signal; it is all n qubits for an encoded state and shrinks as recursive
/// projection factors qubits out.
struct SpectralState {
  int n = 0;
  SampledSignal signal;
  std::uint64_t active = 0;

  const SignalConfig& config() const { return signal.config(); }
  bool complete() const { return active == (std::uint64_t{1} << n) - 1; }
};

/// Result of projecting one qubit onto |bit>. `residual` is psi_bit^{(qubit)}
/// with the qubit's carrier removed; the projected state is carrier * residual.
struct ProjectionOutput {
  int qubit = 0;
  int bit = 0;
  SpectralState residual;

  /// Pi_bit^{(qubit)} psi = |bit>^{(qubit)} (x) residual, as a signal.
  SampledSignal projected() const;
};

/// Harmonics sum_{i in mask} +-2^i, the frequency support of a signal that
/// carries the qubits in `mask`.
std::set<std::int64_t> support_harmonics(std::uint64_t mask);

SpectralState encode_spectral(const CVector& coeffs, const SignalConfig& cfg);

/// Multiplies by conj(phi_x), low-passes at w0, and returns the DC value a_x.
/// In mixer mode conj(phi_x) is applied one octave carrier at a time.
Complex project_parallel(const SpectralState& state, const BasisIndex& x,
                         const SpectralOptions& opts = {});

/// Multiplies by the conjugate carrier of `qubit`'s |bit> and keeps only the
/// harmonics the remaining qubits can produce (a low-pass once no qubits
/// remain, a band selection otherwise).
ProjectionOutput project_recursive(const SpectralState& state, int qubit, int bit,
                                   const SpectralOptions& opts = {});

/// Chains project_recursive over qubits 0..n-1 following the bits of x.
Complex project_recursive_chain(const SpectralState& state, const BasisIndex& x,
                                const SpectralOptions& opts = {});

/// Single-qubit gate by projection, per-branch carrier modulation and
/// recombination:
///   psi' = (U00 c + U10 c*) psi_0 + (U01 c + U11 c*) psi_1,  c = e^{j w_i t}.
SpectralState apply_gate_spectral(const SpectralState& state, const GateMatrix& u, int qubit,
                                  const SpectralOptions& opts = {});

/// project_parallel over every basis index in ascending order.
CVector measure_spectral(const SpectralState& state, const SpectralOptions& opts = {});

/// Same as measure_spectral but with a plain serial loop over basis indices.
CVector measure_spectral_serial(const SpectralState& state, const SpectralOptions& opts = {});

/// Phase count the mixer uses for carrier harmonic h on an n-qubit state.
int effective_mixer_phases(int n, std::int64_t carrier_harmonic, const SpectralOptions& opts);

}  // namespace aqed
