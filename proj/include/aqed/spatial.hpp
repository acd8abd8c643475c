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

// Spatial encoding: 2^m parallel channels, channel y carrying
// amplitudes[y] * phi(t) for one shared carrier phi.
//
// Qubit index convention: qubit 0 is the MOST significant bit of the channel
// index (stride 2^{m-1}). A gate U on qubit 0 of a 2-qubit state therefore
// maps (p0,p1,p2,p3) to (U00 p0 + U01 p2, U00 p1 + U01 p3,
// U10 p0 + U11 p2, U10 p1 + U11 p3). The QFT's final reversal depends on it.

#include <span>
#include <vector>

#include "aqed/gate.hpp"
#include "aqed/signal.hpp"

namespace aqed {

struct SpatialState {
  int m = 0;
  CVector amplitudes;
  SampledSignal carrier;

  const SignalConfig& config() const { return carrier.config(); }
  std::size_t channels() const { return amplitudes.size(); }

  /// amplitudes[y] * carrier.
  SampledSignal channel(std::size_t y) const;
};

/// The two halves of the amplitude vector split on bit `qubit`: halves[b][r]
/// is the amplitude whose index has bit value b at `qubit` and whose remaining
/// bits, read in qubit order, form r.
struct SpatialDecomposition {
  int qubit = 0;
  int m = 0;
  CVector halves[2];

  /// Inverse of decompose_spatial.
  CVector recombine() const;
};

/// Unit square wave at the configuration's fundamental (1 kHz by default).
SampledSignal default_carrier(const SignalConfig& cfg);

SpatialState make_spatial_state(CVector amplitudes, SampledSignal carrier);

/// Kronecker-lifts U onto `targets` of an m-qubit register with identity
/// elsewhere. Materialises the full 2^m x 2^m matrix.
GateMatrix lift_gate(const GateMatrix& u, std::span<const int> targets, int m);

enum class SpatialPath {
  strided,  // in-place gather/scatter kernel, OpenMP-parallel
  dense,    // explicit lift_gate then dense mat-vec
};

SpatialState apply_gate_spatial(const SpatialState& state, const GateMatrix& u,
                                std::span<const int> targets,
                                SpatialPath path = SpatialPath::strided);

SpatialDecomposition decompose_spatial(const SpatialState& state, int qubit);

/// Single-qubit gate evaluated through the decomposition: each half pair
/// (h0[r], h1[r]) becomes (U00 h0 + U01 h1, U10 h0 + U11 h1), then recombined.
SpatialState apply_gate_via_decomposition(const SpatialState& state, const GateMatrix& u,
                                          int qubit);

/// Per-channel <carrier|channel_y> / <carrier|carrier>; recovers the complex
/// amplitudes.
CVector measure_spatial(const SpatialState& state);

/// |amplitude_y| * (max - min) of the real carrier: what a peak-to-peak meter
/// on each channel would read. Phase is lost.
std::vector<double> peak_to_peak(const SpatialState& state);

}  // namespace aqed
