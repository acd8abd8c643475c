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

// Runs a Circuit on one of three engines and reports amplitudes in the same
// index order (qubit 0 = most significant bit) regardless of engine.
//
// Spectral mapping: circuit qubit q is spectral qubit m-1-q, i.e. it rides
// on frequency 2^{m-1-q} w0, so the spectral basis index and the amplitude
// index coincide. The spectral engine applies H and X layers natively one
// qubit at a time; every other op is evaluated by measuring the
// coefficients, applying the lifted matrix, and re-encoding (a documented
// limitation: the encoding has no native multi-qubit gate).

#include <optional>
#include <string_view>

#include "aqed/circuit.hpp"
#include "aqed/signal.hpp"
#include "aqed/spatial.hpp"
#include "aqed/spectral.hpp"

namespace aqed {

enum class EngineKind { spatial, spectral, oracle };

std::string_view engine_name(EngineKind kind);
std::optional<EngineKind> parse_engine_name(std::string_view name);

struct RunOptions {
  EngineKind engine = EngineKind::spatial;
  SignalConfig signal;
  SpectralOptions spectral;
  SpatialPath spatial_path = SpatialPath::strided;
  bool trace = false;
};

struct TraceStep {
  std::size_t op_index = 0;
  CVector amplitudes;  // raw, as measured after the op
  double scale = 1.0;
};

struct RunResult {
  EngineKind engine = EngineKind::spatial;
  CVector raw;         // amplitudes as the engine carries them
  double scale = 1.0;  // accumulated sqrt(2) per unnormalized Hadamard
  CVector normalized;  // raw / scale
  std::vector<double> probabilities;
  std::vector<TraceStep> trace;
};

/// Probabilities |a|^2 / sum |a|^2 (all zero for the zero vector).
std::vector<double> probabilities_of(const CVector& amps);

RunResult run_circuit(const Circuit& c, const CVector& initial, const RunOptions& opts = {});

/// Final spatial state of a circuit run (for waveform export).
SpatialState run_spatial_state(const Circuit& c, const CVector& initial, const RunOptions& opts,
                               double* scale_out = nullptr);

/// Final spectral state of a circuit run (for waveform export).
SpectralState run_spectral_state(const Circuit& c, const CVector& initial,
                                 const RunOptions& opts, double* scale_out = nullptr);

}  // namespace aqed
