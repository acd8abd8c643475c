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

#include "aqed/engine.hpp"

#include <cmath>
#include <functional>

#include "aqed/kernels.hpp"
#include "aqed/oracle.hpp"

namespace aqed {
namespace {

void check_initial(const Circuit& c, const CVector& initial) {
  c.validate();
  if (initial.size() != (std::size_t{1} << c.qubits)) {
    throw InvalidArgument("initial state has " + std::to_string(initial.size()) +
                          " amplitudes, circuit needs " +
                          std::to_string(std::size_t{1} << c.qubits));
  }
}

template <class State>
using StepHook = std::function<void(std::size_t op_index, double scale, const State& state)>;

SpatialState spatial_run(const Circuit& c, const CVector& initial, const RunOptions& opts,
                         double& scale, const StepHook<SpatialState>& hook) {
  check_initial(c, initial);
  SpatialState state = make_spatial_state(initial, default_carrier(opts.signal));
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    const BoundGate g = bind_operation(c.ops[i]);
    state = apply_gate_spatial(state, g.matrix, g.qubits, opts.spatial_path);
    scale /= g.matrix.normalization();
    if (hook) hook(i, scale, state);
  }
  return state;
}

// Non-native ops: read the coefficients out, apply the lifted gate to them,
// and synthesize a fresh signal.
SpectralState spectral_delegate(const SpectralState& state, const BoundGate& g,
                                const RunOptions& opts) {
  CVector amps = measure_spectral(state, opts.spectral);
  kernels::omp::apply_gate(amps, state.n, g.matrix, g.qubits);
  return encode_spectral(amps, state.config());
}

SpectralState spectral_run(const Circuit& c, const CVector& initial, const RunOptions& opts,
                           double& scale, const StepHook<SpectralState>& hook) {
  check_initial(c, initial);
  const int m = c.qubits;
  SpectralState state = encode_spectral(initial, opts.signal);
  const GateMatrix h1 = hadamard_n(1);
  const GateMatrix x1 = x_n(1);
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    const Operation& op = c.ops[i];
    if (op.kind == GateKind::H || op.kind == GateKind::X) {
      const GateMatrix& u = op.kind == GateKind::H ? h1 : x1;
      for (int q : op.targets) {
        state = apply_gate_spectral(state, u, m - 1 - q, opts.spectral);
        scale /= u.normalization();
      }
    } else {
      const BoundGate g = bind_operation(op);
      state = spectral_delegate(state, g, opts);
      scale /= g.matrix.normalization();
    }
    if (hook) hook(i, scale, state);
  }
  return state;
}

}  // namespace

std::string_view engine_name(EngineKind kind) {
  switch (kind) {
    case EngineKind::spatial: return "spatial";
    case EngineKind::spectral: return "spectral";
    case EngineKind::oracle: return "oracle";
  }
  return "?";
}

std::optional<EngineKind> parse_engine_name(std::string_view name) {
  for (EngineKind k : {EngineKind::spatial, EngineKind::spectral, EngineKind::oracle}) {
    if (engine_name(k) == name) return k;
  }
  return std::nullopt;
}

std::vector<double> probabilities_of(const CVector& amps) {
  std::vector<double> p(amps.size(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    p[i] = std::norm(amps[i]);
    total += p[i];
  }
  if (total > 0.0) {
    for (auto& v : p) v /= total;
  }
  return p;
}

SpatialState run_spatial_state(const Circuit& c, const CVector& initial, const RunOptions& opts,
                               double* scale_out) {
  double scale = 1.0;
  SpatialState s = spatial_run(c, initial, opts, scale, nullptr);
  if (scale_out) *scale_out = scale;
  return s;
}

SpectralState run_spectral_state(const Circuit& c, const CVector& initial,
                                 const RunOptions& opts, double* scale_out) {
  double scale = 1.0;
  SpectralState s = spectral_run(c, initial, opts, scale, nullptr);
  if (scale_out) *scale_out = scale;
  return s;
}

RunResult run_circuit(const Circuit& c, const CVector& initial, const RunOptions& opts) {
  RunResult r;
  r.engine = opts.engine;
  switch (opts.engine) {
    case EngineKind::spatial: {
      StepHook<SpatialState> hook;
      if (opts.trace) {
        hook = [&](std::size_t i, double scale, const SpatialState& s) {
          r.trace.push_back({i, measure_spatial(s), scale});
        };
      }
      r.raw = measure_spatial(spatial_run(c, initial, opts, r.scale, hook));
      break;
    }
    case EngineKind::spectral: {
      StepHook<SpectralState> hook;
      if (opts.trace) {
        hook = [&](std::size_t i, double scale, const SpectralState& s) {
          r.trace.push_back({i, measure_spectral(s, opts.spectral), scale});
        };
      }
      r.raw = measure_spectral(spectral_run(c, initial, opts, r.scale, hook), opts.spectral);
      break;
    }
    case EngineKind::oracle: {
      check_initial(c, initial);
      oracle::StateVector v{initial, 1.0};
      for (std::size_t i = 0; i < c.ops.size(); ++i) {
        const oracle::OracleGate g = oracle::oracle_gate(c.ops[i]);
        v = oracle::oracle_apply(v, g.matrix, g.qubits);
        if (opts.trace) r.trace.push_back({i, v.amps, v.scale});
      }
      r.raw = v.amps;
      r.scale = v.scale;
      break;
    }
  }
  r.normalized.resize(r.raw.size());
  for (std::size_t i = 0; i < r.raw.size(); ++i) r.normalized[i] = r.raw[i] / r.scale;
  r.probabilities = probabilities_of(r.normalized);
  return r;
}

}  // namespace aqed
