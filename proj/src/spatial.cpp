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

#include "aqed/spatial.hpp"

#include <algorithm>
#include <cmath>

#include "aqed/kernels.hpp"

namespace aqed {
namespace {

void check_qubit(int qubit, int m) {
  if (qubit < 0 || qubit >= m) {
    throw InvalidArgument("qubit " + std::to_string(qubit) + " out of range for " +
                          std::to_string(m) + " spatial qubits");
  }
}

void check_targets(const GateMatrix& u, std::span<const int> targets, int m) {
  if (targets.empty()) throw InvalidArgument("gate needs at least one target");
  if (u.dim() != (std::size_t{1} << targets.size())) {
    throw InvalidArgument("gate dimension " + std::to_string(u.dim()) + " does not match " +
                          std::to_string(targets.size()) + " targets");
  }
  std::vector<bool> seen(static_cast<std::size_t>(std::max(m, 0)), false);
  for (int t : targets) {
    check_qubit(t, m);
    if (seen[static_cast<std::size_t>(t)]) throw InvalidArgument("duplicate target qubit");
    seen[static_cast<std::size_t>(t)] = true;
  }
}

// Channel index with bit `bit` inserted at `qubit` (MSB-first) into the
// (m-1)-bit remainder r.
std::size_t insert_bit(std::size_t r, int qubit, int m, std::size_t bit) {
  const int pos = m - 1 - qubit;
  const std::size_t low = r & ((std::size_t{1} << pos) - 1);
  const std::size_t high = r >> pos;
  return (high << (pos + 1)) | (bit << pos) | low;
}

}  // namespace

SampledSignal SpatialState::channel(std::size_t y) const {
  if (y >= amplitudes.size()) throw InvalidArgument("channel index out of range");
  return amplitudes[y] * carrier;
}

CVector SpatialDecomposition::recombine() const {
  const std::size_t half = halves[0].size();
  CVector out(2 * half);
  for (std::size_t r = 0; r < half; ++r) {
    out[insert_bit(r, qubit, m, 0)] = halves[0][r];
    out[insert_bit(r, qubit, m, 1)] = halves[1][r];
  }
  return out;
}

SampledSignal default_carrier(const SignalConfig& cfg) {
  return comparator(real_part(make_tone(1, cfg)));
}

SpatialState make_spatial_state(CVector amplitudes, SampledSignal carrier) {
  const int m = log2_exact(amplitudes.size());
  if (carrier.size() == 0 || carrier.max_abs() == 0.0) {
    throw InvalidArgument("spatial carrier must be nonzero");
  }
  return SpatialState{m, std::move(amplitudes), std::move(carrier)};
}

GateMatrix lift_gate(const GateMatrix& u, std::span<const int> targets, int m) {
  check_targets(u, targets, m);
  const std::size_t dim = std::size_t{1} << m;
  const int k = static_cast<int>(targets.size());
  std::vector<int> pos(targets.size());
  std::size_t target_bits = 0;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    pos[j] = m - 1 - targets[j];
    target_bits |= std::size_t{1} << pos[j];
  }
  auto local = [&](std::size_t idx) {
    std::size_t a = 0;
    for (int j = 0; j < k; ++j) a |= ((idx >> pos[static_cast<std::size_t>(j)]) & 1U) << (k - 1 - j);
    return a;
  };
  GateMatrix out = GateMatrix::zeros(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      if ((r & ~target_bits) == (c & ~target_bits)) out(r, c) = u(local(r), local(c));
  return GateMatrix(dim, out.entries(), u.normalization());
}

SpatialState apply_gate_spatial(const SpatialState& state, const GateMatrix& u,
                                std::span<const int> targets, SpatialPath path) {
  check_targets(u, targets, state.m);
  SpatialState out = state;
  if (path == SpatialPath::dense) {
    const GateMatrix full = lift_gate(u, targets, state.m);
    kernels::omp::matvec(full, state.amplitudes, out.amplitudes);
  } else {
    kernels::omp::apply_gate(out.amplitudes, state.m, u, targets);
  }
  return out;
}

SpatialDecomposition decompose_spatial(const SpatialState& state, int qubit) {
  check_qubit(qubit, state.m);
  SpatialDecomposition d;
  d.qubit = qubit;
  d.m = state.m;
  const std::size_t half = state.amplitudes.size() / 2;
  d.halves[0].resize(half);
  d.halves[1].resize(half);
  for (std::size_t r = 0; r < half; ++r) {
    d.halves[0][r] = state.amplitudes[insert_bit(r, qubit, state.m, 0)];
    d.halves[1][r] = state.amplitudes[insert_bit(r, qubit, state.m, 1)];
  }
  return d;
}

SpatialState apply_gate_via_decomposition(const SpatialState& state, const GateMatrix& u,
                                          int qubit) {
  if (u.dim() != 2) throw InvalidArgument("decomposition route takes a single-qubit gate");
  SpatialDecomposition d = decompose_spatial(state, qubit);
  for (std::size_t r = 0; r < d.halves[0].size(); ++r) {
    const Complex h0 = d.halves[0][r], h1 = d.halves[1][r];
    d.halves[0][r] = u(0, 0) * h0 + u(0, 1) * h1;
    d.halves[1][r] = u(1, 0) * h0 + u(1, 1) * h1;
  }
  SpatialState out = state;
  out.amplitudes = d.recombine();
  return out;
}

CVector measure_spatial(const SpatialState& state) {
  const Complex norm = inner_product(state.carrier, state.carrier);
  if (std::abs(norm) == 0.0) throw InvalidArgument("spatial carrier must be nonzero");
  CVector out(state.amplitudes.size());
  const auto count = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static) if (count >= 64)
  for (std::ptrdiff_t y = 0; y < count; ++y) {
    const auto yy = static_cast<std::size_t>(y);
    out[yy] = inner_product(state.carrier, state.channel(yy)) / norm;
  }
  return out;
}

std::vector<double> peak_to_peak(const SpatialState& state) {
  double lo = 0.0, hi = 0.0;
  if (state.carrier.size() > 0) lo = hi = state.carrier[0].real();
  for (const auto& v : state.carrier.samples()) {
    lo = std::min(lo, v.real());
    hi = std::max(hi, v.real());
  }
  std::vector<double> out;
  out.reserve(state.amplitudes.size());
  for (const auto& a : state.amplitudes) out.push_back(std::abs(a) * (hi - lo));
  return out;
}

}  // namespace aqed
