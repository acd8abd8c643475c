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

#include "aqed/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "aqed/kernels.hpp"
#include "fft.hpp"

namespace aqed {
namespace {

std::uint64_t full_mask(int n) { return (std::uint64_t{1} << n) - 1; }

std::int64_t extent_of(std::uint64_t mask) { return static_cast<std::int64_t>(mask); }

// signal * e^{j h w0 t}. `extent` bounds |harmonic| of the input; the mixer's
// harmonic-rejection filter passes everything up to extent + |h|.
SampledSignal multiply_carrier(const SampledSignal& s, std::int64_t h, std::int64_t extent,
                               int n, const SpectralOptions& opts) {
  if (opts.mode == MultiplyMode::ideal) return complex_multiply(s, make_tone(h, s.config()));
  const HarmonicRejectionMixer mixer(effective_mixer_phases(n, h, opts));
  const double cutoff = static_cast<double>(extent + std::abs(h) + 1) * s.config().omega0();
  return mixer.multiply_fast(s, h, cutoff);
}

void check_qubit(const SpectralState& state, int qubit) {
  if (qubit < 0 || qubit >= state.n) {
    throw InvalidArgument("qubit " + std::to_string(qubit) + " out of range for " +
                          std::to_string(state.n) + " spectral qubits");
  }
}

}  // namespace

int effective_mixer_phases(int n, std::int64_t carrier_harmonic, const SpectralOptions& opts) {
  if (opts.mixer_phases > 0) return opts.mixer_phases;
  // |h| * P >= 4 * 2^n puts the first spurious staircase harmonic h(P-1)
  // beyond every retained band; a power of two keeps a whole number of
  // samples per staircase step when K is a power of two.
  const std::int64_t h = std::max<std::int64_t>(1, std::abs(carrier_harmonic));
  const std::int64_t need = ((std::int64_t{4} << n) + h - 1) / h;
  int p = 4;
  while (p < need) p *= 2;
  return p;
}

SampledSignal ProjectionOutput::projected() const {
  const SampledSignal carrier = make_tone(qubit_carrier_harmonic(qubit, bit), residual.config());
  return complex_multiply(residual.signal, carrier);
}

std::set<std::int64_t> support_harmonics(std::uint64_t mask) {
  std::set<std::int64_t> out{0};
  for (int i = 0; i < 63; ++i) {
    if (((mask >> i) & 1U) == 0) continue;
    const std::int64_t w = std::int64_t{1} << i;
    std::set<std::int64_t> next;
    for (auto h : out) {
      next.insert(h + w);
      next.insert(h - w);
    }
    out.swap(next);
  }
  return out;
}

SpectralState encode_spectral(const CVector& coeffs, const SignalConfig& cfg) {
  const int n = log2_exact(coeffs.size());
  cfg.require_qubits(n);
  std::vector<std::int64_t> harmonics(coeffs.size());
  for (std::size_t x = 0; x < coeffs.size(); ++x) harmonics[x] = BasisIndex(x, n).harmonic();
  SampledSignal s(cfg);
  kernels::omp::synthesize(coeffs, harmonics, detail::twiddles_for(cfg.samples_per_window()),
                           s.samples());
  return SpectralState{n, std::move(s), full_mask(n)};
}

Complex project_parallel(const SpectralState& state, const BasisIndex& x,
                         const SpectralOptions& opts) {
  if (!state.complete()) throw InvalidArgument("parallel projection needs a complete state");
  if (x.qubits() != state.n) throw InvalidArgument("basis index qubit count mismatch");
  SampledSignal prod = state.signal;
  if (opts.mode == MultiplyMode::mixer) {
    // A square-wave reference at an odd harmonic aliases on the sample grid,
    // so conj(phi_x) is applied as a chain of octave carriers instead.
    std::int64_t extent = extent_of(state.active);
    for (int i = 0; i < state.n; ++i) {
      const std::int64_t h = -qubit_carrier_harmonic(i, x.bit(i));
      prod = multiply_carrier(prod, h, extent, state.n, opts);
      extent += std::abs(h);
    }
  } else {
    prod = multiply_carrier(prod, -x.harmonic(), extent_of(state.active), state.n, opts);
  }
  const SampledSignal dc = lowpass(prod, state.config().omega0());
  Complex mean = 0.0;
  for (const auto& v : dc.samples()) mean += v;
  return mean / static_cast<double>(dc.size());
}

ProjectionOutput project_recursive(const SpectralState& state, int qubit, int bit,
                                   const SpectralOptions& opts) {
  check_qubit(state, qubit);
  if (bit != 0 && bit != 1) throw InvalidArgument("bit must be 0 or 1");
  const std::uint64_t qmask = std::uint64_t{1} << qubit;
  if ((state.active & qmask) == 0) {
    throw InvalidArgument("qubit " + std::to_string(qubit) + " was already projected out");
  }
  const std::int64_t h = -qubit_carrier_harmonic(qubit, bit);
  SampledSignal prod = multiply_carrier(state.signal, h, extent_of(state.active), state.n, opts);
  const std::uint64_t remaining = state.active & ~qmask;
  SampledSignal kept = remaining == 0 ? lowpass(prod, state.config().omega0())
                                      : select_harmonics(prod, support_harmonics(remaining));
  return ProjectionOutput{qubit, bit, SpectralState{state.n, std::move(kept), remaining}};
}

Complex project_recursive_chain(const SpectralState& state, const BasisIndex& x,
                                const SpectralOptions& opts) {
  if (x.qubits() != state.n) throw InvalidArgument("basis index qubit count mismatch");
  SpectralState cur = state;
  for (int i = 0; i < state.n; ++i) cur = project_recursive(cur, i, x.bit(i), opts).residual;
  Complex mean = 0.0;
  for (const auto& v : cur.signal.samples()) mean += v;
  return mean / static_cast<double>(cur.signal.size());
}

SpectralState apply_gate_spectral(const SpectralState& state, const GateMatrix& u, int qubit,
                                  const SpectralOptions& opts) {
  check_qubit(state, qubit);
  if (!state.complete()) throw InvalidArgument("gate application needs a complete state");
  if (u.dim() != 2) throw InvalidArgument("spectral gates act on one qubit");

  const auto branch0 = project_recursive(state, qubit, 0, opts);
  const auto branch1 = project_recursive(state, qubit, 1, opts);
  const std::int64_t w = std::int64_t{1} << qubit;
  const std::int64_t extent = extent_of(branch0.residual.active);
  const int n = state.n;

  // (U00 c + U10 c*) psi_0 + (U01 c + U11 c*) psi_1
  SampledSignal out(state.config());
  const SampledSignal* psi[2] = {&branch0.residual.signal, &branch1.residual.signal};
  for (int col = 0; col < 2; ++col) {
    const Complex to0 = u(0, static_cast<std::size_t>(col));
    const Complex to1 = u(1, static_cast<std::size_t>(col));
    if (to0 != 0.0) out += to0 * multiply_carrier(*psi[col], w, extent, n, opts);
    if (to1 != 0.0) out += to1 * multiply_carrier(*psi[col], -w, extent, n, opts);
  }
  return SpectralState{n, std::move(out), state.active};
}

CVector measure_spectral(const SpectralState& state, const SpectralOptions& opts) {
  if (!state.complete()) throw InvalidArgument("measurement needs a complete state");
  const auto count = static_cast<std::ptrdiff_t>(std::size_t{1} << state.n);
  CVector out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t x = 0; x < count; ++x) {
    out[static_cast<std::size_t>(x)] =
        project_parallel(state, BasisIndex(static_cast<std::uint64_t>(x), state.n), opts);
  }
  return out;
}

CVector measure_spectral_serial(const SpectralState& state, const SpectralOptions& opts) {
  if (!state.complete()) throw InvalidArgument("measurement needs a complete state");
  CVector out(std::size_t{1} << state.n);
  for (std::size_t x = 0; x < out.size(); ++x) {
    out[x] = project_parallel(state, BasisIndex(x, state.n), opts);
  }
  return out;
}

}  // namespace aqed
