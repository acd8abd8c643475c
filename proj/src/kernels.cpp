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

#include "aqed/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace aqed::kernels {
namespace {

// Index of twiddle for harmonic h at sample k: (h * (2k+1)) mod 2K.
inline std::size_t twiddle_index(std::int64_t h, std::size_t k, std::size_t samples) {
  const auto period = static_cast<std::int64_t>(2 * samples);
  std::int64_t hm = h % period;
  if (hm < 0) hm += period;
  return static_cast<std::size_t>((hm * static_cast<std::int64_t>(2 * k + 1)) % period);
}

// Offsets of the 2^k gate-local basis states inside the register, and the
// positions of the non-target bits, for MSB-first qubit numbering.
struct GateLayout {
  std::vector<std::size_t> offsets;
  std::vector<int> free_positions;  // ascending bit positions not touched
};

GateLayout layout_for(int m, std::span<const int> targets) {
  const int k = static_cast<int>(targets.size());
  GateLayout l;
  l.offsets.assign(std::size_t{1} << k, 0);
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  for (int j = 0; j < k; ++j) {
    const int t = targets[static_cast<std::size_t>(j)];
    if (t < 0 || t >= m) throw InvalidArgument("target qubit out of range");
    if (used[static_cast<std::size_t>(t)]) throw InvalidArgument("duplicate target qubit");
    used[static_cast<std::size_t>(t)] = true;
  }
  for (std::size_t a = 0; a < l.offsets.size(); ++a) {
    std::size_t off = 0;
    for (int j = 0; j < k; ++j) {
      const std::size_t bit = (a >> (k - 1 - j)) & 1U;
      const int pos = m - 1 - targets[static_cast<std::size_t>(j)];
      off |= bit << pos;
    }
    l.offsets[a] = off;
  }
  for (int pos = 0; pos < m; ++pos)
    if (!used[static_cast<std::size_t>(m - 1 - pos)]) l.free_positions.push_back(pos);
  return l;
}

inline std::size_t deposit(std::size_t g, const std::vector<int>& positions) {
  std::size_t idx = 0;
  for (std::size_t b = 0; b < positions.size(); ++b) idx |= ((g >> b) & 1U) << positions[b];
  return idx;
}

void check_gate(std::span<Complex> amps, int m, const GateMatrix& gate,
                std::span<const int> targets) {
  if (amps.size() != (std::size_t{1} << m)) throw InvalidArgument("amplitude length is not 2^m");
  if (gate.dim() != (std::size_t{1} << targets.size())) {
    throw InvalidArgument("gate dimension does not match target count");
  }
}

}  // namespace

CVector midpoint_twiddles(std::size_t samples) {
  CVector tw(2 * samples);
  for (std::size_t q = 0; q < tw.size(); ++q) {
    tw[q] = std::polar(1.0, std::numbers::pi * static_cast<double>(q) / static_cast<double>(samples));
  }
  return tw;
}

int max_threads() { return omp_get_max_threads(); }

namespace serial {

void multiply(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out) {
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double ar = a[k].real(), ai = a[k].imag();
    const double br = b[k].real(), bi = b[k].imag();
    out[k] = Complex(ar * br - ai * bi, ar * bi + ai * br);
  }
}

void synthesize(std::span<const Complex> coeffs, std::span<const std::int64_t> harmonics,
                std::span<const Complex> twiddles, std::span<Complex> out) {
  const std::size_t samples = out.size();
  for (std::size_t k = 0; k < samples; ++k) {
    Complex acc = 0.0;
    for (std::size_t x = 0; x < coeffs.size(); ++x) {
      if (coeffs[x] == 0.0) continue;
      acc += coeffs[x] * twiddles[twiddle_index(harmonics[x], k, samples)];
    }
    out[k] = acc;
  }
}

void apply_gate(std::span<Complex> amps, int m, const GateMatrix& gate,
                std::span<const int> targets) {
  check_gate(amps, m, gate, targets);
  const GateLayout l = layout_for(m, targets);
  const std::size_t d = gate.dim();
  const std::size_t groups = amps.size() / d;
  CVector in(d);
  for (std::size_t g = 0; g < groups; ++g) {
    const std::size_t base = deposit(g, l.free_positions);
    for (std::size_t a = 0; a < d; ++a) in[a] = amps[base | l.offsets[a]];
    for (std::size_t r = 0; r < d; ++r) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < d; ++c) acc += gate(r, c) * in[c];
      amps[base | l.offsets[r]] = acc;
    }
  }
}

void matvec(const GateMatrix& m, std::span<const Complex> v, std::span<Complex> out) {
  const std::size_t d = m.dim();
  for (std::size_t r = 0; r < d; ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < d; ++c) acc += m(r, c) * v[c];
    out[r] = acc;
  }
}

}  // namespace serial

namespace omp {

void multiply(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out) {
  const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const double ar = a[k].real(), ai = a[k].imag();
    const double br = b[k].real(), bi = b[k].imag();
    out[k] = Complex(ar * br - ai * bi, ar * bi + ai * br);
  }
}

void synthesize(std::span<const Complex> coeffs, std::span<const std::int64_t> harmonics,
                std::span<const Complex> twiddles, std::span<Complex> out) {
  const std::size_t samples = out.size();
  const auto n = static_cast<std::ptrdiff_t>(samples);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ks = 0; ks < n; ++ks) {
    const auto k = static_cast<std::size_t>(ks);
    Complex acc = 0.0;
    for (std::size_t x = 0; x < coeffs.size(); ++x) {
      if (coeffs[x] == 0.0) continue;
      acc += coeffs[x] * twiddles[twiddle_index(harmonics[x], k, samples)];
    }
    out[k] = acc;
  }
}

void apply_gate(std::span<Complex> amps, int m, const GateMatrix& gate,
                std::span<const int> targets) {
  check_gate(amps, m, gate, targets);
  const GateLayout l = layout_for(m, targets);
  const std::size_t d = gate.dim();
  const auto groups = static_cast<std::ptrdiff_t>(amps.size() / d);
#pragma omp parallel if (groups >= 64)
  {
    CVector in(d);
#pragma omp for schedule(static)
    for (std::ptrdiff_t g = 0; g < groups; ++g) {
      const std::size_t base = deposit(static_cast<std::size_t>(g), l.free_positions);
      for (std::size_t a = 0; a < d; ++a) in[a] = amps[base | l.offsets[a]];
      for (std::size_t r = 0; r < d; ++r) {
        Complex acc = 0.0;
        for (std::size_t c = 0; c < d; ++c) acc += gate(r, c) * in[c];
        amps[base | l.offsets[r]] = acc;
      }
    }
  }
}

void matvec(const GateMatrix& m, std::span<const Complex> v, std::span<Complex> out) {
  const auto d = static_cast<std::ptrdiff_t>(m.dim());
#pragma omp parallel for schedule(static) if (d >= 64)
  for (std::ptrdiff_t r = 0; r < d; ++r) {
    Complex acc = 0.0;
    for (std::ptrdiff_t c = 0; c < d; ++c) acc += m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) * v[c];
    out[r] = acc;
  }
}

}  // namespace omp
}  // namespace aqed::kernels
