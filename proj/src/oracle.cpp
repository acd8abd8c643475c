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

#include "aqed/oracle.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace aqed::oracle {
namespace {

// Textbook matrices written out entry by entry, independent of the
// Kronecker constructions in circuit.cpp.

GateMatrix walsh_hadamard(int k) {
  const std::size_t d = std::size_t{1} << k;
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  GateMatrix g = GateMatrix::zeros(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) g(r, c) = (std::popcount(r & c) % 2 == 0) ? s : -s;
  }
  return g;
}

GateMatrix flip_all(int k) {
  const std::size_t d = std::size_t{1} << k;
  GateMatrix g = GateMatrix::zeros(d);
  for (std::size_t c = 0; c < d; ++c) g(c ^ (d - 1), c) = 1.0;
  return g;
}

GateMatrix phase_on_all_ones(int k, Complex phase) {
  const std::size_t d = std::size_t{1} << k;
  GateMatrix g = GateMatrix::identity(d);
  g(d - 1, d - 1) = phase;
  return g;
}

GateMatrix bit_reversal(int k) {
  const std::size_t d = std::size_t{1} << k;
  GateMatrix g = GateMatrix::zeros(d);
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t r = 0;
    for (int b = 0; b < k; ++b) {
      if ((c >> b) & 1U) r |= std::size_t{1} << (k - 1 - b);
    }
    g(r, c) = 1.0;
  }
  return g;
}

}  // namespace

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return std::sqrt(s) / scale;
}

StateVector basis_state(int n, std::uint64_t index) {
  if (n < 1 || n > 30) throw InvalidArgument("basis_state needs 1..30 qubits");
  if (index >= (std::uint64_t{1} << n)) throw InvalidArgument("basis index out of range");
  StateVector v;
  v.amps.assign(std::size_t{1} << n, 0.0);
  v.amps[index] = 1.0;
  return v;
}

StateVector oracle_apply(const StateVector& v, const GateMatrix& u,
                         std::span<const int> targets) {
  const int m = v.qubits();
  const int k = static_cast<int>(targets.size());
  if (u.dim() != (std::size_t{1} << k)) throw InvalidArgument("gate size does not match targets");
  std::size_t target_mask = 0;
  for (int q : targets) {
    if (q < 0 || q >= m) throw InvalidArgument("target out of range");
    target_mask |= std::size_t{1} << (m - 1 - q);
  }
  auto local = [&](std::size_t idx) {
    std::size_t l = 0;
    for (int q : targets) l = (l << 1) | ((idx >> (m - 1 - q)) & 1U);
    return l;
  };
  const std::size_t d = v.amps.size();
  StateVector out;
  out.scale = v.scale / u.normalization();
  out.amps.assign(d, 0.0);
  for (std::size_t r = 0; r < d; ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < d; ++c) {
      if ((r & ~target_mask) != (c & ~target_mask)) continue;
      acc += u(local(r), local(c)) * v.amps[c];
    }
    out.amps[r] = acc;
  }
  return out;
}

OracleGate oracle_gate(const Operation& op) {
  const int nt = static_cast<int>(op.targets.size());
  switch (op.kind) {
    case GateKind::H:
      return {walsh_hadamard(nt), op.targets};
    case GateKind::X:
      return {flip_all(nt), op.targets};
    case GateKind::CZ: {
      std::vector<int> q = op.controls;
      q.insert(q.end(), op.targets.begin(), op.targets.end());
      return {phase_on_all_ones(static_cast<int>(q.size()), -1.0), q};
    }
    case GateKind::R: {
      const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi / std::ldexp(1.0, op.k));
      std::vector<int> q = op.controls;
      q.insert(q.end(), op.targets.begin(), op.targets.end());
      return {phase_on_all_ones(static_cast<int>(q.size()), phase), q};
    }
    case GateKind::SWAPREV:
      return {bit_reversal(nt), op.targets};
  }
  throw InvalidArgument("unknown gate kind");
}

StateVector oracle_run(const Circuit& c, const StateVector& initial) {
  c.validate();
  if (initial.amps.size() != (std::size_t{1} << c.qubits)) {
    throw InvalidArgument("initial state size does not match circuit");
  }
  StateVector v = initial;
  for (const auto& op : c.ops) {
    const OracleGate g = oracle_gate(op);
    v = oracle_apply(v, g.matrix, g.qubits);
  }
  return v;
}

double oracle_grover_probability(int n, std::uint64_t target, int k) {
  if (n < 1 || n > 62) throw InvalidArgument("grover probability needs 1..62 qubits");
  if (target >= (std::uint64_t{1} << n)) throw InvalidArgument("target out of range");
  if (k < 0) throw InvalidArgument("iterations must be >= 0");
  const double theta = std::asin(std::sqrt(std::ldexp(1.0, -n)));
  const double s = std::sin((2.0 * k + 1.0) * theta);
  return s * s;
}

}  // namespace aqed::oracle
