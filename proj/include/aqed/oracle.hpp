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

// Independent dense state-vector simulator used as ground truth. It builds
// its own (normalized) gate matrices straight from their textbook
// definitions and applies them by explicit lifting; nothing here calls into
// the spectral or spatial engines or the circuit-lib gate constructors.

#include <span>

#include "aqed/circuit.hpp"
#include "aqed/gate.hpp"

namespace aqed::oracle {

struct StateVector {
  CVector amps;
  /// Factor the stored amplitudes must be divided by to be unit-norm
  /// equivalent; 1 whenever only normalized gates were applied.
  double scale = 1.0;

  int qubits() const { return log2_exact(amps.size()); }
  double norm() const;
};

StateVector basis_state(int n, std::uint64_t index);

/// Full lifted matrix times vector. Deliberately naive.
StateVector oracle_apply(const StateVector& v, const GateMatrix& u, std::span<const int> targets);

/// Textbook normalized matrix for an operation, with its qubit list.
struct OracleGate {
  GateMatrix matrix;
  std::vector<int> qubits;
};
OracleGate oracle_gate(const Operation& op);

StateVector oracle_run(const Circuit& c, const StateVector& initial);

/// sin^2((2k+1) asin(2^{-n/2})).
double oracle_grover_probability(int n, std::uint64_t target, int k);

}  // namespace aqed::oracle
