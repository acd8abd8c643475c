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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aqed/gate.hpp"
#include "json.hpp"

namespace aqed {

// Gate constructors. Multi-qubit matrices follow the MSB-first convention:
// the first Kronecker factor acts on the first listed qubit.

/// k-fold Kronecker power of H. Unnormalized entries are +-1 and the matrix
/// carries normalization 2^{-k/2}.
GateMatrix hadamard_n(int k, bool normalized = false);

/// k-fold Kronecker power of X: the anti-diagonal permutation.
GateMatrix x_n(int k);

/// Z controlled on `controls` leading qubits, built by the recursion
///   C^c Z = I1 (x) I^{(x)c} + I2 (x) C^{c-1} Z,  C^0 Z = Z.
GateMatrix multi_controlled_z(int controls);

/// diag(1, e^{j 2 pi / 2^k}).
GateMatrix rotation_gate(int k);

/// m-qubit controlled-R_k as the two-term operator sum: I1 at the control
/// slot in the identity term, R_k at the target slot and I2 at the control
/// slot in the other, identity everywhere else.
GateMatrix controlled_rotation(int k, int control, int target, int m);

/// Permutation sending each basis index to its bit reversal over m qubits.
GateMatrix reversal_permutation(int m);

enum class GateKind { H, X, CZ, R, SWAPREV };

std::string_view gate_name(GateKind kind);
std::optional<GateKind> parse_gate_name(std::string_view name);

/// One circuit step.
///   H, X     : the gate on every target (a k-fold Kronecker power)
///   CZ       : Z on the single target, controlled on every control
///   R        : R_k on the single target, optionally with one control
///   SWAPREV  : bit reversal of the listed targets
struct Operation {
  GateKind kind = GateKind::H;
  int k = 0;
  std::vector<int> controls;
  std::vector<int> targets;

  friend bool operator==(const Operation&, const Operation&) = default;
};

struct Circuit {
  int qubits = 0;
  std::vector<Operation> ops;
  std::string label;

  /// Throws InvalidArgument if any op is malformed for this register.
  void validate() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Matrix for an op and the qubits it acts on, in the order the matrix
/// expects. Uses the unnormalized Hadamard unless `normalized_h`.
struct BoundGate {
  GateMatrix matrix;
  std::vector<int> qubits;
};
BoundGate bind_operation(const Operation& op, bool normalized_h = false);

struct GroverSpec {
  int qubits = 0;
  std::uint64_t target = 0;
  int iterations = 1;

  void validate() const;
};

/// round(pi/4 * sqrt(2^n)), at least 1.
int default_grover_iterations(int n);

/// The X layer that maps the target to |1...1>: X on every qubit whose target
/// bit is 0 (qubit 0 reads the most significant bit). Empty when the target is
/// all ones.
std::vector<int> grover_oracle_flips(int n, std::uint64_t target);

/// Oracle subcircuit alone: X layer, C^{n-1} Z (target = last qubit), X layer.
Circuit build_grover_oracle(int n, std::uint64_t target);

/// Initialization H^n, then `iterations` x (oracle, H^n X^n C^{n-1}Z X^n H^n).
Circuit build_grover(const GroverSpec& spec);

/// H on qubit i then controlled-R_{j-i+1} from each j > i, for every i, then
/// the full bit reversal.
Circuit build_qft(int m);

nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

}  // namespace aqed
