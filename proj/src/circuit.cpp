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

#include "aqed/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace aqed {
namespace {

const GateMatrix kI{2, {1.0, 0.0, 0.0, 1.0}};
const GateMatrix kI1{2, {1.0, 0.0, 0.0, 0.0}};  // |0><0|
const GateMatrix kI2{2, {0.0, 0.0, 0.0, 1.0}};  // |1><1|
const GateMatrix kX{2, {0.0, 1.0, 1.0, 0.0}};
const GateMatrix kZ{2, {1.0, 0.0, 0.0, -1.0}};

GateMatrix kron_power(const GateMatrix& g, int k) {
  GateMatrix out = g;
  for (int i = 1; i < k; ++i) out = kron(out, g);
  return out;
}

void require_positive(int k, const char* what) {
  if (k < 1) throw InvalidArgument(std::string(what) + " needs k >= 1");
}

std::vector<int> all_qubits(int n) {
  std::vector<int> q(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) q[static_cast<std::size_t>(i)] = i;
  return q;
}

}  // namespace

GateMatrix hadamard_n(int k, bool normalized) {
  require_positive(k, "hadamard_n");
  const GateMatrix h{2, {1.0, 1.0, 1.0, -1.0}, 1.0 / std::numbers::sqrt2};
  GateMatrix out = kron_power(h, k);
  return normalized ? out.normalized() : out;
}

GateMatrix x_n(int k) {
  require_positive(k, "x_n");
  return kron_power(kX, k);
}

GateMatrix multi_controlled_z(int controls) {
  if (controls < 0) throw InvalidArgument("multi_controlled_z needs controls >= 0");
  if (controls == 0) return kZ;
  const GateMatrix identity_rest = GateMatrix::identity(std::size_t{1} << controls);
  return kron(kI1, identity_rest) + kron(kI2, multi_controlled_z(controls - 1));
}

GateMatrix rotation_gate(int k) {
  require_positive(k, "rotation_gate");
  const double angle = 2.0 * std::numbers::pi / std::ldexp(1.0, k);
  return GateMatrix{2, {1.0, 0.0, 0.0, std::polar(1.0, angle)}};
}

GateMatrix controlled_rotation(int k, int control, int target, int m) {
  if (control == target) throw InvalidArgument("control and target must differ");
  if (control < 0 || control >= m || target < 0 || target >= m) {
    throw InvalidArgument("controlled_rotation index out of range");
  }
  const GateMatrix r = rotation_gate(k);
  auto slot = [&](int s, bool rotate_term) -> const GateMatrix& {
    if (s == control) return rotate_term ? kI2 : kI1;
    if (s == target && rotate_term) return r;
    return kI;
  };
  GateMatrix idle = slot(0, false);
  GateMatrix active = slot(0, true);
  for (int s = 1; s < m; ++s) {
    idle = kron(idle, slot(s, false));
    active = kron(active, slot(s, true));
  }
  return idle + active;
}

GateMatrix reversal_permutation(int m) {
  require_positive(m, "reversal_permutation");
  const std::size_t dim = std::size_t{1} << m;
  GateMatrix p = GateMatrix::zeros(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::size_t r = 0;
    for (int b = 0; b < m; ++b) r |= ((i >> b) & 1U) << (m - 1 - b);
    p(r, i) = 1.0;
  }
  return p;
}

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::CZ: return "CZ";
    case GateKind::R: return "R";
    case GateKind::SWAPREV: return "SWAPREV";
  }
  return "?";
}

std::optional<GateKind> parse_gate_name(std::string_view name) {
  for (GateKind k : {GateKind::H, GateKind::X, GateKind::CZ, GateKind::R, GateKind::SWAPREV}) {
    if (gate_name(k) == name) return k;
  }
  return std::nullopt;
}

void Circuit::validate() const {
  if (qubits < 1) throw InvalidArgument("circuit needs at least one qubit");
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const Operation& op = ops[i];
    const std::string where = "op " + std::to_string(i) + " (" + std::string(gate_name(op.kind)) + "): ";
    std::vector<int> all = op.controls;
    all.insert(all.end(), op.targets.begin(), op.targets.end());
    for (int q : all) {
      if (q < 0 || q >= qubits) throw InvalidArgument(where + "qubit index out of range");
    }
    std::vector<int> sorted = all;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidArgument(where + "repeated qubit or overlapping controls and targets");
    }
    if (op.targets.empty()) throw InvalidArgument(where + "needs at least one target");
    switch (op.kind) {
      case GateKind::H:
      case GateKind::X:
      case GateKind::SWAPREV:
        if (!op.controls.empty()) throw InvalidArgument(where + "takes no controls");
        break;
      case GateKind::CZ:
        if (op.targets.size() != 1) throw InvalidArgument(where + "takes exactly one target");
        break;
      case GateKind::R:
        if (op.targets.size() != 1) throw InvalidArgument(where + "takes exactly one target");
        if (op.controls.size() > 1) throw InvalidArgument(where + "takes at most one control");
        if (op.k < 1) throw InvalidArgument(where + "needs k >= 1");
        break;
    }
  }
}

BoundGate bind_operation(const Operation& op, bool normalized_h) {
  const int nt = static_cast<int>(op.targets.size());
  switch (op.kind) {
    case GateKind::H:
      return {hadamard_n(nt, normalized_h), op.targets};
    case GateKind::X:
      return {x_n(nt), op.targets};
    case GateKind::CZ: {
      std::vector<int> q = op.controls;
      q.push_back(op.targets.at(0));
      return {multi_controlled_z(static_cast<int>(op.controls.size())), q};
    }
    case GateKind::R:
      if (op.controls.empty()) return {rotation_gate(op.k), op.targets};
      return {controlled_rotation(op.k, 0, 1, 2), {op.controls.at(0), op.targets.at(0)}};
    case GateKind::SWAPREV:
      return {reversal_permutation(nt), op.targets};
  }
  throw InvalidArgument("unknown gate kind");
}

void GroverSpec::validate() const {
  if (qubits < 1 || qubits > 30) throw InvalidArgument("grover needs 1..30 qubits");
  if (target >= (std::uint64_t{1} << qubits)) {
    throw InvalidArgument("grover target " + std::to_string(target) + " out of range");
  }
  if (iterations < 1) throw InvalidArgument("grover needs at least one iteration");
}

int default_grover_iterations(int n) {
  const double k = std::round(std::numbers::pi / 4.0 * std::sqrt(std::ldexp(1.0, n)));
  return std::max(1, static_cast<int>(k));
}

std::vector<int> grover_oracle_flips(int n, std::uint64_t target) {
  std::vector<int> flips;
  for (int q = 0; q < n; ++q) {
    if (((target >> (n - 1 - q)) & 1U) == 0) flips.push_back(q);
  }
  return flips;
}

Circuit build_grover_oracle(int n, std::uint64_t target) {
  GroverSpec{n, target, 1}.validate();
  Circuit c{n, {}, "grover-oracle"};
  const auto flips = grover_oracle_flips(n, target);
  std::vector<int> controls = all_qubits(n - 1);
  if (!flips.empty()) c.ops.push_back({GateKind::X, 0, {}, flips});
  c.ops.push_back({GateKind::CZ, 0, controls, {n - 1}});
  if (!flips.empty()) c.ops.push_back({GateKind::X, 0, {}, flips});
  return c;
}

Circuit build_grover(const GroverSpec& spec) {
  spec.validate();
  const int n = spec.qubits;
  const auto all = all_qubits(n);
  const std::vector<int> controls = all_qubits(n - 1);
  Circuit c{n, {}, "grover"};
  c.ops.push_back({GateKind::H, 0, {}, all});
  const Circuit oracle = build_grover_oracle(n, spec.target);
  for (int it = 0; it < spec.iterations; ++it) {
    c.ops.insert(c.ops.end(), oracle.ops.begin(), oracle.ops.end());
    c.ops.push_back({GateKind::H, 0, {}, all});
    c.ops.push_back({GateKind::X, 0, {}, all});
    c.ops.push_back({GateKind::CZ, 0, controls, {n - 1}});
    c.ops.push_back({GateKind::X, 0, {}, all});
    c.ops.push_back({GateKind::H, 0, {}, all});
  }
  return c;
}

Circuit build_qft(int m) {
  require_positive(m, "build_qft");
  Circuit c{m, {}, "qft"};
  for (int i = 0; i < m; ++i) {
    c.ops.push_back({GateKind::H, 0, {}, {i}});
    for (int j = i + 1; j < m; ++j) c.ops.push_back({GateKind::R, j - i + 1, {j}, {i}});
  }
  if (m > 1) c.ops.push_back({GateKind::SWAPREV, 0, {}, all_qubits(m)});
  return c;
}

nlohmann::json circuit_to_json(const Circuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const auto& op : c.ops) {
    nlohmann::json g;
    g["name"] = gate_name(op.kind);
    if (op.kind == GateKind::R) g["k"] = op.k;
    g["controls"] = op.controls;
    g["targets"] = op.targets;
    gates.push_back(std::move(g));
  }
  nlohmann::json j;
  j["qubits"] = c.qubits;
  if (!c.label.empty()) j["label"] = c.label;
  j["gates"] = std::move(gates);
  return j;
}

Circuit circuit_from_json(const nlohmann::json& j) {
  try {
    Circuit c;
    c.qubits = j.at("qubits").get<int>();
    if (j.contains("label")) c.label = j.at("label").get<std::string>();
    for (const auto& g : j.at("gates")) {
      Operation op;
      const auto name = g.at("name").get<std::string>();
      const auto kind = parse_gate_name(name);
      if (!kind) throw InvalidArgument("unknown gate name '" + name + "'");
      op.kind = *kind;
      if (op.kind == GateKind::R) op.k = g.at("k").get<int>();
      if (g.contains("controls")) op.controls = g.at("controls").get<std::vector<int>>();
      op.targets = g.at("targets").get<std::vector<int>>();
      c.ops.push_back(std::move(op));
    }
    c.validate();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed circuit JSON: ") + e.what());
  }
}

}  // namespace aqed
