// Copyright 2026 The QBPM Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qbpm/circuit.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qbpm {

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("circuit qubit count out of range");
  }
}

Circuit& Circuit::append(Gate gate) {
  if (gate.max_qubit() >= n_qubits_) {
    throw std::out_of_range(fmt::format(
        "{} on qubit {} does not fit a {}-qubit circuit",
        to_string(gate.kind()), gate.max_qubit(), n_qubits_));
  }
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits() > n_qubits_) {
    throw std::out_of_range("appended circuit is wider than the target");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

std::map<GateKind, std::size_t> gate_count(const Circuit& circuit) {
  std::map<GateKind, std::size_t> counts;
  for (GateKind kind : kAllGateKinds) counts[kind] = 0;
  for (const Gate& g : circuit.gates()) ++counts[g.kind()];
  return counts;
}

StateVector run(const Circuit& circuit, StateVector state) {
  if (circuit.n_qubits() != state.n_qubits()) {
    throw std::invalid_argument(
        fmt::format("circuit has {} qubits but the state has {}",
                    circuit.n_qubits(), state.n_qubits()));
  }
  for (const Gate& g : circuit.gates()) state.apply(g);
  return state;
}

Circuit inverse(const Circuit& circuit) {
  Circuit out(circuit.n_qubits());
  const auto gates = circuit.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    out.append(it->adjoint());
  }
  return out;
}

Circuit shifted(const Circuit& circuit, std::size_t offset,
                std::size_t n_qubits) {
  Circuit out(n_qubits);
  for (const Gate& g : circuit.gates()) {
    const auto q = g.qubits();
    switch (g.kind()) {
      case GateKind::kHadamard:
        out.append(Gate::hadamard(q[0] + offset));
        break;
      case GateKind::kPhase:
        out.append(Gate::phase(q[0] + offset, g.phi()));
        break;
      case GateKind::kControlledPhase:
        out.append(Gate::controlled_phase(q[0] + offset, q[1] + offset,
                                          g.phi()));
        break;
      case GateKind::kMultiControlledPhase: {
        std::vector<Qubit> controls;
        for (Qubit c : g.controls()) controls.push_back(c + offset);
        out.append(Gate::multi_controlled_phase(std::move(controls),
                                                g.target() + offset, g.phi()));
        break;
      }
      case GateKind::kSwap:
        out.append(Gate::swap(q[0] + offset, q[1] + offset));
        break;
    }
  }
  return out;
}

std::string to_qasm_text(const Circuit& circuit) {
  const auto gates = circuit.gates();
  const bool needs_ccp =
      std::any_of(gates.begin(), gates.end(), [](const Gate& g) {
        return g.kind() == GateKind::kMultiControlledPhase;
      });

  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  if (needs_ccp) {
    // phi*a*b*t = phi/2*(a*t + b*t - (a xor b)*t)
    out +=
        "gate ccp(theta) a,b,c { cp(theta/2) a,c; cp(theta/2) b,c; cx a,b; "
        "cp(-theta/2) b,c; cx a,b; }\n";
  }
  out += fmt::format("qreg q[{}];\n", circuit.n_qubits());

  for (const Gate& g : gates) {
    const auto q = g.qubits();
    switch (g.kind()) {
      case GateKind::kHadamard:
        out += fmt::format("h q[{}];\n", q[0]);
        break;
      case GateKind::kPhase:
        out += fmt::format("p({:.17g}) q[{}];\n", g.phi(), q[0]);
        break;
      case GateKind::kControlledPhase:
        out += fmt::format("cp({:.17g}) q[{}],q[{}];\n", g.phi(), q[0], q[1]);
        break;
      case GateKind::kMultiControlledPhase:
        if (q.size() != 3) {
          throw std::invalid_argument(fmt::format(
              "QASM export supports at most 2 controls, gate has {}",
              q.size() - 1));
        }
        out += fmt::format("ccp({:.17g}) q[{}],q[{}],q[{}];\n", g.phi(), q[0],
                           q[1], q[2]);
        break;
      case GateKind::kSwap:
        out += fmt::format("swap q[{}],q[{}];\n", q[0], q[1]);
        break;
    }
  }
  return out;
}

}  // namespace qbpm
