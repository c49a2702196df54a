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

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qbpm/gate.hpp"
#include "qbpm/state_vector.hpp"

namespace qbpm {

/// Ordered gate list over a fixed register width.
class Circuit {
 public:
  explicit Circuit(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  std::span<const Gate> gates() const { return gates_; }

  /// Throws std::out_of_range if the gate does not fit the register.
  Circuit& append(Gate gate);
  /// Appends every gate of `other`, which must not be wider than this.
  Circuit& append(const Circuit& other);

 private:
  std::size_t n_qubits_;
  std::vector<Gate> gates_;
};

/// Per-kind gate counts; every kind is present (zero if unused).
std::map<GateKind, std::size_t> gate_count(const Circuit& circuit);

/// Applies the gates in order. Throws on register-width mismatch.
StateVector run(const Circuit& circuit, StateVector state);

/// Reversed gate order with each gate replaced by its adjoint.
Circuit inverse(const Circuit& circuit);

/// Copy of `circuit` with every qubit index moved up by `offset`, placed in a
/// register of `n_qubits` qubits.
Circuit shifted(const Circuit& circuit, std::size_t offset,
                std::size_t n_qubits);

/**
 * OpenQASM 2.0 text.
 *
 * Emits `h`, `p`, `cp` and `swap` with qelib1 semantics. Doubly controlled
 * phases are emitted as calls to a `ccp` gate whose definition is added to
 * the header when needed; more than two controls is rejected with
 * std::invalid_argument. Angles are printed with 17 significant digits.
 */
std::string to_qasm_text(const Circuit& circuit);

}  // namespace qbpm
