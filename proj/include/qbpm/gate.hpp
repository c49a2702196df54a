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
#include <span>
#include <string_view>
#include <vector>

namespace qbpm {

using Qubit = std::size_t;

enum class GateKind {
  kHadamard,
  kPhase,
  kControlledPhase,
  kMultiControlledPhase,
  kSwap,
};

inline constexpr GateKind kAllGateKinds[] = {
    GateKind::kHadamard, GateKind::kPhase, GateKind::kControlledPhase,
    GateKind::kMultiControlledPhase, GateKind::kSwap};

std::string_view to_string(GateKind kind);

/// Reduces an angle modulo 2*pi into (-pi, pi].
///
/// Takes a long double so that products like coefficient * phi with large
/// integer coefficients keep their low-order bits until the reduction.
double fold_phase(long double phi);

/**
 * A single gate of the circuit IR.
 *
 * Qubits are stored in a flat list whose layout depends on the kind:
 *  - Hadamard, Phase: {target}
 *  - ControlledPhase: {control, target}
 *  - MultiControlledPhase: {controls..., target}
 *  - Swap: {a, b}
 *
 * Construction goes through the named factories, which reject duplicate
 * qubit indices and fold the phase into (-pi, pi].
 */
class Gate {
 public:
  static Gate hadamard(Qubit target);
  static Gate phase(Qubit target, double phi);
  static Gate controlled_phase(Qubit control, Qubit target, double phi);
  static Gate multi_controlled_phase(std::vector<Qubit> controls, Qubit target,
                                     double phi);
  static Gate swap(Qubit a, Qubit b);

  GateKind kind() const { return kind_; }
  std::span<const Qubit> qubits() const { return qubits_; }
  Qubit target() const { return qubits_.back(); }
  /// Every qubit except the target; empty for single-qubit gates.
  std::span<const Qubit> controls() const {
    return std::span<const Qubit>(qubits_).first(qubits_.size() - 1);
  }
  double phi() const { return phi_; }

  bool is_diagonal() const {
    return kind_ != GateKind::kHadamard && kind_ != GateKind::kSwap;
  }
  Qubit max_qubit() const;

  /// Hadamard and Swap are self-inverse; phase gates get a negated angle.
  Gate adjoint() const;

  bool operator==(const Gate&) const = default;

 private:
  Gate(GateKind kind, std::vector<Qubit> qubits, double phi);

  GateKind kind_;
  std::vector<Qubit> qubits_;
  double phi_ = 0.0;
};

}  // namespace qbpm
