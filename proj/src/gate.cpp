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

#include "qbpm/gate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qbpm {

namespace {

void require_distinct(std::span<const Qubit> qubits) {
  std::vector<Qubit> sorted(qubits.begin(), qubits.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("gate qubit indices must be distinct");
  }
}

}  // namespace

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kHadamard:
      return "Hadamard";
    case GateKind::kPhase:
      return "Phase";
    case GateKind::kControlledPhase:
      return "ControlledPhase";
    case GateKind::kMultiControlledPhase:
      return "MultiControlledPhase";
    case GateKind::kSwap:
      return "Swap";
  }
  return "Unknown";
}

double fold_phase(long double phi) {
  if (!std::isfinite(phi)) {
    throw std::invalid_argument("phase angle must be finite");
  }
  constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;
  constexpr long double kPi = std::numbers::pi_v<long double>;
  long double r = std::remainder(phi, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  if (r > kPi) r -= kTwoPi;
  auto folded = static_cast<double>(r);
  // Rounding to double can land exactly on -pi.
  if (folded <= -std::numbers::pi) folded = std::numbers::pi;
  return folded;
}

Gate::Gate(GateKind kind, std::vector<Qubit> qubits, double phi)
    : kind_(kind), qubits_(std::move(qubits)), phi_(phi) {
  require_distinct(qubits_);
}

Gate Gate::hadamard(Qubit target) {
  return Gate(GateKind::kHadamard, {target}, 0.0);
}

Gate Gate::phase(Qubit target, double phi) {
  return Gate(GateKind::kPhase, {target}, fold_phase(phi));
}

Gate Gate::controlled_phase(Qubit control, Qubit target, double phi) {
  return Gate(GateKind::kControlledPhase, {control, target}, fold_phase(phi));
}

Gate Gate::multi_controlled_phase(std::vector<Qubit> controls, Qubit target,
                                  double phi) {
  if (controls.empty()) {
    throw std::invalid_argument("multi-controlled phase needs a control");
  }
  controls.push_back(target);
  return Gate(GateKind::kMultiControlledPhase, std::move(controls),
              fold_phase(phi));
}

Gate Gate::swap(Qubit a, Qubit b) { return Gate(GateKind::kSwap, {a, b}, 0.0); }

Qubit Gate::max_qubit() const {
  return *std::max_element(qubits_.begin(), qubits_.end());
}

Gate Gate::adjoint() const {
  if (!is_diagonal()) return *this;
  return Gate(kind_, qubits_, fold_phase(-static_cast<long double>(phi_)));
}

}  // namespace qbpm
