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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qbpm/gate.hpp"

namespace qbpm {

using Complex = std::complex<double>;

/// Largest register the dense simulator will allocate.
inline constexpr std::size_t kMaxQubits = 28;

/// True if `n` is a power of two and at least 2.
bool is_qubit_register_size(std::size_t n);

/// log2 of a power-of-two size; throws if `n` is not one.
std::size_t qubits_for_size(std::size_t n);

/**
 * Dense statevector over n qubits.
 *
 * Basis index convention: qubit j carries bit j of the index (qubit 0 is the
 * least significant bit). The register is always unit norm; the only way in
 * is through factories that normalize.
 */
class StateVector {
 public:
  /// Loads `values / ||values||`. Length must be a power of two >= 2.
  static StateVector from_amplitudes(std::span<const Complex> values);
  static StateVector basis(std::size_t n_qubits, std::uint64_t index);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t size() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t index) const {
    return amplitudes_[index];
  }

  /// In-place gate application. Throws std::out_of_range if the gate touches
  /// a qubit outside the register.
  void apply(const Gate& gate);

  std::vector<double> probabilities() const;
  double norm() const;

 private:
  StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
      : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

  std::size_t n_qubits_;
  std::vector<Complex> amplitudes_;
};

StateVector apply_gate(StateVector state, const Gate& gate);

/// |<a|b>|^2 for two registers of equal size.
double fidelity(const StateVector& a, const StateVector& b);

/// Shot histogram over basis indices; counts[i] is the number of shots that
/// collapsed onto |i>.
struct SampleCounts {
  std::vector<std::uint64_t> counts;
  std::uint64_t total_shots = 0;

  /// counts / total_shots.
  std::vector<double> frequencies() const;
};

/// Multinomial draw of `n_shots` basis indices from `probabilities`.
/// Deterministic for a given seed. The probabilities need not be exactly
/// normalized; they are used relative to their sum.
SampleCounts sample_distribution(std::span<const double> probabilities,
                                 std::uint64_t n_shots, std::uint64_t seed);

SampleCounts sample(const StateVector& state, std::uint64_t n_shots,
                    std::uint64_t seed);

}  // namespace qbpm
