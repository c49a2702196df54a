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

// Diagonal transfer-function synthesis.
//
// A frequency register |b> holds the two's-complement integer
//   gamma = -a_{n-1} 2^{n-1} + sum_{j<n-1} a_j 2^j .
// Expanding gamma^p with the multinomial theorem and collapsing a_j^m = a_j
// turns exp(i phi gamma^p) into a product of phase gates, one per distinct
// qubit subset of size <= p, each conditioned on all qubits of its subset
// being |1>. For p = 2 this yields n singles and n(n-1)/2 pairs.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "qbpm/circuit.hpp"
#include "qbpm/grid.hpp"

namespace qbpm {

inline constexpr int kMaxMonomialOrder = 4;

/// coefficient * prod_{j in qubits} a_j, qubits sorted ascending.
struct MonomialTerm {
  std::vector<Qubit> qubits;
  std::int64_t coefficient = 0;

  bool operator==(const MonomialTerm&) const = default;
};

/// Terms whose sum over any n-bit register equals gamma^p exactly. Terms are
/// ordered by subset size, then lexicographically; zero coefficients are
/// dropped. Throws std::invalid_argument for p outside [1, 4] and
/// std::overflow_error if a coefficient does not fit in 64 bits.
std::vector<MonomialTerm> decompose_monomial(std::size_t n, int p);

/// sum_t coefficient_t * prod a_j evaluated on the bits of `index`.
std::int64_t evaluate_terms(std::span<const MonomialTerm> terms,
                            std::uint64_t index);

/// Per-gate phase unit. The physical paraxial value is
/// -2 pi^2 z / (N^2 dx^2 k) with k = 2 pi / wavelength.
struct PhaseAngle {
  double radians = 0.0;

  static PhaseAngle paraxial(double z, double wavelength, const GridSpec& grid);
};

/**
 * Transfer phase sum_p c_p alpha^p z (orders 1..4).
 *
 * The paraxial polynomial is {2: -1/(2k)}, i.e. exp(-i alpha^2 z / (2k));
 * the constant exp(ikz) is not represented.
 */
class DispersionPolynomial {
 public:
  DispersionPolynomial() = default;
  static DispersionPolynomial paraxial(double wavelength);

  DispersionPolynomial& set(int order, double coefficient);
  const std::map<int, double>& coefficients() const { return coefficients_; }

  double transfer_phase(double alpha, double z) const;

  /// phi_p = c_p z d_alpha^p, so that the phase at frequency index gamma is
  /// sum_p phi_p gamma^p.
  std::map<int, double> phases_per_order(double z, const GridSpec& grid) const;

 private:
  std::map<int, double> coefficients_;
};

/// Diagonal circuit with U|b> = exp(i phi gamma(b)^p)|b>.
Circuit build_monomial_propagator(std::size_t n, int p, PhaseAngle phi);

/// Product of monomial propagators, one per entry of `phases_per_order`.
Circuit build_propagator(std::size_t n,
                         const std::map<int, double>& phases_per_order);

/// exp(i sum_p phi_p gamma(b)^p) for every b, evaluated directly.
std::vector<Complex> diagonal_oracle(
    std::size_t n, const std::map<int, double>& phases_per_order);

/// QFT (kernel sign -1) -> diagonal transfer operator -> inverse QFT.
/// Without an explicit polynomial the paraxial one for `wavelength` is used.
Circuit build_qbpm_circuit(
    const GridSpec& grid, double wavelength, double z,
    const std::optional<DispersionPolynomial>& polynomial = std::nullopt);

/// x propagation on qubits [0, nx), y propagation on [nx, nx + ny).
Circuit build_qbpm_circuit_2d(
    const GridSpec& grid_x, const GridSpec& grid_y, double wavelength, double z,
    const std::optional<DispersionPolynomial>& polynomial = std::nullopt);

}  // namespace qbpm
