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

#include "qbpm/propagator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qbpm/qft.hpp"

namespace qbpm {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("monomial coefficient exceeds 64 bits");
  }
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("monomial coefficient exceeds 64 bits");
  }
  return r;
}

void check_physical(double wavelength, double z) {
  if (!(wavelength > 0.0) || !std::isfinite(wavelength)) {
    throw std::invalid_argument("wavelength must be positive");
  }
  if (!(z >= 0.0) || !std::isfinite(z)) {
    throw std::invalid_argument("propagation distance must be >= 0");
  }
}

}  // namespace

std::vector<MonomialTerm> decompose_monomial(std::size_t n, int p) {
  if (p < 1 || p > kMaxMonomialOrder) {
    throw std::invalid_argument("monomial order must be in [1, 4], got " +
                                std::to_string(p));
  }
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("register width out of range");
  }

  // Digit weights of the two's-complement expansion; the sign bit is
  // negative. gamma^p = sum over ordered p-tuples of prod weight * prod a,
  // and the digit product only depends on the set of distinct indices.
  std::vector<std::int64_t> weight(n);
  for (std::size_t j = 0; j < n; ++j) {
    weight[j] = std::int64_t{1} << j;
  }
  weight[n - 1] = -weight[n - 1];

  std::map<std::uint64_t, std::int64_t> by_mask;
  std::vector<std::size_t> tuple(static_cast<std::size_t>(p), 0);
  while (true) {
    std::int64_t product = 1;
    std::uint64_t mask = 0;
    for (std::size_t idx : tuple) {
      product = checked_mul(product, weight[idx]);
      mask |= std::uint64_t{1} << idx;
    }
    auto& slot = by_mask[mask];
    slot = checked_add(slot, product);

    // Odometer over [0, n)^p.
    std::size_t pos = 0;
    while (pos < tuple.size() && ++tuple[pos] == n) tuple[pos++] = 0;
    if (pos == tuple.size()) break;
  }

  std::vector<MonomialTerm> terms;
  for (const auto& [mask, coefficient] : by_mask) {
    if (coefficient == 0) continue;
    MonomialTerm t;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::uint64_t{1} << j)) t.qubits.push_back(j);
    }
    t.coefficient = coefficient;
    terms.push_back(std::move(t));
  }
  std::sort(terms.begin(), terms.end(),
            [](const MonomialTerm& a, const MonomialTerm& b) {
              if (a.qubits.size() != b.qubits.size()) {
                return a.qubits.size() < b.qubits.size();
              }
              return a.qubits < b.qubits;
            });
  return terms;
}

std::int64_t evaluate_terms(std::span<const MonomialTerm> terms,
                            std::uint64_t index) {
  std::int64_t sum = 0;
  for (const auto& t : terms) {
    const bool all_set = std::all_of(t.qubits.begin(), t.qubits.end(),
                                     [&](Qubit q) { return (index >> q) & 1; });
    if (all_set) sum = checked_add(sum, t.coefficient);
  }
  return sum;
}

PhaseAngle PhaseAngle::paraxial(double z, double wavelength,
                                const GridSpec& grid) {
  check_physical(wavelength, z);
  const double k = 2.0 * std::numbers::pi / wavelength;
  const double n_points = static_cast<double>(grid.size());
  const double dx = grid.dx();
  return PhaseAngle{-2.0 * std::numbers::pi * std::numbers::pi * z /
                    (n_points * n_points * dx * dx * k)};
}

DispersionPolynomial DispersionPolynomial::paraxial(double wavelength) {
  check_physical(wavelength, 0.0);
  const double k = 2.0 * std::numbers::pi / wavelength;
  DispersionPolynomial poly;
  poly.set(2, -1.0 / (2.0 * k));
  return poly;
}

DispersionPolynomial& DispersionPolynomial::set(int order, double coefficient) {
  if (order < 1 || order > kMaxMonomialOrder) {
    throw std::invalid_argument("dispersion order must be in [1, 4]");
  }
  if (!std::isfinite(coefficient)) {
    throw std::invalid_argument("dispersion coefficient must be finite");
  }
  coefficients_[order] = coefficient;
  return *this;
}

double DispersionPolynomial::transfer_phase(double alpha, double z) const {
  double phase = 0.0;
  for (const auto& [order, c] : coefficients_) {
    phase += c * std::pow(alpha, order) * z;
  }
  return phase;
}

std::map<int, double> DispersionPolynomial::phases_per_order(
    double z, const GridSpec& grid) const {
  std::map<int, double> phases;
  for (const auto& [order, c] : coefficients_) {
    phases[order] = c * z * std::pow(grid.d_alpha(), order);
  }
  return phases;
}

Circuit build_monomial_propagator(std::size_t n, int p, PhaseAngle phi) {
  if (!std::isfinite(phi.radians)) {
    throw std::invalid_argument("phase must be finite");
  }
  const auto terms = decompose_monomial(n, p);
  Circuit c(n);
  for (const auto& t : terms) {
    const double angle = fold_phase(static_cast<long double>(t.coefficient) *
                                    static_cast<long double>(phi.radians));
    switch (t.qubits.size()) {
      case 1:
        c.append(Gate::phase(t.qubits[0], angle));
        break;
      case 2:
        c.append(Gate::controlled_phase(t.qubits[0], t.qubits[1], angle));
        break;
      default: {
        std::vector<Qubit> controls(t.qubits.begin(), t.qubits.end() - 1);
        c.append(Gate::multi_controlled_phase(std::move(controls),
                                              t.qubits.back(), angle));
        break;
      }
    }
  }
  return c;
}

Circuit build_propagator(std::size_t n,
                         const std::map<int, double>& phases_per_order) {
  Circuit c(n);
  for (const auto& [order, phi] : phases_per_order) {
    c.append(build_monomial_propagator(n, order, PhaseAngle{phi}));
  }
  return c;
}

std::vector<Complex> diagonal_oracle(
    std::size_t n, const std::map<int, double>& phases_per_order) {
  if (n < 1 || n > 14) {
    throw std::invalid_argument("diagonal oracle width must be in [1, 14]");
  }
  constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Complex> out(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    const long double gamma = static_cast<long double>(twos_complement_value(b, n));
    long double phase = 0.0L;
    for (const auto& [order, phi] : phases_per_order) {
      phase += std::fmod(static_cast<long double>(phi) * std::pow(gamma, order),
                         kTwoPi);
    }
    out[b] = std::polar(1.0, static_cast<double>(phase));
  }
  return out;
}

Circuit build_qbpm_circuit(const GridSpec& grid, double wavelength, double z,
                           const std::optional<DispersionPolynomial>& polynomial) {
  check_physical(wavelength, z);
  const std::size_t n = grid.n_qubits();
  if (n > kMaxQftQubits) {
    throw std::invalid_argument("1D QBPM register limited to 24 qubits");
  }
  const DispersionPolynomial poly =
      polynomial ? *polynomial : DispersionPolynomial::paraxial(wavelength);

  Circuit c(n);
  c.append(build_qft(n, FourierSign::kNegative));
  c.append(build_propagator(n, poly.phases_per_order(z, grid)));
  c.append(build_iqft(n, FourierSign::kNegative));
  return c;
}

Circuit build_qbpm_circuit_2d(
    const GridSpec& grid_x, const GridSpec& grid_y, double wavelength, double z,
    const std::optional<DispersionPolynomial>& polynomial) {
  const std::size_t nx = grid_x.n_qubits();
  const std::size_t ny = grid_y.n_qubits();
  if (nx + ny > kMaxQftQubits) {
    throw std::invalid_argument("2D QBPM register limited to 24 qubits total");
  }
  const std::size_t total = nx + ny;
  Circuit c(total);
  c.append(shifted(build_qbpm_circuit(grid_x, wavelength, z, polynomial), 0,
                   total));
  c.append(shifted(build_qbpm_circuit(grid_y, wavelength, z, polynomial), nx,
                   total));
  return c;
}

}  // namespace qbpm
