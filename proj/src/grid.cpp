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

#include "qbpm/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qbpm {

std::int64_t twos_complement_value(std::uint64_t index, std::size_t n_bits) {
  if (n_bits < 1 || n_bits > 62) {
    throw std::invalid_argument("two's-complement width out of range");
  }
  const std::uint64_t half = std::uint64_t{1} << (n_bits - 1);
  if (index >= 2 * half) throw std::out_of_range("index exceeds word width");
  return index < half ? static_cast<std::int64_t>(index)
                      : static_cast<std::int64_t>(index) -
                            static_cast<std::int64_t>(2 * half);
}

GridSpec::GridSpec(std::size_t n_qubits, double dx)
    : n_qubits_(n_qubits), dx_(dx) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("grid qubit count out of range");
  }
  if (!(dx > 0.0) || !std::isfinite(dx)) {
    throw std::invalid_argument("grid spacing must be positive");
  }
}

GridSpec GridSpec::from_length(std::size_t n_qubits, double length) {
  if (!(length > 0.0)) throw std::invalid_argument("domain length must be > 0");
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("grid qubit count out of range");
  }
  return GridSpec(n_qubits, length / static_cast<double>(std::size_t{1}
                                                         << n_qubits));
}

double GridSpec::d_alpha() const {
  return 2.0 * std::numbers::pi / (static_cast<double>(size()) * dx_);
}

double GridSpec::coordinate(std::size_t index) const {
  return (static_cast<double>(index) - static_cast<double>(size() / 2)) * dx_;
}

double GridSpec::frequency(std::size_t index) const {
  return static_cast<double>(twos_complement_value(index, n_qubits_)) *
         d_alpha();
}

Field1D::Field1D(GridSpec g, std::vector<Complex> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != grid.size()) {
    throw std::invalid_argument("field length does not match its grid");
  }
}

std::vector<double> Field1D::intensity() const {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = std::norm(values[i]);
  return out;
}

Field2D::Field2D(GridSpec gx, GridSpec gy, std::vector<Complex> v)
    : grid_x(gx), grid_y(gy), values(std::move(v)) {
  if (values.size() != grid_x.size() * grid_y.size()) {
    throw std::invalid_argument("field shape does not match its grids");
  }
}

std::vector<double> Field2D::intensity() const {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = std::norm(values[i]);
  return out;
}

void normalize_l2(std::vector<Complex>& values) {
  double s = 0.0;
  for (const auto& v : values) s += std::norm(v);
  if (!(s > 0.0)) throw std::invalid_argument("cannot normalize a zero field");
  const double scale = 1.0 / std::sqrt(s);
  for (auto& v : values) v *= scale;
}

void normalize_sum(std::vector<double>& values) {
  double s = 0.0;
  for (double v : values) s += v;
  if (!(s > 0.0)) {
    throw std::invalid_argument("cannot normalize a distribution with sum <= 0");
  }
  for (auto& v : values) v /= s;
}

}  // namespace qbpm
