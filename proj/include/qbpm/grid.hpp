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
#include <cstdint>
#include <vector>

#include "qbpm/state_vector.hpp"

namespace qbpm {

/// Signed value of an n-bit two's-complement word, in [-2^(n-1), 2^(n-1)).
std::int64_t twos_complement_value(std::uint64_t index, std::size_t n_bits);

/**
 * Equidistant transverse grid of N = 2^n points.
 *
 * Sample i sits at x_i = (i - N/2) * dx, so the grid spans
 * [-N/2, N/2 - 1] * dx with x = 0 at index N/2. Frequencies use FFT order:
 * index i carries alpha = gamma(i) * d_alpha with gamma the two's-complement
 * value of i, and d_alpha = 2*pi / (N * dx).
 */
class GridSpec {
 public:
  GridSpec(std::size_t n_qubits, double dx);
  static GridSpec from_length(std::size_t n_qubits, double length);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t size() const { return std::size_t{1} << n_qubits_; }
  double dx() const { return dx_; }
  double length() const { return dx_ * static_cast<double>(size()); }
  double d_alpha() const;

  double coordinate(std::size_t index) const;
  double frequency(std::size_t index) const;

  bool operator==(const GridSpec&) const = default;

 private:
  std::size_t n_qubits_;
  double dx_;
};

struct Field1D {
  GridSpec grid;
  std::vector<Complex> values;

  Field1D(GridSpec g, std::vector<Complex> v);
  std::vector<double> intensity() const;
};

/// Two transverse axes; values are stored with x fastest,
/// values[iy * nx + ix], which is also the register layout of a 2n-qubit
/// state whose low n qubits encode x.
struct Field2D {
  GridSpec grid_x;
  GridSpec grid_y;
  std::vector<Complex> values;

  Field2D(GridSpec gx, GridSpec gy, std::vector<Complex> v);
  Complex at(std::size_t ix, std::size_t iy) const {
    return values[iy * grid_x.size() + ix];
  }
  std::vector<double> intensity() const;
};

/// Scales `values` in place to unit l2 norm; throws if all zero.
void normalize_l2(std::vector<Complex>& values);

/// Scales `values` in place to unit sum; throws if the sum is not positive.
void normalize_sum(std::vector<double>& values);

}  // namespace qbpm
