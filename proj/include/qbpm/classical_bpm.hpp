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

#include <span>
#include <vector>

#include "qbpm/grid.hpp"
#include "qbpm/propagator.hpp"
#include "qbpm/qft.hpp"

namespace qbpm {

/// In-place unitary FFT (1/sqrt(N) on both directions) with kernel
/// exp(sign*2*pi*i*x*y/N). Output is in FFT order.
void fft_unitary(std::vector<Complex>& data, FourierSign sign);

/// 2D variant over values[iy * nx + ix].
void fft2_unitary(std::vector<Complex>& data, std::size_t nx, std::size_t ny,
                  FourierSign sign);

/// Classical split-step propagation: forward FFT (exp(-i alpha x)), multiply
/// by exp(i * polynomial(alpha) * z), inverse FFT. The paraxial overloads use
/// exp(-i alpha^2 z / (2k)) and drop the global exp(ikz).
Field1D propagate_1d(const Field1D& field, double wavelength, double z);
Field1D propagate_1d(const Field1D& field, const DispersionPolynomial& poly,
                     double z);

/// Transfer phase polynomial(alpha) + polynomial(beta); for the paraxial
/// polynomial this is -(alpha^2 + beta^2) z / (2k).
Field2D propagate_2d(const Field2D& field, double wavelength, double z);
Field2D propagate_2d(const Field2D& field, const DispersionPolynomial& poly,
                     double z);

/// sqrt(sum (ref - num)^2 / sum ref) after both inputs are scaled to unit sum.
double rmse(std::span<const double> i_ref, std::span<const double> i_num);

}  // namespace qbpm
