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

#include "qbpm/classical_bpm.hpp"

#include <fftw3.h>

#include <cmath>
#include <memory>
#include <stdexcept>

namespace qbpm {

namespace {

struct PlanDeleter {
  void operator()(fftw_plan_s* plan) const { fftw_destroy_plan(plan); }
};
using Plan = std::unique_ptr<fftw_plan_s, PlanDeleter>;

fftw_complex* as_fftw(std::vector<Complex>& data) {
  return reinterpret_cast<fftw_complex*>(data.data());
}

int fftw_sign(FourierSign sign) {
  return sign == FourierSign::kNegative ? FFTW_FORWARD : FFTW_BACKWARD;
}

void scale(std::vector<Complex>& data) {
  const double s = 1.0 / std::sqrt(static_cast<double>(data.size()));
  for (auto& v : data) v *= s;
}

void check_distance(double z) {
  if (!(z >= 0.0) || !std::isfinite(z)) {
    throw std::invalid_argument("propagation distance must be >= 0");
  }
}

}  // namespace

void fft_unitary(std::vector<Complex>& data, FourierSign sign) {
  qubits_for_size(data.size());
  Plan plan(fftw_plan_dft_1d(static_cast<int>(data.size()), as_fftw(data),
                             as_fftw(data), fftw_sign(sign), FFTW_ESTIMATE));
  fftw_execute(plan.get());
  scale(data);
}

void fft2_unitary(std::vector<Complex>& data, std::size_t nx, std::size_t ny,
                  FourierSign sign) {
  if (data.size() != nx * ny) {
    throw std::invalid_argument("2D FFT shape mismatch");
  }
  // Row-major with the last dimension fastest: (ny, nx).
  Plan plan(fftw_plan_dft_2d(static_cast<int>(ny), static_cast<int>(nx),
                             as_fftw(data), as_fftw(data), fftw_sign(sign),
                             FFTW_ESTIMATE));
  fftw_execute(plan.get());
  scale(data);
}

Field1D propagate_1d(const Field1D& field, const DispersionPolynomial& poly,
                     double z) {
  check_distance(z);
  std::vector<Complex> spectrum = field.values;
  fft_unitary(spectrum, FourierSign::kNegative);
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    spectrum[i] *=
        std::polar(1.0, poly.transfer_phase(field.grid.frequency(i), z));
  }
  fft_unitary(spectrum, FourierSign::kPositive);
  return Field1D(field.grid, std::move(spectrum));
}

Field1D propagate_1d(const Field1D& field, double wavelength, double z) {
  return propagate_1d(field, DispersionPolynomial::paraxial(wavelength), z);
}

Field2D propagate_2d(const Field2D& field, const DispersionPolynomial& poly,
                     double z) {
  check_distance(z);
  const std::size_t nx = field.grid_x.size();
  const std::size_t ny = field.grid_y.size();
  std::vector<Complex> spectrum = field.values;
  fft2_unitary(spectrum, nx, ny, FourierSign::kNegative);

  std::vector<double> phase_x(nx);
  std::vector<double> phase_y(ny);
  for (std::size_t ix = 0; ix < nx; ++ix) {
    phase_x[ix] = poly.transfer_phase(field.grid_x.frequency(ix), z);
  }
  for (std::size_t iy = 0; iy < ny; ++iy) {
    phase_y[iy] = poly.transfer_phase(field.grid_y.frequency(iy), z);
  }
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      spectrum[iy * nx + ix] *= std::polar(1.0, phase_x[ix] + phase_y[iy]);
    }
  }
  fft2_unitary(spectrum, nx, ny, FourierSign::kPositive);
  return Field2D(field.grid_x, field.grid_y, std::move(spectrum));
}

Field2D propagate_2d(const Field2D& field, double wavelength, double z) {
  return propagate_2d(field, DispersionPolynomial::paraxial(wavelength), z);
}

double rmse(std::span<const double> i_ref, std::span<const double> i_num) {
  if (i_ref.size() != i_num.size()) {
    throw std::invalid_argument("rmse inputs differ in length");
  }
  double ref_sum = 0.0;
  double num_sum = 0.0;
  for (double v : i_ref) ref_sum += v;
  for (double v : i_num) num_sum += v;
  if (!(ref_sum > 0.0)) {
    throw std::invalid_argument("rmse reference intensity sums to zero");
  }
  if (!(num_sum > 0.0)) {
    throw std::invalid_argument("rmse numerical intensity sums to zero");
  }
  // With the reference at unit sum the denominator is 1.
  double acc = 0.0;
  for (std::size_t i = 0; i < i_ref.size(); ++i) {
    const double d = i_ref[i] / ref_sum - i_num[i] / num_sum;
    acc += d * d;
  }
  return std::sqrt(acc);
}

}  // namespace qbpm
