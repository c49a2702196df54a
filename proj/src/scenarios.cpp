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

#include "qbpm/scenarios.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qbpm/circuit.hpp"
#include "qbpm/classical_bpm.hpp"
#include "qbpm/propagator.hpp"

namespace qbpm {

namespace {

constexpr double kEdgeTolerance = 1e-9;  // in grid cells
constexpr std::size_t kMinPointsPerFeature = 4;

double sinc(double u) { return u == 0.0 ? 1.0 : std::sin(u) / u; }

double pow2(std::size_t n) { return std::ldexp(1.0, static_cast<int>(n)); }

}  // namespace

double DoubleSlitParams::resolved_domain_length() const {
  return domain_length > 0.0 ? domain_length
                             : width * pow2(n_qubits) / kDefaultCellsPerSlit;
}

GridSpec DoubleSlitParams::grid() const {
  return GridSpec::from_length(n_qubits, resolved_domain_length());
}

void DoubleSlitParams::validate() const {
  if (!(width > 0.0)) throw std::invalid_argument("slit width must be > 0");
  if (!(separation > width)) {
    throw std::invalid_argument("slit separation must exceed the slit width");
  }
  if (!(wavelength > 0.0)) throw std::invalid_argument("wavelength must be > 0");
  if (n_qubits < 1 || n_qubits > 24) {
    throw std::invalid_argument("1D register must have 1..24 qubits");
  }
  if (domain_length < 0.0) {
    throw std::invalid_argument("domain length must be > 0");
  }
  if (!(separation + width < resolved_domain_length())) {
    throw std::invalid_argument("slits do not fit inside the domain");
  }
}

double wrap_distance(const DoubleSlitParams& params) {
  return params.width * params.resolved_domain_length() /
         (2.0 * params.wavelength);
}

Field1D double_slit_initial(const DoubleSlitParams& params,
                            const GridSpec& grid) {
  params.validate();
  if (grid.n_qubits() != params.n_qubits) {
    throw std::invalid_argument("grid does not match the slit register width");
  }
  const std::size_t n = grid.size();
  const double centre = params.separation / (2.0 * grid.dx());
  const double half = params.width / (2.0 * grid.dx()) + kEdgeTolerance;

  std::vector<Complex> values(n);
  std::size_t upper = 0;
  std::size_t lower = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i) - static_cast<double>(n / 2);
    const bool in_upper = std::abs(x - centre) <= half;
    const bool in_lower = std::abs(x + centre) <= half;
    upper += in_upper;
    lower += in_lower;
    if (in_upper || in_lower) values[i] = 1.0;
  }
  if (std::min(upper, lower) < kMinPointsPerFeature) {
    throw std::invalid_argument(fmt::format(
        "slits are under-resolved: {} and {} grid points, need >= {}", lower,
        upper, kMinPointsPerFeature));
  }
  normalize_l2(values);
  return Field1D(grid, std::move(values));
}

std::vector<double> double_slit_analytic(const DoubleSlitParams& params,
                                         const GridSpec& grid, double z) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw std::invalid_argument(
        "far-field slit pattern requires z > 0; use the initial intensity at "
        "z = 0");
  }
  const double pi = std::numbers::pi;
  std::vector<double> intensity(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid.coordinate(i);
    const double sin_theta = x / std::hypot(x, z);
    const double c = std::cos(pi * params.separation * sin_theta /
                              params.wavelength);
    const double s = sinc(pi * params.width * sin_theta / params.wavelength);
    intensity[i] = c * c * s * s;
  }
  normalize_sum(intensity);
  return intensity;
}

std::vector<double> double_slit_reference(const DoubleSlitParams& params,
                                          const GridSpec& grid, double z) {
  if (z == 0.0) {
    auto intensity = double_slit_initial(params, grid).intensity();
    normalize_sum(intensity);
    return intensity;
  }
  return double_slit_analytic(params, grid, z);
}

std::vector<FringeMaximum> locate_fringe_maxima(
    std::span<const double> intensity, const DoubleSlitParams& params,
    const GridSpec& grid, double z, int max_order) {
  if (intensity.size() != grid.size()) {
    throw std::invalid_argument("intensity does not match the grid");
  }
  if (!(z > 0.0)) throw std::invalid_argument("fringes need z > 0");
  const double n_half = static_cast<double>(grid.size() / 2);
  const double spacing =
      params.wavelength * z / (params.separation * grid.dx());
  const auto half_window =
      static_cast<std::ptrdiff_t>(std::max(1.0, std::floor(spacing / 2.0)));

  std::vector<FringeMaximum> out;
  for (int m = -max_order; m <= max_order; ++m) {
    const double s = m * params.wavelength / params.separation;
    if (std::abs(s) >= 1.0) continue;
    const double predicted = n_half + z * std::tan(std::asin(s)) / grid.dx();
    const auto centre = static_cast<std::ptrdiff_t>(std::lround(predicted));
    const auto lo = std::max<std::ptrdiff_t>(0, centre - half_window);
    const auto hi = std::min<std::ptrdiff_t>(
        static_cast<std::ptrdiff_t>(grid.size()) - 1, centre + half_window);
    if (lo > hi) continue;
    auto best = lo;
    for (auto i = lo; i <= hi; ++i) {
      if (intensity[i] > intensity[best]) best = i;
    }
    out.push_back({m, predicted, static_cast<std::size_t>(best)});
  }
  return out;
}

SlitSimulation simulate_double_slit(const DoubleSlitParams& params, double z) {
  const GridSpec grid = params.grid();
  const Field1D initial = double_slit_initial(params, grid);
  const Circuit circuit = build_qbpm_circuit(grid, params.wavelength, z);
  const StateVector out =
      run(circuit, StateVector::from_amplitudes(initial.values));
  return {z, out.probabilities(), double_slit_reference(params, grid, z)};
}

double GaussianParams::rayleigh_length() const {
  const double k = 2.0 * std::numbers::pi / wavelength;
  return k * waist * waist / 2.0;
}

GridSpec GaussianParams::grid_x() const {
  return GridSpec::from_length(
      n_qubits_per_axis,
      domain_x > 0.0 ? domain_x
                     : waist * pow2(n_qubits_per_axis) / kDefaultCellsPerWaist);
}

GridSpec GaussianParams::grid_y() const {
  return GridSpec::from_length(
      n_qubits_per_axis,
      domain_y > 0.0 ? domain_y
                     : waist * pow2(n_qubits_per_axis) / kDefaultCellsPerWaist);
}

void GaussianParams::validate() const {
  if (!(waist > 0.0)) throw std::invalid_argument("waist must be > 0");
  if (!(wavelength > 0.0)) throw std::invalid_argument("wavelength must be > 0");
  if (n_qubits_per_axis < 1 || 2 * n_qubits_per_axis > 24) {
    throw std::invalid_argument("2D register must have 1..12 qubits per axis");
  }
  if (domain_x < 0.0 || domain_y < 0.0) {
    throw std::invalid_argument("domain lengths must be > 0");
  }
}

Field2D gaussian_initial_2d(const GaussianParams& params, const GridSpec& gx,
                            const GridSpec& gy) {
  params.validate();
  const double min_waist = kMinPointsPerFeature * std::max(gx.dx(), gy.dx());
  if (params.waist < min_waist * (1.0 - 1e-12)) {
    throw std::invalid_argument(fmt::format(
        "waist {} is under-resolved; needs >= 4 grid spacings ({})",
        params.waist, min_waist));
  }
  const std::size_t nx = gx.size();
  const std::size_t ny = gy.size();
  const double w2 = params.waist * params.waist;
  std::vector<Complex> values(nx * ny);
  for (std::size_t iy = 0; iy < ny; ++iy) {
    const double dy = gy.coordinate(iy) - params.y0;
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const double dx = gx.coordinate(ix) - params.x0;
      values[iy * nx + ix] = std::exp(-(dx * dx + dy * dy) / w2);
    }
  }
  normalize_l2(values);
  return Field2D(gx, gy, std::move(values));
}

namespace {

double second_moment_radius(std::span<const double> weights,
                            const GridSpec& gx, const GridSpec& gy, double x0,
                            double y0) {
  const std::size_t nx = gx.size();
  const std::size_t ny = gy.size();
  double total = 0.0;
  double moment = 0.0;
  for (std::size_t iy = 0; iy < ny; ++iy) {
    const double dy = gy.coordinate(iy) - y0;
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const double dx = gx.coordinate(ix) - x0;
      const double w = weights[iy * nx + ix];
      total += w;
      moment += (dx * dx + dy * dy) * w;
    }
  }
  if (!(total > 0.0)) throw std::invalid_argument("empty distribution");
  return std::sqrt(moment / total);
}

}  // namespace

double waist_from_counts(const SampleCounts& counts, const GridSpec& gx,
                         const GridSpec& gy, double x0, double y0) {
  if (counts.total_shots == 0) {
    throw std::invalid_argument("waist estimate needs at least one shot");
  }
  if (counts.counts.size() != gx.size() * gy.size()) {
    throw std::invalid_argument("histogram does not match the 2D grid");
  }
  return second_moment_radius(counts.frequencies(), gx, gy, x0, y0);
}

double waist_from_field(const Field2D& field, double x0, double y0) {
  return second_moment_radius(field.intensity(), field.grid_x, field.grid_y,
                              x0, y0);
}

GaussianSimulation simulate_gaussian_2d(const GaussianParams& params,
                                        double z) {
  const GridSpec gx = params.grid_x();
  const GridSpec gy = params.grid_y();
  const Field2D initial = gaussian_initial_2d(params, gx, gy);
  const Circuit circuit = build_qbpm_circuit_2d(gx, gy, params.wavelength, z);
  const StateVector out =
      run(circuit, StateVector::from_amplitudes(initial.values));
  Field2D reference = propagate_2d(initial, params.wavelength, z);
  const double w_ref = waist_from_field(reference, params.x0, params.y0);
  return {z, out.probabilities(), std::move(reference), w_ref};
}

ErrorStats summarize_errors(std::span<const double> errors, double z,
                            std::uint64_t n_shots) {
  if (errors.size() < 2) {
    throw std::invalid_argument("error statistics need at least 2 runs");
  }
  double sum = 0.0;
  double sum_abs = 0.0;
  double sum_sq = 0.0;
  for (double e : errors) {
    sum += e;
    sum_abs += std::abs(e);
    sum_sq += e * e;
  }
  const double n = static_cast<double>(errors.size());
  ErrorStats s;
  s.z = z;
  s.n_shots = n_shots;
  s.n_sim = errors.size();
  s.bias = sum / n;
  s.mu = sum_abs / n;
  s.sigma = std::sqrt(std::max(0.0, sum_sq / n - s.bias * s.bias));
  return s;
}

std::vector<double> slit_errors(const SlitSimulation& sim,
                                std::uint64_t n_shots, std::size_t n_sim,
                                std::uint64_t seed) {
  std::vector<double> errors;
  errors.reserve(n_sim);
  for (std::size_t r = 0; r < n_sim; ++r) {
    const auto counts = sample_distribution(sim.probabilities, n_shots, seed + r);
    errors.push_back(rmse(sim.reference, counts.frequencies()));
  }
  return errors;
}

std::vector<double> waist_errors(const GaussianSimulation& sim,
                                 const GaussianParams& params,
                                 std::uint64_t n_shots, std::size_t n_sim,
                                 std::uint64_t seed) {
  const GridSpec gx = params.grid_x();
  const GridSpec gy = params.grid_y();
  std::vector<double> errors;
  errors.reserve(n_sim);
  for (std::size_t r = 0; r < n_sim; ++r) {
    const auto counts = sample_distribution(sim.probabilities, n_shots, seed + r);
    errors.push_back(waist_from_counts(counts, gx, gy, params.x0, params.y0) -
                     sim.w_ref);
  }
  return errors;
}

std::vector<ErrorStats> slit_error_analysis(
    const DoubleSlitParams& params, std::span<const double> z_values,
    std::span<const std::uint64_t> shot_counts, std::size_t n_sim,
    std::uint64_t seed) {
  if (n_sim < 2) throw std::invalid_argument("n_sim must be >= 2");
  std::vector<ErrorStats> table;
  for (double z : z_values) {
    const SlitSimulation sim = simulate_double_slit(params, z);
    for (std::uint64_t shots : shot_counts) {
      table.push_back(
          summarize_errors(slit_errors(sim, shots, n_sim, seed), z, shots));
    }
  }
  return table;
}

std::vector<ErrorStats> gaussian_error_analysis(
    const GaussianParams& params, std::span<const double> z_values,
    std::span<const std::uint64_t> shot_counts, std::size_t n_sim,
    std::uint64_t seed) {
  if (n_sim < 2) throw std::invalid_argument("n_sim must be >= 2");
  std::vector<ErrorStats> table;
  for (double z : z_values) {
    const GaussianSimulation sim = simulate_gaussian_2d(params, z);
    for (std::uint64_t shots : shot_counts) {
      table.push_back(summarize_errors(
          waist_errors(sim, params, shots, n_sim, seed), z, shots));
    }
  }
  return table;
}

}  // namespace qbpm
