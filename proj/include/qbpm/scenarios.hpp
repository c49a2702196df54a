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

// Experiment definitions: double-slit diffraction in one transverse
// dimension and a free-space Gaussian beam in two, together with their
// reference solutions, observables and shot-noise statistics.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qbpm/grid.hpp"
#include "qbpm/state_vector.hpp"

namespace qbpm {

// ---------------------------------------------------------------------------
// Double slit
// ---------------------------------------------------------------------------

/// Grid intervals per slit width used for the default domain length.
inline constexpr double kDefaultCellsPerSlit = 32.0;

struct DoubleSlitParams {
  double separation = 0.5e-3;  // d, centre to centre
  double width = 0.1e-3;       // w
  double wavelength = 532e-9;
  std::size_t n_qubits = 15;
  /// 0 selects the default, width * 2^n / kDefaultCellsPerSlit.
  double domain_length = 0.0;

  double resolved_domain_length() const;
  GridSpec grid() const;
  /// Throws std::invalid_argument unless d > w > 0 and d + w < L.
  void validate() const;
};

/// Distance at which the first zero of the single-slit envelope,
/// x = lambda z / w, reaches the domain edge L/2. Beyond it the periodic
/// grid folds the pattern back onto itself.
double wrap_distance(const DoubleSlitParams& params);

/// 1 inside either closed window |x -+ d/2| <= w/2, 0 elsewhere, unit l2
/// norm. Throws if a window covers fewer than 4 grid points.
Field1D double_slit_initial(const DoubleSlitParams& params,
                            const GridSpec& grid);

/// Far-field pattern cos^2(pi d sin(theta) / lambda) sinc^2(pi w sin(theta) /
/// lambda) with tan(theta) = x / z, normalized to unit sum. Throws for z <= 0.
std::vector<double> double_slit_analytic(const DoubleSlitParams& params,
                                         const GridSpec& grid, double z);

/// double_slit_analytic for z > 0; the initial intensity at z = 0.
std::vector<double> double_slit_reference(const DoubleSlitParams& params,
                                          const GridSpec& grid, double z);

struct FringeMaximum {
  int order;                // m
  double predicted_index;   // fractional grid index of sin(theta) = m lambda/d
  std::size_t found_index;  // argmax within half a fringe spacing
  double offset_cells() const {
    return static_cast<double>(found_index) - predicted_index;
  }
};

/// Locates the interference maxima of orders -max_order..max_order in
/// `intensity`.
std::vector<FringeMaximum> locate_fringe_maxima(
    std::span<const double> intensity, const DoubleSlitParams& params,
    const GridSpec& grid, double z, int max_order);

/// Exact output distribution of the QBPM circuit for the slit, with its
/// reference intensity.
struct SlitSimulation {
  double z;
  std::vector<double> probabilities;
  std::vector<double> reference;
};

SlitSimulation simulate_double_slit(const DoubleSlitParams& params, double z);

// ---------------------------------------------------------------------------
// Gaussian beam
// ---------------------------------------------------------------------------

/// Grid intervals per waist used for the default domain lengths.
inline constexpr double kDefaultCellsPerWaist = 4.0;

struct GaussianParams {
  double waist = 0.05;  // w0
  double x0 = 0.0;
  double y0 = 0.0;
  double wavelength = 532e-9;
  std::size_t n_qubits_per_axis = 5;
  /// 0 selects waist * 2^n / kDefaultCellsPerWaist.
  double domain_x = 0.0;
  double domain_y = 0.0;

  /// z0 = k w0^2 / 2.
  double rayleigh_length() const;
  GridSpec grid_x() const;
  GridSpec grid_y() const;
  void validate() const;
};

/// exp(-((x - x0)^2 + (y - y0)^2) / w0^2), unit l2 norm. Throws unless
/// w0 >= 4 dx on both axes.
Field2D gaussian_initial_2d(const GaussianParams& params, const GridSpec& gx,
                            const GridSpec& gy);

/// Second-moment radius sqrt(sum ((x - x0)^2 + (y - y0)^2) P_ij) from a shot
/// histogram over the 2D register (x on the low qubits).
double waist_from_counts(const SampleCounts& counts, const GridSpec& gx,
                         const GridSpec& gy, double x0, double y0);

/// Same moment with |U_ij|^2 (divided by its total) in place of P_ij.
double waist_from_field(const Field2D& field, double x0, double y0);

struct GaussianSimulation {
  double z;
  std::vector<double> probabilities;  // QBPM output
  Field2D reference;                  // classical discretized solution
  double w_ref;
};

GaussianSimulation simulate_gaussian_2d(const GaussianParams& params,
                                        double z);

// ---------------------------------------------------------------------------
// Shot-noise statistics
// ---------------------------------------------------------------------------

/// mu = <|e|>, sigma = (<e^2> - <e>^2)^{1/2}, bias = <e>. For the
/// non-negative RMSE errors mu and bias coincide.
struct ErrorStats {
  double z = 0.0;
  std::uint64_t n_shots = 0;
  std::size_t n_sim = 0;
  double mu = 0.0;
  double sigma = 0.0;
  double bias = 0.0;
};

ErrorStats summarize_errors(std::span<const double> errors, double z,
                            std::uint64_t n_shots);

/// RMSE of each of `n_sim` sampled histograms against the reference. Run r
/// is sampled with seed + r.
std::vector<double> slit_errors(const SlitSimulation& sim,
                                std::uint64_t n_shots, std::size_t n_sim,
                                std::uint64_t seed);

/// w_Q - w_ref of each of `n_sim` sampled histograms.
std::vector<double> waist_errors(const GaussianSimulation& sim,
                                 const GaussianParams& params,
                                 std::uint64_t n_shots, std::size_t n_sim,
                                 std::uint64_t seed);

/// One row per (z, n_shots), z-major. Throws if n_sim < 2.
std::vector<ErrorStats> slit_error_analysis(
    const DoubleSlitParams& params, std::span<const double> z_values,
    std::span<const std::uint64_t> shot_counts, std::size_t n_sim,
    std::uint64_t seed);

std::vector<ErrorStats> gaussian_error_analysis(
    const GaussianParams& params, std::span<const double> z_values,
    std::span<const std::uint64_t> shot_counts, std::size_t n_sim,
    std::uint64_t seed);

}  // namespace qbpm
