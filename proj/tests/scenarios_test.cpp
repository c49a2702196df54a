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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>

#include "qbpm/classical_bpm.hpp"

using namespace qbpm;

TEST(DoubleSlit, default_grid) {
  const DoubleSlitParams p;
  EXPECT_DOUBLE_EQ(p.resolved_domain_length(), 0.1024);
  EXPECT_DOUBLE_EQ(p.grid().dx(), 3.125e-6);
  EXPECT_NEAR(wrap_distance(p), 1e-4 * 0.1024 / (2 * 532e-9), 1e-9);
}

TEST(DoubleSlit, initial_field_has_two_closed_windows) {
  const DoubleSlitParams p;
  const auto f = double_slit_initial(p, p.grid());
  std::size_t nonzero = 0;
  for (const auto& a : f.values) {
    if (std::abs(a) > 0.0) {
      ++nonzero;
      EXPECT_NEAR(a.real(), 1.0 / std::sqrt(66.0), 1e-15);
    }
  }
  EXPECT_EQ(nonzero, 66u);
  const std::size_t mid = p.grid().size() / 2;
  // Edges of the upper window: (d -+ w)/2 = 64 and 96 cells.
  EXPECT_NE(std::abs(f.values[mid + 64]), 0.0);
  EXPECT_NE(std::abs(f.values[mid + 96]), 0.0);
  EXPECT_EQ(std::abs(f.values[mid + 63]), 0.0);
  EXPECT_EQ(std::abs(f.values[mid + 97]), 0.0);
  EXPECT_NE(std::abs(f.values[mid - 64]), 0.0);
  EXPECT_EQ(std::abs(f.values[mid]), 0.0);
}

TEST(DoubleSlit, rejects_bad_parameters) {
  DoubleSlitParams p;
  p.width = 0.6e-3;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  DoubleSlitParams coarse;
  coarse.n_qubits = 10;
  coarse.domain_length = 0.1024;  // two cells per slit
  EXPECT_THROW(double_slit_initial(coarse, coarse.grid()), std::invalid_argument);
  DoubleSlitParams narrow;
  narrow.domain_length = 0.5e-3;
  EXPECT_THROW(narrow.validate(), std::invalid_argument);
}

TEST(DoubleSlit, analytic_pattern_shape) {
  DoubleSlitParams p;
  p.n_qubits = 12;
  const GridSpec g = p.grid();
  const double z = 0.1;
  const auto I = double_slit_analytic(p, g, z);
  EXPECT_NEAR(std::accumulate(I.begin(), I.end(), 0.0), 1.0, 1e-12);
  const std::size_t mid = g.size() / 2;
  EXPECT_EQ(std::max_element(I.begin(), I.end()) - I.begin(),
            static_cast<std::ptrdiff_t>(mid));
  for (std::size_t j = 1; j < mid; ++j) EXPECT_NEAR(I[mid + j], I[mid - j], 1e-15);
  EXPECT_THROW(double_slit_analytic(p, g, 0.0), std::invalid_argument);
}

TEST(DoubleSlit, analytic_zero_between_fringes) {
  // Unit-cell grid placed so that a sample lands on the first interference
  // zero, sin(theta) = lambda / (2 d).
  DoubleSlitParams p;
  p.n_qubits = 8;
  const double z = 0.1;
  const double s = p.wavelength / (2 * p.separation);
  const double x_zero = z * std::tan(std::asin(s));
  p.domain_length = x_zero / 10.0 * 256.0;
  const GridSpec g = p.grid();
  const auto I = double_slit_analytic(p, g, z);
  EXPECT_LT(I[128 + 10], 1e-20);
  EXPECT_GT(I[128 + 5], 1e-3);
}

TEST(DoubleSlit, reference_at_zero_is_initial_intensity) {
  DoubleSlitParams p;
  p.n_qubits = 12;
  const auto I = double_slit_reference(p, p.grid(), 0.0);
  EXPECT_NEAR(std::accumulate(I.begin(), I.end(), 0.0), 1.0, 1e-12);
  EXPECT_EQ(std::count_if(I.begin(), I.end(), [](double v) { return v > 0; }), 66);
}

TEST(DoubleSlit, fringes_found_on_pure_interference_pattern) {
  // A vanishing slit width removes the envelope, leaving cos^2 fringes whose
  // maxima sit exactly at the predicted positions.
  DoubleSlitParams p;
  p.width = 1e-12;
  p.domain_length = 0.1024;
  const GridSpec g = p.grid();
  for (double z : {0.1, 0.14, 0.18}) {
    const auto I = double_slit_analytic(p, g, z);
    for (const auto& m : locate_fringe_maxima(I, p, g, z, 2)) {
      EXPECT_LE(std::abs(m.offset_cells()), 0.5 + 1e-9)
          << "z=" << z << " m=" << m.order;
    }
  }
}

TEST(DoubleSlit, simulation_probabilities_normalized) {
  DoubleSlitParams p;
  p.n_qubits = 12;
  const auto sim = simulate_double_slit(p, 0.05);
  EXPECT_EQ(sim.probabilities.size(), 4096u);
  EXPECT_NEAR(std::accumulate(sim.probabilities.begin(), sim.probabilities.end(), 0.0),
              1.0, 1e-12);
  EXPECT_EQ(sim.reference.size(), 4096u);
  const auto at_zero = simulate_double_slit(p, 0.0);
  EXPECT_LT(rmse(at_zero.reference, at_zero.probabilities), 1e-12);
}

TEST(Gaussian, default_grid_and_rayleigh_length) {
  const GaussianParams p;
  EXPECT_DOUBLE_EQ(p.grid_x().dx(), 0.0125);
  EXPECT_DOUBLE_EQ(p.grid_y().length(), 0.4);
  EXPECT_NEAR(p.rayleigh_length(), std::numbers::pi * 0.0025 / 532e-9, 1e-6);
}

TEST(Gaussian, waist_of_initial_field) {
  // For intensity exp(-2 r^2 / w0^2) the second-moment radius is w0 / sqrt 2.
  const GaussianParams p;
  const auto f = gaussian_initial_2d(p, p.grid_x(), p.grid_y());
  EXPECT_NEAR(waist_from_field(f, 0.0, 0.0), p.waist / std::numbers::sqrt2, 1e-9);
}

TEST(Gaussian, off_centre_beam) {
  GaussianParams p;
  p.x0 = 0.025;
  p.y0 = -0.05;
  const auto f = gaussian_initial_2d(p, p.grid_x(), p.grid_y());
  EXPECT_NEAR(waist_from_field(f, p.x0, p.y0), p.waist / std::numbers::sqrt2, 1e-9);
}

TEST(Gaussian, rejects_under_resolved_waist) {
  GaussianParams p;
  p.domain_x = 1.0;
  EXPECT_THROW(gaussian_initial_2d(p, p.grid_x(), p.grid_y()), std::invalid_argument);
}

TEST(Gaussian, spreads_by_root_two_at_rayleigh_length) {
  const GaussianParams p;
  const auto sim = simulate_gaussian_2d(p, p.rayleigh_length());
  const double w0_moment = p.waist / std::numbers::sqrt2;
  EXPECT_NEAR(sim.w_ref / w0_moment, std::numbers::sqrt2, 0.01 * std::numbers::sqrt2);
  // The circuit and the classical solver produce the same intensity.
  EXPECT_LT(rmse(sim.reference.intensity(), sim.probabilities), 1e-10);
}

TEST(Gaussian, waist_from_counts_matches_field) {
  const GaussianParams p;
  const auto sim = simulate_gaussian_2d(p, 0.0);
  const auto counts = sample_distribution(sim.probabilities, 2000000, 5);
  EXPECT_NEAR(waist_from_counts(counts, p.grid_x(), p.grid_y(), 0.0, 0.0),
              sim.w_ref, 0.005 * sim.w_ref);
  SampleCounts wrong{std::vector<std::uint64_t>(8, 1), 8};
  EXPECT_THROW(waist_from_counts(wrong, p.grid_x(), p.grid_y(), 0, 0),
               std::invalid_argument);
}

TEST(ErrorStatistics, hand_example) {
  const std::vector<double> e = {1.0, -1.0, 3.0};
  const auto s = summarize_errors(e, 0.5, 100);
  EXPECT_DOUBLE_EQ(s.bias, 1.0);
  EXPECT_DOUBLE_EQ(s.mu, 5.0 / 3.0);
  EXPECT_NEAR(s.sigma, std::sqrt(8.0 / 3.0), 1e-15);
  EXPECT_EQ(s.n_sim, 3u);
  EXPECT_EQ(s.n_shots, 100u);
  EXPECT_DOUBLE_EQ(s.z, 0.5);
  const std::vector<double> one = {1.0};
  EXPECT_THROW(summarize_errors(one, 0, 1), std::invalid_argument);
}

TEST(ErrorStatistics, slit_errors_reproducible_and_shrinking) {
  DoubleSlitParams p;
  p.n_qubits = 10;
  const auto sim = simulate_double_slit(p, 0.0);
  const auto a = slit_errors(sim, 1000, 5, 77);
  EXPECT_EQ(a, slit_errors(sim, 1000, 5, 77));
  const auto small = summarize_errors(a, 0, 1000);
  const auto large = summarize_errors(slit_errors(sim, 100000, 5, 77), 0, 100000);
  EXPECT_LT(large.mu, small.mu);
}

TEST(ErrorStatistics, analysis_table_layout) {
  DoubleSlitParams p;
  p.n_qubits = 10;
  const std::vector<double> zs = {0.0, 0.01};
  const std::vector<std::uint64_t> shots = {100, 1000};
  const auto table = slit_error_analysis(p, zs, shots, 3, 1);
  ASSERT_EQ(table.size(), 4u);
  EXPECT_EQ(table[1].z, 0.0);
  EXPECT_EQ(table[1].n_shots, 1000u);
  EXPECT_EQ(table[2].z, 0.01);
  EXPECT_THROW(slit_error_analysis(p, zs, shots, 1, 1), std::invalid_argument);

  const GaussianParams g;
  const auto gt = gaussian_error_analysis(g, zs, shots, 3, 1);
  ASSERT_EQ(gt.size(), 4u);
  EXPECT_EQ(gt[3].n_sim, 3u);
}
