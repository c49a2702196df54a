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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "qbpm/classical_bpm.hpp"
#include "qbpm/cli.hpp"
#include "qbpm/propagator.hpp"
#include "qbpm/qft.hpp"
#include "qbpm/scenarios.hpp"
#include "test_util.hpp"

using namespace qbpm;
using qbpm::testing::max_abs_diff;
using qbpm::testing::random_state;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::int64_t signed_index(std::uint64_t b, std::size_t n) {
  std::int64_t g = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if ((b >> j) & 1u) {
      g += (j + 1 == n) ? -(std::int64_t{1} << j) : (std::int64_t{1} << j);
    }
  }
  return g;
}

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= double(x.size());
  my /= double(y.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    sxx += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
  }
  return sxy / sxx;
}

Outcome decomposition_exactness() {
  std::size_t checked = 0;
  for (int p = 1; p <= 3; ++p) {
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto terms = decompose_monomial(n, p);
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        std::int64_t g = signed_index(b, n), power = 1;
        for (int k = 0; k < p; ++k) power *= g;
        if (evaluate_terms(terms, b) != power) {
          return {false, fmt::format("n={} p={} gamma={} mismatch", n, p, g)};
        }
        ++checked;
      }
    }
  }
  return {true, fmt::format("{} (n, p, gamma) triples exact", checked)};
}

Outcome diagonal_synthesis() {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  double worst = 0.0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const double phi = angle(rng);
      const auto circuit = build_monomial_propagator(n, 2, PhaseAngle{phi});
      const auto oracle = diagonal_oracle(n, {{2, phi}});
      for (std::uint64_t b = 0; b < oracle.size(); ++b) {
        const auto out = run(circuit, StateVector::basis(n, b));
        for (std::size_t i = 0; i < oracle.size(); ++i) {
          const Complex expected = i == b ? oracle[b] : Complex(0.0);
          worst = std::max(worst, std::abs(out[i] - expected));
        }
      }
    }
  }
  return {worst <= 1e-12, fmt::format("max deviation {:.2e} (tol 1e-12)", worst)};
}

Outcome qft_correctness() {
  std::mt19937_64 rng(3);
  double worst = 0.0, worst_fidelity = 1.0;
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto qft = build_qft(n, FourierSign::kNegative);
    const auto iqft = build_iqft(n, FourierSign::kNegative);
    for (int trial = 0; trial < 100; ++trial) {
      const auto s = random_state(n, rng);
      const auto out = run(qft, s);
      worst = std::max(worst, max_abs_diff(out.amplitudes(),
                                           dft_oracle(s.amplitudes(),
                                                      FourierSign::kNegative)));
      worst_fidelity = std::min(worst_fidelity, fidelity(run(iqft, out), s));
    }
  }
  return {worst <= 1e-10 && worst_fidelity >= 1.0 - 1e-12,
          fmt::format("max deviation {:.2e} (tol 1e-10), min fidelity 1-{:.2e}",
                      worst, 1.0 - worst_fidelity)};
}

Outcome quantum_classical_equivalence() {
  std::mt19937_64 rng(4);
  const double lambda = 532e-9;
  const std::vector<double> zs = {1e-3, 1e-2, 1e-1, 1.0};
  double worst = 0.0;
  for (std::size_t n = 1; n <= 12; ++n) {
    const GridSpec grid(n, 1e-5);
    std::vector<Circuit> circuits;
    for (double z : zs) circuits.push_back(build_qbpm_circuit(grid, lambda, z));
    for (int trial = 0; trial < 50; ++trial) {
      const auto s = random_state(n, rng);
      const Field1D f(grid, {s.amplitudes().begin(), s.amplitudes().end()});
      for (std::size_t k = 0; k < zs.size(); ++k) {
        const auto q = run(circuits[k], s);
        worst = std::max(worst, max_abs_diff(q.amplitudes(),
                                             propagate_1d(f, lambda, zs[k]).values));
      }
    }
  }
  return {worst < 1e-9,
          fmt::format("n<=12, 50 states, z in [1e-3, 1] m: max deviation {:.2e}",
                      worst)};
}

Outcome gate_counts() {
  for (std::size_t n = 1; n <= 24; ++n) {
    const auto size = build_monomial_propagator(n, 2, PhaseAngle{0.5}).size();
    if (size != n * (n + 1) / 2) {
      return {false, fmt::format("n={}: {} gates, expected {}", n, size,
                                 n * (n + 1) / 2)};
    }
  }
  std::vector<double> ns, counts;
  for (std::size_t n = 6; n <= 12; ++n) {
    ns.push_back(double(n));
    counts.push_back(double(build_monomial_propagator(n, 3, PhaseAngle{0.5}).size()));
  }
  // y = c n^3 through the origin.
  double num = 0.0, den = 0.0, mean = 0.0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    num += counts[i] * std::pow(ns[i], 3);
    den += std::pow(ns[i], 6);
    mean += counts[i];
  }
  const double c = num / den;
  mean /= double(counts.size());
  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    ss_res += std::pow(counts[i] - c * std::pow(ns[i], 3), 2);
    ss_tot += std::pow(counts[i] - mean, 2);
  }
  const double r2 = 1.0 - ss_res / ss_tot;
  return {r2 > 0.99, fmt::format("n(n+1)/2 exact for n<=24; p=3 fit c={:.4f}, R^2={:.5f}",
                                 c, r2)};
}

Outcome double_slit_reproduction() {
  const DoubleSlitParams params;
  const GridSpec grid = params.grid();
  std::string detail;
  bool pass = true;
  std::uint64_t seed = 600;
  for (double z : {0.10, 0.14, 0.18}) {
    const auto sim = simulate_double_slit(params, z);
    const auto freq = sample_distribution(sim.probabilities, 100000, seed++).frequencies();
    const double err = rmse(sim.reference, freq);
    double offset = 0.0;
    for (const auto& m : locate_fringe_maxima(sim.probabilities, params, grid, z, 1)) {
      offset = std::max(offset, std::abs(m.offset_cells()));
    }
    pass = pass && err < 0.1 && offset <= 1.0;
    detail += fmt::format("{}z={:g}: rmse {:.4f}, max |offset| {:.2f} cell", detail.empty() ? "" : "; ",
                          z, err, offset);
  }
  return {pass, detail};
}

Outcome error_structure() {
  const DoubleSlitParams params;
  const double zw = wrap_distance(params);
  const std::vector<double> zs = {2 * zw, 4 * zw, 8 * zw};
  const std::size_t n_sim = 100;
  std::string detail;

  // (a)
  std::vector<std::uint64_t> base = {100000};
  const auto a = slit_error_analysis(params, zs, base, n_sim, 700);
  bool pass_a = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pass_a = pass_a && a[i].mu > a[i].sigma;
    if (i > 0) pass_a = pass_a && a[i].mu > a[i - 1].mu;
  }
  detail += fmt::format("(a) mu {:.3e} {:.3e} {:.3e} > sigma {:.1e} {:.1e} {:.1e} {}",
                        a[0].mu, a[1].mu, a[2].mu, a[0].sigma, a[1].sigma,
                        a[2].sigma, pass_a ? "ok" : "FAIL");

  // (b)
  const std::vector<double> zero = {0.0};
  const std::vector<std::uint64_t> sweep = {1000, 10000, 100000, 1000000};
  const auto b = slit_error_analysis(params, zero, sweep, n_sim, 710);
  std::vector<double> xs, ys;
  for (const auto& s : b) {
    xs.push_back(double(s.n_shots));
    ys.push_back(s.mu);
  }
  const double slope = loglog_slope(xs, ys);
  const bool pass_b = std::abs(slope + 0.5) <= 0.1;
  detail += fmt::format("; (b) z=0 slope {:.3f} {}", slope, pass_b ? "ok" : "FAIL");

  // (c)
  const std::vector<std::uint64_t> floor = {1000000, 4000000};
  const auto c = slit_error_analysis(params, zs, floor, n_sim, 720);
  bool pass_c = true;
  detail += "; (c) mu change";
  for (std::size_t i = 0; i < c.size(); i += 2) {
    const double change = std::abs(c[i + 1].mu - c[i].mu) / c[i].mu;
    pass_c = pass_c && change < 0.10;
    detail += fmt::format(" {:.1f}%", 100 * change);
  }
  detail += pass_c ? " ok" : " FAIL";
  detail += fmt::format(" (z = 2,4,8 x {:.2f} m)", zw);
  return {pass_a && pass_b && pass_c, detail};
}

Outcome gaussian_reproduction() {
  const GaussianParams params;
  const GridSpec gx = params.grid_x(), gy = params.grid_y();
  const double z0 = params.rayleigh_length();
  const std::vector<double> zrs = {0.0, 1.0, 2.0, 3.0};
  std::vector<GaussianSimulation> sims;
  for (double zr : zrs) sims.push_back(simulate_gaussian_2d(params, zr * z0));
  std::string detail = "w_ref ratio err";
  bool pass_ratio = true;
  for (std::size_t i = 0; i < zrs.size(); ++i) {
    const double ratio = sims[i].w_ref / sims[0].w_ref;
    const double rel = ratio / std::sqrt(1.0 + zrs[i] * zrs[i]) - 1.0;
    pass_ratio = pass_ratio && std::abs(rel) < 0.02;
    if (i > 0) pass_ratio = pass_ratio && sims[i].w_ref > sims[i - 1].w_ref;
    detail += fmt::format(" {:+.2f}%", 100 * rel);
  }

  // Single 50,000-shot run per distance.
  detail += "; w_Q/w_ref @5e4";
  for (std::size_t i = 0; i < zrs.size(); ++i) {
    const auto counts = sample_distribution(sims[i].probabilities, 50000, 800 + i);
    detail += fmt::format(" {:.4f}", waist_from_counts(counts, gx, gy, 0, 0) /
                                         sims[i].w_ref);
  }

  const std::vector<std::uint64_t> sweep = {100, 1000, 10000, 50000};
  bool pass_slope = true;
  detail += "; sigma_w slopes";
  for (std::size_t i = 0; i < zrs.size(); ++i) {
    std::vector<double> xs, ys;
    for (auto shots : sweep) {
      const auto e = waist_errors(sims[i], params, shots, 100, 900);
      xs.push_back(double(shots));
      ys.push_back(summarize_errors(e, sims[i].z, shots).sigma);
    }
    const double slope = loglog_slope(xs, ys);
    pass_slope = pass_slope && std::abs(slope + 0.5) <= 0.1;
    detail += fmt::format(" {:.3f}", slope);
  }

  bool pass_100 = true;
  detail += "; within 10% @100 shots";
  for (std::size_t i = 0; i < zrs.size(); ++i) {
    const auto e = waist_errors(sims[i], params, 100, 100, 1000);
    const auto good = std::count_if(e.begin(), e.end(), [&](double v) {
      return std::abs(v) / sims[i].w_ref < 0.10;
    });
    pass_100 = pass_100 && good >= 90;
    detail += fmt::format(" {}%", good);
  }
  return {pass_ratio && pass_slope && pass_100, detail};
}

std::map<std::string, std::string> read_dir(const std::filesystem::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ifstream in(entry.path(), std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    files[entry.path().filename().string()] = buf.str();
  }
  return files;
}

Outcome cli_determinism() {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "qbpm_acceptance_cli";
  fs::remove_all(root);
  fs::create_directories(root);
  {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> normal;
    std::ofstream field(root / "field.csv");
    for (int i = 0; i < 1024; ++i) {
      field << fmt::format("{:.17g},{:.17g}\n", normal(rng), normal(rng));
    }
  }
  const std::string input = (root / "field.csv").string();
  const std::vector<std::vector<std::string>> commands = {
      {"double-slit", "--seed", "11"},
      {"double-slit", "--format", "json", "--z", "0.1"},
      {"gaussian-2d", "--sims", "10", "--seed", "12"},
      {"error-analysis", "--sims", "5", "--sweep", "1000", "10000"},
      {"error-analysis", "--scenario", "gaussian-2d", "--sims", "5"},
      {"propagate", "--input", input, "--z", "0.01", "--z", "0.1", "--verify"},
      {"gate-count", "--qubits", "12", "--order", "3"},
      {"export-qasm", "--z", "0.14"},
  };
  std::ostringstream sink;
  std::size_t files = 0;
  for (std::size_t k = 0; k < commands.size(); ++k) {
    const std::string out = (root / fmt::format("run{}", k)).string();
    std::vector<std::string> args = {"qbpm"};
    args.insert(args.end(), commands[k].begin(), commands[k].end());
    args.insert(args.end(), {"--out", out});
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());

    std::map<std::string, std::string> first;
    for (int rep = 0; rep < 2; ++rep) {
      const int rc = cli::run_cli(int(argv.size()), argv.data(), sink, sink);
      if (rc != 0) {
        return {false, fmt::format("'{}' exited {}: {}", fmt::join(commands[k], " "),
                                   rc, sink.str())};
      }
      auto contents = read_dir(out);
      if (rep == 0) {
        first = std::move(contents);
        fs::remove_all(out);
      } else if (contents != first) {
        return {false, fmt::format("'{}' output differs on rerun",
                                   fmt::join(commands[k], " "))};
      }
    }
    files += first.size();
  }
  fs::remove_all(root);
  return {true, fmt::format("{} commands, {} files byte-identical on rerun",
                            commands.size(), files)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"decomposition exactness", decomposition_exactness},
      {"diagonal-unitary synthesis", diagonal_synthesis},
      {"QFT correctness", qft_correctness},
      {"quantum/classical BPM equivalence", quantum_classical_equivalence},
      {"gate-count claims", gate_counts},
      {"double-slit reproduction", double_slit_reproduction},
      {"error-structure reproduction", error_structure},
      {"2D Gaussian reproduction", gaussian_reproduction},
      {"CLI determinism", cli_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, fmt::format("exception: {}", e.what())};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    fmt::print("{} criterion {}: {} | {} [{:.1f}s]\n", o.pass ? "PASS" : "FAIL", i + 1,
               criteria[i].first, o.detail, secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
