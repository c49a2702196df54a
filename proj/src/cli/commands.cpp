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

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <nlohmann/json.hpp>
#include <ostream>

#include "cli_internal.hpp"
#include "qbpm/circuit.hpp"
#include "qbpm/classical_bpm.hpp"
#include "qbpm/propagator.hpp"
#include "qbpm/qft.hpp"
#include "qbpm/scenarios.hpp"

namespace qbpm::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

std::string csv_cell(const json& v) {
  if (v.is_number_float()) return fmt::format("{:.17g}", v.get<double>());
  if (v.is_number_unsigned()) return fmt::format("{}", v.get<std::uint64_t>());
  if (v.is_number_integer()) return fmt::format("{}", v.get<std::int64_t>());
  if (v.is_string()) return v.get<std::string>();
  return "nan";  // NaN is stored as null
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

class Writer {
 public:
  explicit Writer(const RunConfig& c) : dir_(c.out_dir), format_(c.format) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) {
      throw ConfigError(fmt::format("cannot create output directory '{}': {}",
                                    dir_.string(), ec.message()));
    }
    text("config.json", config_to_json(c));
  }

  void text(const std::string& name, const std::string& body) {
    const fs::path path = dir_ / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << body;
    out.close();
    if (!out) throw ConfigError(fmt::format("cannot write '{}'", path.string()));
  }

  void table(const std::string& stem, const Table& t) {
    if (format_ == OutputFormat::kJson) {
      json cols = json::object();
      for (std::size_t k = 0; k < t.columns.size(); ++k) {
        json col = json::array();
        for (const auto& row : t.rows) col.push_back(row[k]);
        cols[t.columns[k]] = std::move(col);
      }
      json doc = {{"columns", t.columns}, {"data", cols}};
      text(stem + ".json", doc.dump(2) + "\n");
      return;
    }
    std::string body = fmt::format("{}\n", fmt::join(t.columns, ","));
    for (const auto& row : t.rows) {
      std::vector<std::string> cells;
      for (const auto& v : row) cells.push_back(csv_cell(v));
      body += fmt::format("{}\n", fmt::join(cells, ","));
    }
    text(stem + ".csv", body);
  }

  /// Row-major grid, one row per y index.
  void grid(const std::string& stem, const std::vector<double>& values,
            std::size_t nx, std::size_t ny) {
    if (format_ == OutputFormat::kJson) {
      json rows = json::array();
      for (std::size_t iy = 0; iy < ny; ++iy) {
        rows.push_back(std::vector<double>(values.begin() + iy * nx,
                                           values.begin() + (iy + 1) * nx));
      }
      text(stem + ".json", json{{"nx", nx}, {"ny", ny}, {"values", rows}}.dump(2) +
                               "\n");
      return;
    }
    std::string body;
    for (std::size_t iy = 0; iy < ny; ++iy) {
      for (std::size_t ix = 0; ix < nx; ++ix) {
        body += fmt::format("{}{:.17g}", ix ? "," : "", values[iy * nx + ix]);
      }
      body += "\n";
    }
    text(stem + ".csv", body);
  }

 private:
  fs::path dir_;
  OutputFormat format_;
};

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

void check_deviation(const RunConfig& c, double deviation, const std::string& what) {
  if (c.verify && !(deviation <= c.tolerance)) {
    throw ValidationFailure(fmt::format(
        "{}: deviation {:.3e} exceeds tolerance {:.3e}", what, deviation,
        c.tolerance));
  }
}

DispersionPolynomial polynomial_of(const RunConfig& c) {
  if (c.polynomial.empty()) return DispersionPolynomial::paraxial(c.wavelength);
  DispersionPolynomial poly;
  for (const auto& [order, coef] : c.polynomial) poly.set(order, coef);
  return poly;
}

std::vector<ErrorStats> error_rows(const RunConfig& c) {
  if (c.scenario == Scenario::kDoubleSlit) {
    return slit_error_analysis(slit_params(c), c.z, c.shot_sweep, c.n_sim, c.seed);
  }
  const GaussianParams params = gaussian_params(c);
  std::vector<double> zs;
  for (double zr : c.z) zs.push_back(zr * params.rayleigh_length());
  return gaussian_error_analysis(params, zs, c.shot_sweep, c.n_sim, c.seed);
}

Table error_table(const std::vector<ErrorStats>& rows, double z_unit) {
  Table t{{"z", "z_r", "n_shots", "n_sim", "mu", "sigma", "bias"}, {}};
  for (const auto& s : rows) {
    t.rows.push_back({s.z, number(z_unit > 0 ? s.z / z_unit : kNaN), s.n_shots,
                      s.n_sim, s.mu, s.sigma, s.bias});
  }
  return t;
}

int cmd_double_slit(const RunConfig& c, std::ostream& out) {
  Writer w(c);
  const DoubleSlitParams params = slit_params(c);
  const GridSpec grid = params.grid();
  const Field1D initial = double_slit_initial(params, grid);
  Table summary{{"z", "rmse_sampled", "rmse_exact", "max_fringe_offset_cells",
                 "classical_deviation"},
                {}};
  double worst = 0.0;
  for (std::size_t i = 0; i < c.z.size(); ++i) {
    const double z = c.z[i];
    const SlitSimulation sim = simulate_double_slit(params, z);
    const auto freq = sample_distribution(sim.probabilities, c.n_shots, c.seed + i)
                          .frequencies();
    Table t{{"x", "p_sampled", "p_exact", "i_analytic"}, {}};
    for (std::size_t k = 0; k < grid.size(); ++k) {
      t.rows.push_back({grid.coordinate(k), freq[k], sim.probabilities[k],
                        sim.reference[k]});
    }
    w.table(fmt::format("double_slit_z{}", i), t);

    double offset = kNaN;
    if (z > 0.0) {
      offset = 0.0;
      for (const auto& m : locate_fringe_maxima(sim.probabilities, params, grid, z, 1)) {
        offset = std::max(offset, std::abs(m.offset_cells()));
      }
    }
    const double deviation =
        max_abs_diff(propagate_1d(initial, c.wavelength, z).intensity(),
                     sim.probabilities);
    worst = std::max(worst, deviation);
    const double err_sampled = rmse(sim.reference, freq);
    summary.rows.push_back({z, err_sampled, rmse(sim.reference, sim.probabilities),
                            number(offset), deviation});
    out << fmt::format("z = {:g} m: rmse {:.4g}, fringe offset {:.3g} cells\n", z,
                       err_sampled, offset);
  }
  w.table("double_slit_summary", summary);
  check_deviation(c, worst, "double-slit QBPM vs classical intensity");
  return kExitOk;
}

int cmd_gaussian_2d(const RunConfig& c, std::ostream& out) {
  Writer w(c);
  const GaussianParams params = gaussian_params(c);
  const GridSpec gx = params.grid_x();
  const GridSpec gy = params.grid_y();
  const double z0 = params.rayleigh_length();
  const double w_ref0 = simulate_gaussian_2d(params, 0.0).w_ref;

  Table waist{{"z_r", "z", "w_q", "w_ref", "epsilon", "w_ref_ratio",
               "analytic_ratio"},
              {}};
  double worst = 0.0;
  for (std::size_t i = 0; i < c.z.size(); ++i) {
    const double zr = c.z[i];
    const GaussianSimulation sim = simulate_gaussian_2d(params, zr * z0);
    const auto counts = sample_distribution(sim.probabilities, c.n_shots, c.seed + i);
    w.grid(fmt::format("gaussian_zr{}", i), counts.frequencies(), gx.size(), gy.size());
    w.grid(fmt::format("gaussian_zr{}_exact", i), sim.probabilities, gx.size(),
           gy.size());
    const double w_q = waist_from_counts(counts, gx, gy, params.x0, params.y0);
    waist.rows.push_back({zr, zr * z0, w_q, sim.w_ref, w_q - sim.w_ref,
                          sim.w_ref / w_ref0, std::sqrt(1.0 + zr * zr)});
    auto reference = sim.reference.intensity();
    normalize_sum(reference);
    worst = std::max(worst, max_abs_diff(reference, sim.probabilities));
    out << fmt::format("z_r = {:g}: w_Q {:.6g} m, w_ref {:.6g} m\n", zr, w_q,
                       sim.w_ref);
  }
  w.table("waist", waist);
  w.table("sigma_w", error_table(error_rows(c), z0));
  check_deviation(c, worst, "Gaussian QBPM vs classical intensity");
  return kExitOk;
}

int cmd_error_analysis(const RunConfig& c, std::ostream& out) {
  Writer w(c);
  const double unit = c.scenario == Scenario::kGaussian2D
                          ? gaussian_params(c).rayleigh_length()
                          : 0.0;
  const auto rows = error_rows(c);
  for (const auto& s : rows) {
    out << fmt::format("z = {:g}, N_s = {}: mu {:.4g}, sigma {:.4g}\n", s.z,
                       s.n_shots, s.mu, s.sigma);
  }
  w.table("error_analysis", error_table(rows, unit));
  return kExitOk;
}

int cmd_propagate(const RunConfig& c, std::ostream& out) {
  Writer w(c);
  std::vector<Complex> values = read_field_csv(c.input);
  normalize_l2(values);
  const GridSpec grid = GridSpec::from_length(c.n_qubits, c.domain_length);
  const DispersionPolynomial poly = polynomial_of(c);
  const Field1D initial(grid, values);
  const StateVector state = StateVector::from_amplitudes(values);

  Table deviations{{"z", "max_deviation"}, {}};
  double worst = 0.0;
  for (std::size_t i = 0; i < c.z.size(); ++i) {
    const double z = c.z[i];
    const StateVector q = run(build_qbpm_circuit(grid, c.wavelength, z, poly), state);
    const Field1D classical = propagate_1d(initial, poly, z);
    Table t{{"x", "re_qbpm", "im_qbpm", "re_classical", "im_classical"}, {}};
    double deviation = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      deviation = std::max(deviation, std::abs(q[k] - classical.values[k]));
      t.rows.push_back({grid.coordinate(k), q[k].real(), q[k].imag(),
                        classical.values[k].real(), classical.values[k].imag()});
    }
    w.table(fmt::format("propagate_z{}", i), t);
    deviations.rows.push_back({z, deviation});
    worst = std::max(worst, deviation);
    out << fmt::format("z = {:g}: max |QBPM - classical| = {:.3e}\n", z, deviation);
  }
  w.table("deviation", deviations);
  check_deviation(c, worst, "propagate");
  return kExitOk;
}

int cmd_gate_count(const RunConfig& c, std::ostream& out) {
  Writer w(c);
  const std::size_t n = c.n_qubits;
  const auto qft = build_qft(n, FourierSign::kNegative);
  const auto prop = build_monomial_propagator(n, c.order, PhaseAngle{1.0});
  const auto iqft = build_iqft(n, FourierSign::kNegative);
  const std::int64_t qft_closed = n + n * (n - 1) / 2 + n / 2;
  std::int64_t prop_closed = -1;  // known only for orders 1 and 2
  if (c.order == 1) prop_closed = static_cast<std::int64_t>(n);
  if (c.order == 2) prop_closed = static_cast<std::int64_t>(n * (n + 1) / 2);

  Table t{{"component", "hadamard", "phase", "controlled_phase",
           "multi_controlled_phase", "swap", "total", "closed_form"},
          {}};
  bool consistent = true;
  auto add = [&](const std::string& name, const Circuit& circuit,
                 std::int64_t closed) {
    const auto k = gate_count(circuit);
    const auto total = static_cast<std::int64_t>(circuit.size());
    t.rows.push_back({name, k.at(GateKind::kHadamard), k.at(GateKind::kPhase),
                      k.at(GateKind::kControlledPhase),
                      k.at(GateKind::kMultiControlledPhase), k.at(GateKind::kSwap),
                      total, closed >= 0 ? json(closed) : json("n/a")});
    if (closed >= 0 && closed != total) consistent = false;
    out << fmt::format("{:<12} {:>8} gates{}\n", name, total,
                       closed >= 0 ? fmt::format(" (closed form {})", closed) : "");
  };
  add("qft", qft, qft_closed);
  add(fmt::format("propagator_p{}", c.order), prop, prop_closed);
  add("iqft", iqft, qft_closed);
  w.table("gate_count", t);
  if (!consistent) throw ValidationFailure("gate count differs from closed form");
  return kExitOk;
}

int cmd_export_qasm(const RunConfig& c, std::ostream& out) {
  Writer w(c);
  Circuit circuit(1);
  if (c.scenario == Scenario::kDoubleSlit) {
    circuit = build_qbpm_circuit(slit_params(c).grid(), c.wavelength, c.z[0],
                                 polynomial_of(c));
  } else {
    const GaussianParams p = gaussian_params(c);
    circuit = build_qbpm_circuit_2d(p.grid_x(), p.grid_y(), c.wavelength,
                                    c.z[0] * p.rayleigh_length(), polynomial_of(c));
  }
  w.text("qbpm.qasm", to_qasm_text(circuit));
  out << fmt::format("wrote {} gates on {} qubits\n", circuit.size(),
                     circuit.n_qubits());
  return kExitOk;
}

}  // namespace

int execute(const RunConfig& c, std::ostream& out) {
  if (c.command == "double-slit") return cmd_double_slit(c, out);
  if (c.command == "gaussian-2d") return cmd_gaussian_2d(c, out);
  if (c.command == "error-analysis") return cmd_error_analysis(c, out);
  if (c.command == "propagate") return cmd_propagate(c, out);
  if (c.command == "gate-count") return cmd_gate_count(c, out);
  if (c.command == "export-qasm") return cmd_export_qasm(c, out);
  throw ConfigError(fmt::format("unknown command '{}'", c.command));
}

}  // namespace qbpm::cli
