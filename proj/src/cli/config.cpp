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

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <set>
#include <sstream>

#include "cli_internal.hpp"
#include "qbpm/cli.hpp"
#include "qbpm/propagator.hpp"
#include "qbpm/scenarios.hpp"

namespace qbpm::cli {

using nlohmann::json;

namespace {

const std::set<std::string, std::less<>> kCommands = {
    "double-slit", "gaussian-2d", "propagate",
    "error-analysis", "gate-count", "export-qasm"};

constexpr double kDefaultCustomLength = 1e-3;

Scenario scenario_from_string(const std::string& s) {
  if (s == "double-slit") return Scenario::kDoubleSlit;
  if (s == "gaussian-2d") return Scenario::kGaussian2D;
  if (s == "custom") return Scenario::kCustom;
  throw ConfigError(fmt::format("unknown scenario '{}'", s));
}

OutputFormat format_from_string(const std::string& s) {
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "json") return OutputFormat::kJson;
  throw ConfigError(fmt::format("unknown output format '{}'", s));
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

void require_positive(double v, const char* name) {
  require(std::isfinite(v) && v > 0.0, fmt::format("{} must be > 0", name));
}

template <typename T>
void set_default(T& field, const T& value) {
  if (field == T{}) field = value;
}

void resolve_slit(RunConfig& c) {
  set_default<std::size_t>(c.n_qubits, 15);
  DoubleSlitParams p = slit_params(c);
  c.domain_length = p.resolved_domain_length();
  try {
    p.domain_length = c.domain_length;
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

void resolve_gaussian(RunConfig& c) {
  set_default<std::size_t>(c.n_qubits, 5);
  require(2 * c.n_qubits <= 24, "2D register allows at most 12 qubits per axis");
  set_default(c.domain_length,
              c.waist * std::ldexp(1.0, static_cast<int>(c.n_qubits)) /
                  kDefaultCellsPerWaist);
  try {
    gaussian_params(c).validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::kDoubleSlit: return "double-slit";
    case Scenario::kGaussian2D: return "gaussian-2d";
    case Scenario::kCustom: return "custom";
  }
  return "?";
}

std::string to_string(OutputFormat f) {
  return f == OutputFormat::kCsv ? "csv" : "json";
}

DoubleSlitParams slit_params(const RunConfig& c) {
  DoubleSlitParams p;
  p.separation = c.separation;
  p.width = c.width;
  p.wavelength = c.wavelength;
  p.n_qubits = c.n_qubits;
  p.domain_length = c.domain_length;
  return p;
}

GaussianParams gaussian_params(const RunConfig& c) {
  GaussianParams p;
  p.waist = c.waist;
  p.x0 = c.x0;
  p.y0 = c.y0;
  p.wavelength = c.wavelength;
  p.n_qubits_per_axis = c.n_qubits;
  p.domain_x = c.domain_length;
  p.domain_y = c.domain_length;
  return p;
}

std::vector<Complex> read_field_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot read input field '{}'", path));
  std::vector<Complex> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(row >> re >> comma >> im) || comma != ',' || !std::isfinite(re) ||
        !std::isfinite(im)) {
      throw ConfigError(
          fmt::format("{}:{}: expected 'real,imaginary'", path, line_no));
    }
    std::string rest;
    if (row >> rest) {
      throw ConfigError(fmt::format("{}:{}: trailing data", path, line_no));
    }
    values.emplace_back(re, im);
  }
  if (!is_qubit_register_size(values.size())) {
    throw ConfigError(fmt::format(
        "input field has {} points; need 2^n with 1 <= n <= 24", values.size()));
  }
  return values;
}

RunConfig resolve_config(RunConfig c) {
  require(kCommands.contains(c.command),
          fmt::format("unknown command '{}'", c.command));
  require_positive(c.wavelength, "wavelength");
  require_positive(c.separation, "separation");
  require_positive(c.width, "width");
  require_positive(c.waist, "waist");
  require(c.domain_length >= 0.0 && std::isfinite(c.domain_length),
          "domain_length must be > 0");
  for (double z : c.z) {
    require(std::isfinite(z) && z >= 0.0, "z values must be >= 0");
  }
  for (const auto& [order, coef] : c.polynomial) {
    require(order >= 1 && order <= kMaxMonomialOrder,
            fmt::format("polynomial order {} outside 1..{}", order,
                        kMaxMonomialOrder));
    require(std::isfinite(coef), "polynomial coefficients must be finite");
  }
  for (auto s : c.shot_sweep) require(s > 0, "shot counts must be > 0");
  require(std::isfinite(c.tolerance) && c.tolerance > 0.0,
          "tolerance must be > 0");
  set_default<std::string>(c.out_dir, "qbpm-output");

  const std::string& cmd = c.command;
  if (cmd == "double-slit") c.scenario = Scenario::kDoubleSlit;
  if (cmd == "gaussian-2d") c.scenario = Scenario::kGaussian2D;
  if (cmd == "propagate") c.scenario = Scenario::kCustom;

  if (cmd == "gate-count") {
    set_default<std::size_t>(c.n_qubits, 15);
    require(c.n_qubits >= 1 && c.n_qubits <= 24, "qubits must be in 1..24");
    require(c.order >= 1 && c.order <= kMaxMonomialOrder,
            fmt::format("order must be in 1..{}", kMaxMonomialOrder));
    return c;
  }

  if (cmd == "propagate") {
    require(!c.input.empty(), "propagate needs --input");
    const std::size_t n = qubits_for_size(read_field_csv(c.input).size());
    require(c.n_qubits == 0 || c.n_qubits == n,
            fmt::format("input has {} qubits but {} were requested", n,
                        c.n_qubits));
    c.n_qubits = n;
    set_default(c.domain_length, kDefaultCustomLength);
    set_default(c.z, std::vector<double>{0.01});
    return c;
  }

  require(c.scenario != Scenario::kCustom,
          fmt::format("{} needs scenario double-slit or gaussian-2d", cmd));
  const bool slit = c.scenario == Scenario::kDoubleSlit;
  if (slit) {
    resolve_slit(c);
  } else {
    resolve_gaussian(c);
  }

  if (cmd == "export-qasm") {
    set_default(c.z, std::vector<double>{slit ? 0.1 : 1.0});
    require(c.z.size() == 1, "export-qasm takes a single z");
    return c;
  }

  set_default(c.z, slit ? std::vector<double>{0.0, 0.10, 0.14, 0.18}
                        : std::vector<double>{0.0, 1.0, 2.0, 3.0});
  set_default<std::uint64_t>(c.n_shots, slit ? 100000 : 50000);
  if (cmd == "error-analysis" || !slit) {
    set_default(c.shot_sweep,
                slit ? std::vector<std::uint64_t>{1000, 10000, 100000, 1000000}
                     : std::vector<std::uint64_t>{100, 1000, 10000, 50000});
    set_default<std::size_t>(c.n_sim, 100);
    require(c.n_sim >= 2, "error statistics need at least 2 simulations");
  }
  return c;
}

std::string config_to_json(const RunConfig& c) {
  json poly = json::object();
  for (const auto& [order, coef] : c.polynomial) poly[std::to_string(order)] = coef;
  json j = {
      {"command", c.command},
      {"scenario", to_string(c.scenario)},
      {"wavelength", c.wavelength},
      {"separation", c.separation},
      {"width", c.width},
      {"waist", c.waist},
      {"x0", c.x0},
      {"y0", c.y0},
      {"domain_length", c.domain_length},
      {"z", c.z},
      {"n_qubits", c.n_qubits},
      {"n_shots", c.n_shots},
      {"shot_sweep", c.shot_sweep},
      {"n_sim", c.n_sim},
      {"seed", c.seed},
      {"order", c.order},
      {"polynomial", poly},
      {"input", c.input},
      {"out", c.out_dir},
      {"format", to_string(c.format)},
      {"verify", c.verify},
      {"tolerance", c.tolerance},
  };
  return j.dump(2) + "\n";
}

RunConfig config_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(fmt::format("config is not valid JSON: {}", e.what()));
  }
  require(j.is_object(), "config must be a JSON object");
  RunConfig c;
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "command") c.command = v.get<std::string>();
      else if (key == "scenario") c.scenario = scenario_from_string(v.get<std::string>());
      else if (key == "wavelength") c.wavelength = v.get<double>();
      else if (key == "separation") c.separation = v.get<double>();
      else if (key == "width") c.width = v.get<double>();
      else if (key == "waist") c.waist = v.get<double>();
      else if (key == "x0") c.x0 = v.get<double>();
      else if (key == "y0") c.y0 = v.get<double>();
      else if (key == "domain_length") c.domain_length = v.get<double>();
      else if (key == "z") c.z = v.get<std::vector<double>>();
      else if (key == "n_qubits") c.n_qubits = v.get<std::size_t>();
      else if (key == "n_shots") c.n_shots = v.get<std::uint64_t>();
      else if (key == "shot_sweep") c.shot_sweep = v.get<std::vector<std::uint64_t>>();
      else if (key == "n_sim") c.n_sim = v.get<std::size_t>();
      else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else if (key == "order") c.order = v.get<int>();
      else if (key == "polynomial") {
        require(v.is_object(), "polynomial must map order to coefficient");
        for (const auto& [order, coef] : v.items()) {
          c.polynomial[std::stoi(order)] = coef.get<double>();
        }
      }
      else if (key == "input") c.input = v.get<std::string>();
      else if (key == "out") c.out_dir = v.get<std::string>();
      else if (key == "format") c.format = format_from_string(v.get<std::string>());
      else if (key == "verify") c.verify = v.get<bool>();
      else if (key == "tolerance") c.tolerance = v.get<double>();
      else throw ConfigError(fmt::format("unknown config key '{}'", key));
    }
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("bad config value: {}", e.what()));
  } catch (const std::logic_error& e) {  // std::stoi
    throw ConfigError(fmt::format("bad polynomial order: {}", e.what()));
  }
  return c;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Quantum beam propagation: circuits, experiments and exports"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, scenario, format;
  std::uint64_t seed = 0, shots = 0;
  std::size_t sims = 0, qubits = 0;
  int order = 0;
  double domain = 0.0, wavelength = 0.0;
  std::vector<double> zs;
  std::vector<std::uint64_t> sweep;
  std::string out_dir, input;
  bool verify = false;

  std::map<std::string, CLI::Option*> opt;
  opt["config"] = app.add_option("--config", config_path, "JSON run configuration");
  opt["scenario"] = app.add_option("--scenario", scenario,
                                   "double-slit | gaussian-2d | custom");
  opt["seed"] = app.add_option("--seed", seed, "base RNG seed");
  opt["shots"] = app.add_option("--shots", shots, "shots per histogram");
  opt["sweep"] = app.add_option("--sweep", sweep, "shot counts for error sweeps")
                     ->take_all();
  opt["sims"] = app.add_option("--sims", sims, "independent runs per statistic");
  opt["qubits"] = app.add_option("--qubits", qubits, "register width (per axis in 2D)");
  opt["order"] = app.add_option("--order", order, "monomial order for gate-count");
  opt["z"] = app.add_option("--z", zs, "propagation distance, repeatable (z/z0 in 2D)")
                 ->take_all();
  opt["domain"] = app.add_option("--domain-length", domain, "transverse domain length L");
  opt["wavelength"] = app.add_option("--wavelength", wavelength, "wavelength");
  opt["out"] = app.add_option("--out", out_dir, "output directory");
  opt["format"] = app.add_option("--format", format, "csv | json")
                      ->check(CLI::IsMember({"csv", "json"}));
  opt["input"] = app.add_option("--input", input, "field CSV (real,imaginary)");
  opt["verify"] = app.add_flag("--verify", verify,
                               "fail with exit 3 if the classical check deviates");

  for (const auto& name : kCommands) {
    app.add_subcommand(name, fmt::format("run {}", name));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    RunConfig c;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      require(static_cast<bool>(in),
              fmt::format("cannot read config '{}'", config_path));
      std::stringstream buffer;
      buffer << in.rdbuf();
      c = config_from_json(buffer.str());
    }
    c.command = app.get_subcommands().front()->get_name();
    auto given = [&](const char* name) { return opt.at(name)->count() > 0; };
    if (given("scenario")) c.scenario = scenario_from_string(scenario);
    if (given("seed")) c.seed = seed;
    if (given("shots")) c.n_shots = shots;
    if (given("sweep")) c.shot_sweep = sweep;
    if (given("sims")) c.n_sim = sims;
    if (given("qubits")) c.n_qubits = qubits;
    if (given("order")) c.order = order;
    if (given("z")) c.z = zs;
    if (given("domain")) c.domain_length = domain;
    if (given("wavelength")) c.wavelength = wavelength;
    if (given("out")) c.out_dir = out_dir;
    if (given("format")) c.format = format_from_string(format);
    if (given("input")) c.input = input;
    if (given("verify")) c.verify = verify;
    return execute(resolve_config(std::move(c)), out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const ValidationFailure& e) {
    err << "validation failed: " << e.what() << "\n";
    return kExitValidationFailure;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidationFailure;
  }
}

}  // namespace qbpm::cli
