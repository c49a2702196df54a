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

// Command-line front end: run configuration, JSON round trip and the
// subcommand drivers behind the `qbpm` executable.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qbpm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitValidationFailure = 3;

/// Bad flags, config files, input files or output paths (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A --verify check or closed-form count did not hold (exit code 3).
class ValidationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Scenario { kDoubleSlit, kGaussian2D, kCustom };
enum class OutputFormat { kCsv, kJson };

std::string to_string(Scenario s);
std::string to_string(OutputFormat f);

/**
 * Everything a run depends on. Zero or empty fields mean "scenario default";
 * resolve_config() replaces them so the stored config is fully explicit.
 *
 * For the Gaussian scenario `z` holds z/z0 and `n_qubits` counts one axis.
 */
struct RunConfig {
  std::string command;
  Scenario scenario = Scenario::kDoubleSlit;
  double wavelength = 532e-9;
  double separation = 0.5e-3;
  double width = 0.1e-3;
  double waist = 0.05;
  double x0 = 0.0;
  double y0 = 0.0;
  double domain_length = 0.0;
  std::vector<double> z;
  std::size_t n_qubits = 0;
  std::uint64_t n_shots = 0;
  std::vector<std::uint64_t> shot_sweep;
  std::size_t n_sim = 0;
  std::uint64_t seed = 1;
  int order = 2;
  /// Transfer-phase coefficients by order; empty selects the paraxial one.
  std::map<int, double> polynomial;
  std::string input;
  std::string out_dir;
  OutputFormat format = OutputFormat::kCsv;
  bool verify = false;
  double tolerance = 1e-9;
};

/// Fills scenario defaults for `config.command` and checks every invariant.
/// Throws ConfigError.
RunConfig resolve_config(RunConfig config);

std::string config_to_json(const RunConfig& config);
/// Unknown keys and wrongly typed values throw ConfigError.
RunConfig config_from_json(std::string_view text);

/// Runs one resolved command; reports go to `out`.
int execute(const RunConfig& config, std::ostream& out);

/// Parses argv, runs the subcommand and maps errors to exit codes.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace qbpm::cli
