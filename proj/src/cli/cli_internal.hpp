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

#include <string>
#include <vector>

#include "qbpm/cli.hpp"
#include "qbpm/scenarios.hpp"
#include "qbpm/state_vector.hpp"

namespace qbpm::cli {

DoubleSlitParams slit_params(const RunConfig& config);
GaussianParams gaussian_params(const RunConfig& config);

/// One "real,imaginary" pair per line; blank lines and '#' comments skipped.
std::vector<Complex> read_field_csv(const std::string& path);

}  // namespace qbpm::cli
