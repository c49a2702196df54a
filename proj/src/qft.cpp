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

#include "qbpm/qft.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace qbpm {

namespace {

void check_width(std::size_t n) {
  if (n < 1 || n > kMaxQftQubits) {
    throw std::invalid_argument("QFT width must be in [1, 24]");
  }
}

}  // namespace

Circuit build_qft(std::size_t n, FourierSign sign) {
  check_width(n);
  Circuit c(n);
  const double s = to_int(sign);
  // Most significant qubit first; qubit j collects the phase of
  // x / 2^(j+1) and ends up holding output bit n-1-j.
  for (std::size_t j = n; j-- > 0;) {
    c.append(Gate::hadamard(j));
    for (std::size_t l = j; l-- > 0;) {
      const double angle = s * std::numbers::pi / std::ldexp(1.0, int(j - l));
      c.append(Gate::controlled_phase(l, j, angle));
    }
  }
  for (std::size_t j = 0; j < n / 2; ++j) {
    c.append(Gate::swap(j, n - 1 - j));
  }
  return c;
}

Circuit build_iqft(std::size_t n, FourierSign sign) {
  return inverse(build_qft(n, sign));
}

std::vector<Complex> dft_oracle(std::span<const Complex> values,
                                FourierSign sign) {
  const std::size_t n = values.size();
  qubits_for_size(n);
  // Twiddle table indexed by (x*y) mod N keeps every angle exact.
  std::vector<Complex> twiddle(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = to_int(sign) * 2.0 * std::numbers::pi *
                         static_cast<double>(k) / static_cast<double>(n);
    twiddle[k] = std::polar(1.0, angle);
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Complex> out(n);
  for (std::size_t y = 0; y < n; ++y) {
    Complex acc = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      acc += twiddle[(static_cast<std::uint64_t>(x) * y) & (n - 1)] * values[x];
    }
    out[y] = acc * scale;
  }
  return out;
}

}  // namespace qbpm
