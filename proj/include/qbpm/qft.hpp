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

#include <cstddef>
#include <span>
#include <vector>

#include "qbpm/circuit.hpp"
#include "qbpm/state_vector.hpp"

namespace qbpm {

/// Exponent sign of the transform kernel exp(sign * 2*pi*i * x*y / N).
enum class FourierSign : int { kNegative = -1, kPositive = +1 };

inline constexpr FourierSign operator-(FourierSign s) {
  return s == FourierSign::kNegative ? FourierSign::kPositive
                                     : FourierSign::kNegative;
}

inline constexpr int to_int(FourierSign s) { return static_cast<int>(s); }

inline constexpr std::size_t kMaxQftQubits = 24;

/// Circuit for |x> -> N^{-1/2} sum_y exp(sign*2*pi*i*x*y/N) |y>, qubit 0
/// least significant on both sides. Ends with the qubit-reversal swaps, so
/// the gate list is n Hadamards, n(n-1)/2 controlled phases and floor(n/2)
/// swaps.
Circuit build_qft(std::size_t n, FourierSign sign);

/// Exact adjoint of build_qft(n, sign); as a unitary this equals
/// build_qft(n, -sign).
Circuit build_iqft(std::size_t n, FourierSign sign);

/// Dense O(N^2) unitary DFT with the same kernel as build_qft.
std::vector<Complex> dft_oracle(std::span<const Complex> values,
                                FourierSign sign);

}  // namespace qbpm
