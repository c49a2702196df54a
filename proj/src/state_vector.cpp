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

#include "qbpm/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace qbpm {

bool is_qubit_register_size(std::size_t n) {
  return n >= 2 && std::has_single_bit(n);
}

std::size_t qubits_for_size(std::size_t n) {
  if (!is_qubit_register_size(n)) {
    throw std::invalid_argument("length " + std::to_string(n) +
                                " is not a power of two >= 2");
  }
  return static_cast<std::size_t>(std::countr_zero(n));
}

StateVector StateVector::from_amplitudes(std::span<const Complex> values) {
  const std::size_t n_qubits = qubits_for_size(values.size());
  if (n_qubits > kMaxQubits) {
    throw std::invalid_argument("register exceeds simulator budget");
  }
  double norm2 = 0.0;
  for (const auto& v : values) norm2 += std::norm(v);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw std::invalid_argument("amplitudes must be finite and not all zero");
  }
  const double scale = 1.0 / std::sqrt(norm2);
  std::vector<Complex> amps(values.begin(), values.end());
  for (auto& a : amps) a *= scale;
  return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::basis(std::size_t n_qubits, std::uint64_t index) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count out of range");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (index >= dim) throw std::out_of_range("basis index out of range");
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

void StateVector::apply(const Gate& gate) {
  if (gate.max_qubit() >= n_qubits_) {
    throw std::out_of_range("gate " + std::string(to_string(gate.kind())) +
                            " acts on qubit " +
                            std::to_string(gate.max_qubit()) + " of a " +
                            std::to_string(n_qubits_) + "-qubit register");
  }
  const std::size_t dim = amplitudes_.size();
  switch (gate.kind()) {
    case GateKind::kHadamard: {
      const std::size_t bit = std::size_t{1} << gate.target();
      constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & bit) continue;
        const Complex a0 = amplitudes_[i];
        const Complex a1 = amplitudes_[i | bit];
        amplitudes_[i] = (a0 + a1) * kInvSqrt2;
        amplitudes_[i | bit] = (a0 - a1) * kInvSqrt2;
      }
      break;
    }
    case GateKind::kPhase:
    case GateKind::kControlledPhase:
    case GateKind::kMultiControlledPhase: {
      std::size_t mask = 0;
      for (Qubit q : gate.qubits()) mask |= std::size_t{1} << q;
      const Complex factor = std::polar(1.0, gate.phi());
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & mask) == mask) amplitudes_[i] *= factor;
      }
      break;
    }
    case GateKind::kSwap: {
      const std::size_t a = std::size_t{1} << gate.qubits()[0];
      const std::size_t b = std::size_t{1} << gate.qubits()[1];
      for (std::size_t i = 0; i < dim; ++i) {
        // Visit each differing pair once, from the side with a set.
        if ((i & a) && !(i & b)) {
          std::swap(amplitudes_[i], amplitudes_[(i ^ a) | b]);
        }
      }
      break;
    }
  }
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amplitudes_.size());
  std::transform(amplitudes_.begin(), amplitudes_.end(), p.begin(),
                 [](const Complex& a) { return std::norm(a); });
  return p;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return std::sqrt(s);
}

StateVector apply_gate(StateVector state, const Gate& gate) {
  state.apply(gate);
  return state;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("fidelity of registers with different sizes");
  }
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    overlap += std::conj(a[i]) * b[i];
  }
  return std::norm(overlap);
}

std::vector<double> SampleCounts::frequencies() const {
  std::vector<double> f(counts.size());
  if (total_shots == 0) return f;
  const double inv = 1.0 / static_cast<double>(total_shots);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    f[i] = static_cast<double>(counts[i]) * inv;
  }
  return f;
}

SampleCounts sample_distribution(std::span<const double> probabilities,
                                 std::uint64_t n_shots, std::uint64_t seed) {
  if (n_shots == 0) throw std::invalid_argument("n_shots must be >= 1");
  if (probabilities.empty()) {
    throw std::invalid_argument("empty probability vector");
  }
  // Tail masses so each conditional probability p_i / tail_i is computed
  // without the drift of a running subtraction.
  std::vector<double> tail(probabilities.size() + 1, 0.0);
  for (std::size_t i = probabilities.size(); i-- > 0;) {
    if (probabilities[i] < 0.0 || !std::isfinite(probabilities[i])) {
      throw std::invalid_argument("probabilities must be finite and >= 0");
    }
    tail[i] = tail[i + 1] + probabilities[i];
  }
  if (!(tail[0] > 0.0)) {
    throw std::invalid_argument("probabilities sum to zero");
  }

  SampleCounts out;
  out.counts.assign(probabilities.size(), 0);
  out.total_shots = n_shots;

  // Sequential conditional binomials realize the multinomial law exactly.
  std::mt19937_64 rng(seed);
  std::uint64_t remaining = n_shots;
  for (std::size_t i = 0; i < probabilities.size() && remaining > 0; ++i) {
    if (probabilities[i] == 0.0) continue;
    const double q = std::min(1.0, probabilities[i] / tail[i]);
    if (q >= 1.0) {
      out.counts[i] = remaining;
      remaining = 0;
      break;
    }
    std::binomial_distribution<std::uint64_t> draw(remaining, q);
    const std::uint64_t k = draw(rng);
    out.counts[i] = k;
    remaining -= k;
  }
  if (remaining > 0) {
    // Only reachable through round-off in the tail masses; give the residue
    // to the last populated index.
    for (std::size_t i = probabilities.size(); i-- > 0;) {
      if (probabilities[i] > 0.0) {
        out.counts[i] += remaining;
        break;
      }
    }
  }
  return out;
}

SampleCounts sample(const StateVector& state, std::uint64_t n_shots,
                    std::uint64_t seed) {
  const auto p = state.probabilities();
  return sample_distribution(p, n_shots, seed);
}

}  // namespace qbpm
