// Copyright 2026 The hdsim Authors
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

#include "hdsim/estimation/settings.hpp"

#include <cmath>
#include <stdexcept>

#include "hdsim/state_ops.hpp"

namespace hdsim::estimation {

char basis_char(PauliBasis basis) {
  switch (basis) {
    case PauliBasis::X: return 'X';
    case PauliBasis::Y: return 'Y';
    case PauliBasis::Z: return 'Z';
  }
  throw std::invalid_argument("basis_char: unknown basis");
}

Eigen::Matrix2cd pauli_matrix(PauliBasis basis) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  switch (basis) {
    case PauliBasis::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case PauliBasis::Y:
      m(0, 1) = Complex(0.0, -1.0);
      m(1, 0) = Complex(0.0, 1.0);
      break;
    case PauliBasis::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

Eigen::Vector2cd pauli_eigenvector(PauliBasis basis, int bit) {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Vector2cd v;
  switch (basis) {
    case PauliBasis::X:
      v << s, (bit == 0 ? s : -s);
      break;
    case PauliBasis::Y:
      v << s, (bit == 0 ? Complex(0.0, s) : Complex(0.0, -s));
      break;
    case PauliBasis::Z:
      v << (bit == 0 ? 1.0 : 0.0), (bit == 0 ? 0.0 : 1.0);
      break;
  }
  return v;
}

std::string MeasurementSetting::label() const {
  const std::array<PauliBasis, 4> ax = axes();
  std::string out;
  for (PauliBasis basis : ax) out.push_back(basis_char(basis));
  return out;
}

std::array<MeasurementSetting, 9> nine_settings() {
  std::array<MeasurementSetting, 9> out;
  int i = 0;
  for (PauliBasis a : kAllBases) {
    for (PauliBasis b : kAllBases) {
      out[i++] = MeasurementSetting{a, b};
    }
  }
  return out;
}

std::vector<double> qubit_outcome_probabilities(const MixedState& rho,
                                                std::span<const PauliBasis> axes) {
  const int k = static_cast<int>(axes.size());
  if (rho.reg().size() != k) {
    throw std::invalid_argument("qubit_outcome_probabilities: axis count mismatch");
  }
  for (int i = 0; i < k; ++i) {
    if (rho.reg().dim(i) != 2) {
      throw std::invalid_argument("qubit_outcome_probabilities: all subsystems must be qubits");
    }
  }
  const int n_outcomes = 1 << k;
  std::vector<double> probs(n_outcomes);
  for (int outcome = 0; outcome < n_outcomes; ++outcome) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(1);
    for (int q = 0; q < k; ++q) {
      const int bit = (outcome >> (k - 1 - q)) & 1;
      const Eigen::Vector2cd e = pauli_eigenvector(axes[q], bit);
      Eigen::VectorXcd next(v.size() * 2);
      for (Eigen::Index i = 0; i < v.size(); ++i) {
        next(2 * i) = v(i) * e(0);
        next(2 * i + 1) = v(i) * e(1);
      }
      v = std::move(next);
    }
    probs[outcome] = std::max(0.0, std::real(Complex(v.dot(rho.matrix() * v))));
  }
  return probs;
}

std::array<double, 16> outcome_probabilities(const MixedState& rho,
                                             const MeasurementSetting& setting) {
  if (rho.reg().dims() != std::vector<int>{2, 2, 4}) {
    throw std::invalid_argument("outcome_probabilities: state must have dims (2,2,4)");
  }
  const MixedState as_qubits = regroup(rho, DimRegister({2, 2, 2, 2}));
  const std::array<PauliBasis, 4> axes = setting.axes();
  const std::vector<double> probs =
      qubit_outcome_probabilities(as_qubits, std::span(axes.data(), axes.size()));
  std::array<double, 16> out;
  std::copy(probs.begin(), probs.end(), out.begin());
  return out;
}

}  // namespace hdsim::estimation
