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

#include "hdsim/pure_state.hpp"

#include <cmath>
#include <stdexcept>

namespace hdsim {

PureState::PureState(DimRegister reg, Eigen::VectorXcd amps)
    : reg_(std::move(reg)), amps_(std::move(amps)) {
  if (amps_.size() != reg_.total_dim()) {
    throw std::invalid_argument("PureState: amplitude count must equal total dimension");
  }
  const double n = amps_.norm();
  if (std::abs(n - 1.0) > kNormTolerance) {
    throw std::invalid_argument("PureState: vector is not normalized (norm = " +
                                std::to_string(n) + ")");
  }
}

NormalizedKet ket_from_amplitudes(const Eigen::VectorXcd& amps, DimRegister reg) {
  if (amps.size() != reg.total_dim()) {
    throw std::invalid_argument("ket_from_amplitudes: length mismatch with register");
  }
  const double n = amps.norm();
  if (n <= 0.0 || !std::isfinite(n)) {
    throw std::invalid_argument("ket_from_amplitudes: zero or non-finite vector");
  }
  return NormalizedKet{PureState(std::move(reg), amps / n), 1.0 / n};
}

PureState basis_ket(DimRegister reg, std::initializer_list<int> digits) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(reg.total_dim());
  std::vector<int> d(digits);
  amps(reg.flat_index(d)) = 1.0;
  return PureState(std::move(reg), std::move(amps));
}

bool approx_equal(const PureState& a, const PureState& b, double tol) {
  if (!a.reg().same_dims(b.reg())) return false;
  return (a.amps() - b.amps()).cwiseAbs().maxCoeff() <= tol;
}

bool approx_equal_up_to_phase(const PureState& a, const PureState& b, double tol) {
  if (!a.reg().same_dims(b.reg())) return false;
  Eigen::Index pivot;
  a.amps().cwiseAbs().maxCoeff(&pivot);
  if (std::abs(a.amp(static_cast<int>(pivot))) == 0.0) return false;
  Complex phase = b.amp(static_cast<int>(pivot)) / a.amp(static_cast<int>(pivot));
  const double mag = std::abs(phase);
  if (std::abs(mag - 1.0) > tol) return false;
  phase /= mag;
  return ((a.amps() * phase) - b.amps()).cwiseAbs().maxCoeff() <= tol;
}

double overlap_fidelity(const PureState& a, const PureState& b) {
  if (!a.reg().same_dims(b.reg())) {
    throw std::invalid_argument("overlap_fidelity: register mismatch");
  }
  return std::norm(Complex(a.amps().dot(b.amps())));
}

}  // namespace hdsim
