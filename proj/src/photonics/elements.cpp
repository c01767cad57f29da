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

#include "hdsim/photonics/elements.hpp"

#include <cmath>
#include <stdexcept>

#include "hdsim/state_ops.hpp"

namespace hdsim::photonics {

EncodingMap EncodingMap::qubit(std::string photon) {
  return EncodingMap{std::move(photon), 2, {"H", "V"}};
}

EncodingMap EncodingMap::ququart(std::string photon) {
  return EncodingMap{std::move(photon), 4, {"Hu", "Hl", "Vu", "Vl"}};
}

UnitaryOp hwp(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("hwp: angle must be finite");
  }
  const double c = std::cos(2.0 * theta);
  const double s = std::sin(2.0 * theta);
  Eigen::Matrix2cd m;
  m << c, s, s, -c;
  return UnitaryOp(m);
}

UnitaryOp qwp(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("qwp: angle must be finite");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix2d rot;
  rot << c, -s, s, c;
  Eigen::Matrix2cd retarder = Eigen::Matrix2cd::Zero();
  retarder(0, 0) = 1.0;
  retarder(1, 1) = Complex(0.0, 1.0);
  return UnitaryOp(rot.cast<Complex>() * retarder * rot.transpose().cast<Complex>());
}

UnitaryOp beam_displacer() {
  // Basis order (pol, path): Hu, Hl, Vu, Vl.  V swaps the path.
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(3, 2) = 1.0;
  m(2, 3) = 1.0;
  return UnitaryOp(m);
}

UnitaryOp polarization_cnot() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(3, 2) = 1.0;
  m(2, 3) = 1.0;
  return UnitaryOp(m);
}

GateRecord ppbs_cnot(const PureState& state, int control, int target,
                     double success_prob) {
  if (state.reg().dim(control) != 2 || state.reg().dim(target) != 2) {
    throw std::invalid_argument("ppbs_cnot: control and target must be qubits");
  }
  if (!(success_prob > 0.0) || success_prob > 1.0) {
    throw std::invalid_argument("ppbs_cnot: success probability must be in (0, 1]");
  }
  PureState next = apply_unitary(state, polarization_cnot(), {control, target});
  return GateRecord{std::move(next), success_prob};
}

}  // namespace hdsim::photonics
