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

#include "hdsim/teleport/bell.hpp"

#include <cmath>
#include <stdexcept>

namespace hdsim::teleport {

std::string bell_name(BellKind kind) {
  switch (kind) {
    case BellKind::PhiPlus: return "phi+";
    case BellKind::PhiMinus: return "phi-";
    case BellKind::PsiPlus: return "psi+";
    case BellKind::PsiMinus: return "psi-";
  }
  throw std::invalid_argument("bell_name: unknown kind");
}

Eigen::Matrix2cd bell_matrix(BellKind kind) {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  switch (kind) {
    case BellKind::PhiPlus:
      m(0, 0) = s; m(1, 1) = s;
      break;
    case BellKind::PhiMinus:
      m(0, 0) = s; m(1, 1) = -s;
      break;
    case BellKind::PsiPlus:
      m(0, 1) = s; m(1, 0) = s;
      break;
    case BellKind::PsiMinus:
      m(0, 1) = s; m(1, 0) = -s;
      break;
  }
  return m;
}

PureState bell_state(BellKind kind) {
  const Eigen::Matrix2cd m = bell_matrix(kind);
  Eigen::VectorXcd amps(4);
  amps << m(0, 0), m(0, 1), m(1, 0), m(1, 1);
  return PureState(DimRegister({2, 2}), std::move(amps));
}

BellOutcomePair BellOutcomePair::from_index(int index) {
  if (index < 0 || index >= 16) {
    throw std::invalid_argument("BellOutcomePair: index out of range");
  }
  return BellOutcomePair{static_cast<BellKind>(index / 4),
                         static_cast<BellKind>(index % 4)};
}

std::string BellOutcomePair::name() const {
  return bell_name(first) + "," + bell_name(second);
}

QuquartBellOutcome QuquartBellOutcome::from_index(int index) {
  if (index < 0 || index >= 16) {
    throw std::invalid_argument("QuquartBellOutcome: index out of range");
  }
  return QuquartBellOutcome{index / 4, index % 4};
}

std::string QuquartBellOutcome::name() const {
  return "B(" + std::to_string(phase) + "," + std::to_string(shift) + ")";
}

}  // namespace hdsim::teleport
