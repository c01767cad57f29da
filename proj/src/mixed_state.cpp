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

#include "hdsim/mixed_state.hpp"

#include <cmath>
#include <stdexcept>

namespace hdsim {

MixedState::MixedState(DimRegister reg, Eigen::MatrixXcd matrix)
    : reg_(std::move(reg)), matrix_(std::move(matrix)) {
  const int d = reg_.total_dim();
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw std::invalid_argument("MixedState: matrix must be square of total dimension");
  }
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
    throw std::invalid_argument("MixedState: matrix is not Hermitian");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTolerance) {
    throw std::invalid_argument("MixedState: trace must be 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_,
                                                         Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < kEigenvalueFloor) {
    throw std::invalid_argument("MixedState: matrix has a negative eigenvalue");
  }
}

MixedState MixedState::from_pure(const PureState& psi) {
  return MixedState(psi.reg(), psi.amps() * psi.amps().adjoint());
}

MixedState MixedState::maximally_mixed(DimRegister reg) {
  const int d = reg.total_dim();
  return MixedState(std::move(reg),
                    Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d));
}

}  // namespace hdsim
