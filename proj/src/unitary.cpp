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

#include "hdsim/unitary.hpp"

#include <stdexcept>

namespace hdsim {

UnitaryOp::UnitaryOp(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw std::invalid_argument("UnitaryOp: matrix must be square and non-empty");
  }
  const Eigen::MatrixXcd gram = matrix_.adjoint() * matrix_;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(matrix_.rows(), matrix_.cols());
  if ((gram - id).cwiseAbs().maxCoeff() > kUnitarityTolerance) {
    throw std::invalid_argument("UnitaryOp: matrix is not unitary");
  }
}

UnitaryOp UnitaryOp::identity(int dim) {
  return UnitaryOp(Eigen::MatrixXcd::Identity(dim, dim));
}

}  // namespace hdsim
