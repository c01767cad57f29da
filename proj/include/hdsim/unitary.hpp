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

#pragma once

#include <Eigen/Dense>

namespace hdsim {

inline constexpr double kUnitarityTolerance = 1e-10;

/// Square matrix validated against U†U = I elementwise at construction.
class UnitaryOp {
 public:
  explicit UnitaryOp(Eigen::MatrixXcd matrix);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  UnitaryOp adjoint() const { return UnitaryOp(matrix_.adjoint()); }

  static UnitaryOp identity(int dim);

 private:
  Eigen::MatrixXcd matrix_;
};

}  // namespace hdsim
