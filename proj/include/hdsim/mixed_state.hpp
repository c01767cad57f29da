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

#include "hdsim/dim_register.hpp"
#include "hdsim/pure_state.hpp"

namespace hdsim {

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kEigenvalueFloor = -1e-10;

/// Density operator over a dimension register.
///
/// Construction enforces Hermiticity, unit trace and eigenvalues >= the
/// small negative floor that double arithmetic can produce.
class MixedState {
 public:
  MixedState(DimRegister reg, Eigen::MatrixXcd matrix);

  static MixedState from_pure(const PureState& psi);
  static MixedState maximally_mixed(DimRegister reg);

  const DimRegister& reg() const { return reg_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  int total_dim() const { return reg_.total_dim(); }

 private:
  DimRegister reg_;
  Eigen::MatrixXcd matrix_;
};

}  // namespace hdsim
