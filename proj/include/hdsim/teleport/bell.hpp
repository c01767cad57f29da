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

#include <array>
#include <string>

#include "hdsim/pure_state.hpp"

namespace hdsim::teleport {

/// The four maximally entangled two-qubit states.
enum class BellKind : int { PhiPlus = 0, PhiMinus = 1, PsiPlus = 2, PsiMinus = 3 };

inline constexpr std::array<BellKind, 4> kAllBellKinds = {
    BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus};

std::string bell_name(BellKind kind);

/// Canonical amplitudes over dims (2,2):
///   Phi± = (|00> ± |11>)/√2,  Psi± = (|01> ± |10>)/√2.
PureState bell_state(BellKind kind);

/// 2x2 amplitude matrix M with M(x,j) = <x,j|bell>; handy for the closed-form
/// branch algebra.
Eigen::Matrix2cd bell_matrix(BellKind kind);

/// Result of the two independent qubit-pair Bell measurements.
struct BellOutcomePair {
  BellKind first;   // on the (input qubit 1, resource qubit 1) pair
  BellKind second;  // on the (input qubit 2, resource qubit 2) pair

  int index() const { return static_cast<int>(first) * 4 + static_cast<int>(second); }
  static BellOutcomePair from_index(int index);
  std::string name() const;

  bool operator==(const BellOutcomePair&) const = default;
};

/// Outcome of a measurement in the two-ququart entangled basis, indexed by a
/// phase exponent and a cyclic shift, both mod 4.
struct QuquartBellOutcome {
  int phase;
  int shift;

  int index() const { return phase * 4 + shift; }
  static QuquartBellOutcome from_index(int index);
  std::string name() const;

  bool operator==(const QuquartBellOutcome&) const = default;
};

}  // namespace hdsim::teleport
