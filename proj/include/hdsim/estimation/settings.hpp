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
#include <span>
#include <string>
#include <vector>

#include "hdsim/mixed_state.hpp"

namespace hdsim::estimation {

enum class PauliBasis : int { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<PauliBasis, 3> kAllBases = {PauliBasis::X, PauliBasis::Y,
                                                        PauliBasis::Z};

char basis_char(PauliBasis basis);
Eigen::Matrix2cd pauli_matrix(PauliBasis basis);
/// Eigenvector of the basis operator; bit 0 is the +1 eigenvector.
Eigen::Vector2cd pauli_eigenvector(PauliBasis basis, int bit);

/// A local measurement configuration for the four effective qubits
/// (a1, a2, b-polarization, b-path), constrained to the (A, B, A, B)
/// pattern.  The qubit-pair / ququart resource regrouped as
/// (a1, b_pol)(a2, b_path) is a product of two maximally entangled pairs,
/// so its fidelity witness needs exactly the <A A> ⊗ <B B> correlators.
struct MeasurementSetting {
  PauliBasis a;  // on a1 and b_pol
  PauliBasis b;  // on a2 and b_path

  std::array<PauliBasis, 4> axes() const { return {a, b, a, b}; }
  std::string label() const;

  bool operator==(const MeasurementSetting&) const = default;
};

/// All nine (A, B) settings, A-major: XX, XY, XZ, YX, ..., ZZ.
std::array<MeasurementSetting, 9> nine_settings();

/// Probabilities of the 2^k joint ±1 outcomes when each qubit of a
/// k-qubit density operator is measured along its listed axis.  Outcome
/// bits are packed row-major (first qubit most significant), bit 0 = +1.
std::vector<double> qubit_outcome_probabilities(const MixedState& rho,
                                                std::span<const PauliBasis> axes);

/// The 16 joint outcome probabilities of a (2,2,4) state under a setting,
/// with the ququart regrouped into its polarization and path qubits.
std::array<double, 16> outcome_probabilities(const MixedState& rho,
                                             const MeasurementSetting& setting);

}  // namespace hdsim::estimation
