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
#include <cstdint>

#include "hdsim/pure_state.hpp"
#include "hdsim/teleport/bell.hpp"
#include "hdsim/unitary.hpp"

namespace hdsim::teleport {

/// The shared resource: two qubits and one ququart with amplitudes 1/2 at
/// (0,0,0), (0,1,1), (1,0,2), (1,1,3).  Grouping the two qubits as one
/// four-level system turns it into the diagonal two-ququart entangled state,
/// which is what makes qubit-pair <-> ququart teleportation work.
PureState make_224_state();

/// One Bell-measurement branch of the joint (input ⊗ resource) state.
struct Branch {
  BellOutcomePair outcome;
  /// Unitary map taking the flattened input pair (α,β,γ,δ) to the ququart
  /// amplitudes conditioned on this outcome.
  Eigen::Matrix4cd transfer;
  /// `transfer` applied to the actual input (normalized conditional state).
  Eigen::Vector4cd conditional;
  double probability;
};

/// The 16-branch decomposition of a two-qubit input against the resource.
class BranchTable {
 public:
  explicit BranchTable(std::array<Branch, 16> branches);

  const Branch& at(BellOutcomePair outcome) const {
    return branches_[outcome.index()];
  }
  const std::array<Branch, 16>& branches() const { return branches_; }

 private:
  std::array<Branch, 16> branches_;
};

/// Closed-form branch expansion: conditional amplitudes and probabilities for
/// all 16 Bell outcome pairs.  Probabilities always sum to 1 and equal 1/16
/// each for a normalized input.
BranchTable expand_joint(const PureState& input);

/// Receiver correction for a Bell outcome pair: the (cached) inverse of that
/// branch's transfer map.  Derived numerically from the branch table rather
/// than transcribed by hand; every entry is a signed permutation.
const UnitaryOp& correction_unitary(BellOutcomePair outcome);

/// How the measurement stage of the forward protocol is run.
struct TeleportMode {
  enum class Kind { DeterministicCorrection, Postselect };
  Kind kind = Kind::DeterministicCorrection;
  /// Postselected branch; the conventional choice is (phi+, phi+), the branch
  /// that needs no correction.
  BellOutcomePair outcome{BellKind::PhiPlus, BellKind::PhiPlus};

  static TeleportMode deterministic() { return {}; }
  static TeleportMode postselect(
      BellOutcomePair outcome = {BellKind::PhiPlus, BellKind::PhiPlus}) {
    return {Kind::Postselect, outcome};
  }
};

struct TeleportRecord {
  BellOutcomePair outcome;
  double probability;
  bool corrected;
};

struct TeleportResult {
  PureState output;  // dims (4)
  TeleportRecord record;
};

/// Two qubits -> one ququart.
///
/// Deterministic mode samples an outcome from the branch probabilities with
/// the given seed and applies the matching correction; the output then equals
/// the relabeled input.  Postselect mode conditions on the fixed outcome and
/// applies no correction.
TeleportResult teleport_forward(const PureState& input, TeleportMode mode,
                                std::uint64_t seed);

/// Sixteen orthonormal maximally entangled two-ququart states
///   B(m,n) = 1/2 Σ_k i^{km} |k>|k⊕n mod 4>,
/// ordered by index() = 4m + n.  B(0,0) is the diagonal state.
std::array<PureState, 16> generalized_bell_basis();

struct ReverseRecord {
  QuquartBellOutcome outcome;
  double probability;
};

struct ReverseResult {
  PureState output;  // dims (2,2)
  ReverseRecord record;
};

/// One ququart -> two qubits, conditioned on a forced measurement outcome.
/// The per-outcome two-qubit correction is derived once by inverting the
/// conditional map and cached; the output always equals the regrouped input.
ReverseResult teleport_reverse_branch(const PureState& input,
                                      QuquartBellOutcome outcome);

/// One ququart -> two qubits with the outcome sampled per seed.
ReverseResult teleport_reverse(const PureState& input, std::uint64_t seed);

struct ClassicalBounds {
  double estimation_limit;  // best measure-and-resend fidelity for a ququart
  double ququart_limit;     // max overlap of any <=3-dimensional state
};

/// Exactly (2/5, 3/4).
ClassicalBounds classical_bounds();

}  // namespace hdsim::teleport
