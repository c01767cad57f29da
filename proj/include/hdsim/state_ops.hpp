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

#include <optional>
#include <vector>

#include "hdsim/mixed_state.hpp"
#include "hdsim/pure_state.hpp"
#include "hdsim/unitary.hpp"

namespace hdsim {

/// Squared-amplitude threshold below which a projection branch is dead.
inline constexpr double kDeadBranchProbability = 1e-24;

/// Kronecker composition.  The result register is the concatenation of the
/// input registers; throws if the combined dimension exceeds the cap.
PureState tensor(const PureState& a, const PureState& b);
MixedState tensor(const MixedState& a, const MixedState& b);

/// Applies u to the listed subsystems (product of their dims must equal
/// u.dim(); the target order defines the tensor order of u's basis).
/// All other subsystems are untouched; the norm is preserved.
PureState apply_unitary(const PureState& state, const UnitaryOp& u,
                        const std::vector<int>& targets);
MixedState apply_unitary(const MixedState& rho, const UnitaryOp& u,
                         const std::vector<int>& targets);

/// Outcome of projecting a set of subsystems onto a pure state.
///
/// `remainder` is empty when the branch probability is (numerically) zero —
/// a dead branch, never a NaN state — and also when the projection consumed
/// every subsystem, in which case `probability` alone carries the result.
struct Projection {
  double probability = 0.0;
  std::optional<PureState> remainder;

  bool dead_branch() const { return probability <= kDeadBranchProbability; }
};

struct MixedProjection {
  double probability = 0.0;
  std::optional<MixedState> remainder;

  bool dead_branch() const { return probability <= kDeadBranchProbability; }
};

/// Projects `targets` of `state` onto `projector` (registers must match the
/// target dims; projector subsystem j corresponds to targets[j]).  Returns
/// the Born probability and the renormalized state of the remaining
/// subsystems.
Projection project(const PureState& state, const PureState& projector,
                   const std::vector<int>& targets);
MixedProjection project(const MixedState& rho, const PureState& projector,
                        const std::vector<int>& targets);

/// Traces out everything but `keep` (distinct, in-range indices; the output
/// register lists the kept subsystems in the order given).
MixedState partial_trace(const MixedState& rho, const std::vector<int>& keep);

/// <psi|rho|psi>, clamped to [0,1] after a tolerance check.
double fidelity_pure(const PureState& psi, const MixedState& rho);

/// Reinterprets the register without touching amplitudes.  Only the total
/// dimension must match: with row-major indexing, any same-product register
/// is reachable by merging/splitting adjacent subsystems.
PureState regroup(const PureState& state, DimRegister new_register);
MixedState regroup(const MixedState& rho, DimRegister new_register);

}  // namespace hdsim
