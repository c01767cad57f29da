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

#include "hdsim/teleport/protocol.hpp"

#include <cmath>
#include <stdexcept>

#include "hdsim/random.hpp"
#include "hdsim/state_ops.hpp"

namespace hdsim::teleport {
namespace {

// i^k for k mod 4.
Complex imag_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void require_dims(const PureState& state, const std::vector<int>& dims,
                  const char* what) {
  if (state.reg().dims() != dims) {
    throw std::invalid_argument(std::string(what) + ": unexpected register shape");
  }
}

}  // namespace

PureState make_224_state() {
  DimRegister reg({2, 2, 4}, {"a1", "a2", "b"});
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(16);
  for (int k = 0; k < 4; ++k) {
    // Qubit pair value k together with ququart value k.
    amps(reg.flat_index(std::vector<int>{k / 2, k % 2, k})) = 0.5;
  }
  return PureState(std::move(reg), std::move(amps));
}

BranchTable::BranchTable(std::array<Branch, 16> branches)
    : branches_(std::move(branches)) {
  for (int i = 0; i < 16; ++i) {
    if (branches_[i].outcome.index() != i) {
      throw std::invalid_argument("BranchTable: branches out of order");
    }
  }
}

BranchTable expand_joint(const PureState& input) {
  require_dims(input, {2, 2}, "expand_joint");
  // Input as a 2x2 coefficient matrix c(x,y) = <x,y|input>.
  Eigen::Matrix2cd c;
  c << input.amp(0), input.amp(1), input.amp(2), input.amp(3);

  std::array<Branch, 16> branches = {};
  for (int i = 0; i < 16; ++i) {
    const BellOutcomePair outcome = BellOutcomePair::from_index(i);
    const Eigen::Matrix2cd m1 = bell_matrix(outcome.first);
    const Eigen::Matrix2cd m2 = bell_matrix(outcome.second);

    // Projecting the two qubit pairs of (input ⊗ resource) onto the Bell
    // states with amplitude matrices m1, m2 leaves the ququart amplitude
    //   u(j,k) = 1/2 Σ_{x,y} conj(m1(x,j)) conj(m2(y,k)) c(x,y),
    // flattened at index 2j+k.  The per-input transfer map scaled to unit
    // norm is t = 2 * m1† ⊗ m2† acting on c as a matrix.
    Eigen::Matrix4cd transfer = Eigen::Matrix4cd::Zero();
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int x = 0; x < 2; ++x) {
          for (int y = 0; y < 2; ++y) {
            transfer(2 * j + k, 2 * x + y) =
                2.0 * std::conj(m1(x, j)) * std::conj(m2(y, k));
          }
        }
      }
    }
    const Eigen::Matrix2cd u = 0.5 * m1.adjoint() * c * m2.conjugate();
    Eigen::Vector4cd unnormalized;
    unnormalized << u(0, 0), u(0, 1), u(1, 0), u(1, 1);
    const double probability = unnormalized.squaredNorm();

    Branch branch;
    branch.outcome = outcome;
    branch.transfer = transfer;
    branch.conditional = probability > 0.0
                             ? Eigen::Vector4cd(unnormalized / std::sqrt(probability))
                             : Eigen::Vector4cd::Zero().eval();
    branch.probability = probability;
    branches[i] = branch;
  }
  return BranchTable(std::move(branches));
}

const UnitaryOp& correction_unitary(BellOutcomePair outcome) {
  // Inverting each branch's transfer map once covers all inputs; the table
  // is computed on first use and read-only afterwards.
  static const std::array<UnitaryOp, 16> table = [] {
    const PureState probe =
        PureState(DimRegister({2, 2}), Eigen::Vector4cd(0.5, 0.5, 0.5, 0.5));
    const BranchTable branches = expand_joint(probe);
    std::array<UnitaryOp, 16> out = {
        UnitaryOp::identity(4), UnitaryOp::identity(4), UnitaryOp::identity(4),
        UnitaryOp::identity(4), UnitaryOp::identity(4), UnitaryOp::identity(4),
        UnitaryOp::identity(4), UnitaryOp::identity(4), UnitaryOp::identity(4),
        UnitaryOp::identity(4), UnitaryOp::identity(4), UnitaryOp::identity(4),
        UnitaryOp::identity(4), UnitaryOp::identity(4), UnitaryOp::identity(4),
        UnitaryOp::identity(4)};
    for (int i = 0; i < 16; ++i) {
      out[i] = UnitaryOp(branches.branches()[i].transfer).adjoint();
    }
    return out;
  }();
  return table[outcome.index()];
}

TeleportResult teleport_forward(const PureState& input, TeleportMode mode,
                                std::uint64_t seed) {
  require_dims(input, {2, 2}, "teleport_forward");
  const BranchTable table = expand_joint(input);

  BellOutcomePair outcome = mode.outcome;
  if (mode.kind == TeleportMode::Kind::DeterministicCorrection) {
    std::array<double, 16> probs;
    for (int i = 0; i < 16; ++i) probs[i] = table.branches()[i].probability;
    rng::Engine engine(seed);
    outcome = BellOutcomePair::from_index(engine.categorical(probs));
  }

  const Branch& branch = table.at(outcome);
  Eigen::VectorXcd amps = branch.conditional;
  const bool corrected = mode.kind == TeleportMode::Kind::DeterministicCorrection;
  if (corrected) {
    amps = correction_unitary(outcome).matrix() * amps;
  }
  return TeleportResult{PureState(DimRegister({4}, {"b"}), std::move(amps)),
                        TeleportRecord{outcome, branch.probability, corrected}};
}

std::array<PureState, 16> generalized_bell_basis() {
  std::vector<PureState> states;
  states.reserve(16);
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      DimRegister reg({4, 4});
      Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(16);
      for (int k = 0; k < 4; ++k) {
        amps(reg.flat_index(std::vector<int>{k, (k + n) % 4})) =
            0.5 * imag_power(k * m);
      }
      states.emplace_back(std::move(reg), std::move(amps));
    }
  }
  return {states[0],  states[1],  states[2],  states[3], states[4],  states[5],
          states[6],  states[7],  states[8],  states[9], states[10], states[11],
          states[12], states[13], states[14], states[15]};
}

namespace {

// Conditional map of the reverse protocol for one measurement outcome:
// columns are the unnormalized two-qubit states left on the resource qubits
// after projecting (input, ququart) onto the entangled basis state, for each
// ququart basis input.
Eigen::Matrix4cd reverse_conditional_map(const PureState& basis_state) {
  const PureState resource = make_224_state();
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  for (int j = 0; j < 4; ++j) {
    const PureState joint =
        tensor(basis_ket(DimRegister({4}), {j}), resource);
    // Joint register: (input, a1, a2, b); measure the (input, b) pair.
    const Projection proj = project(joint, basis_state, {0, 3});
    if (proj.remainder.has_value()) {
      m.col(j) = std::sqrt(proj.probability) * proj.remainder->amps();
    }
  }
  return m;
}

const std::array<UnitaryOp, 16>& reverse_corrections() {
  static const std::array<UnitaryOp, 16> table = [] {
    const std::array<PureState, 16> basis = generalized_bell_basis();
    std::array<UnitaryOp, 16> out = {
        UnitaryOp::identity(4), UnitaryOp::identity(4), UnitaryOp::identity(4),
        UnitaryOp::identity(4), UnitaryOp::identity(4), UnitaryOp::identity(4),
        UnitaryOp::identity(4), UnitaryOp::identity(4), UnitaryOp::identity(4),
        UnitaryOp::identity(4), UnitaryOp::identity(4), UnitaryOp::identity(4),
        UnitaryOp::identity(4), UnitaryOp::identity(4), UnitaryOp::identity(4),
        UnitaryOp::identity(4)};
    for (int i = 0; i < 16; ++i) {
      // Each conditional map is 1/4 of a unitary; undoing it is its scaled
      // adjoint.  The UnitaryOp constructor re-checks unitarity.
      out[i] = UnitaryOp(Eigen::MatrixXcd(4.0 * reverse_conditional_map(basis[i])))
                   .adjoint();
    }
    return out;
  }();
  return table;
}

}  // namespace

ReverseResult teleport_reverse_branch(const PureState& input,
                                      QuquartBellOutcome outcome) {
  require_dims(input, {4}, "teleport_reverse");
  const std::array<PureState, 16> basis = generalized_bell_basis();
  const PureState joint = tensor(input, make_224_state());
  const Projection proj = project(joint, basis[outcome.index()], {0, 3});
  if (!proj.remainder.has_value()) {
    throw std::runtime_error("teleport_reverse: dead branch for outcome " +
                             outcome.name());
  }
  PureState output =
      apply_unitary(*proj.remainder, reverse_corrections()[outcome.index()], {0, 1});
  return ReverseResult{std::move(output), ReverseRecord{outcome, proj.probability}};
}

ReverseResult teleport_reverse(const PureState& input, std::uint64_t seed) {
  require_dims(input, {4}, "teleport_reverse");
  const std::array<PureState, 16> basis = generalized_bell_basis();
  const PureState joint = tensor(input, make_224_state());
  std::array<double, 16> probs;
  for (int i = 0; i < 16; ++i) {
    probs[i] = project(joint, basis[i], {0, 3}).probability;
  }
  rng::Engine engine(seed);
  const QuquartBellOutcome outcome =
      QuquartBellOutcome::from_index(engine.categorical(probs));
  return teleport_reverse_branch(input, outcome);
}

ClassicalBounds classical_bounds() { return {2.0 / 5.0, 3.0 / 4.0}; }

}  // namespace hdsim::teleport
