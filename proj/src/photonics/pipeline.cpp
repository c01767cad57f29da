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

#include "hdsim/photonics/pipeline.hpp"

#include <cmath>
#include <stdexcept>

#include "hdsim/teleport/bell.hpp"

namespace hdsim::photonics {
namespace {

// 8x8 unitary on (control_pol, target_pol, path): CNOT applied only when the
// path qubit holds `path_value`.
UnitaryOp path_conditioned_cnot(int path_value) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(8, 8);
  for (int c = 0; c < 2; ++c) {
    for (int t = 0; t < 2; ++t) {
      for (int p = 0; p < 2; ++p) {
        const int in = (c * 2 + t) * 2 + p;
        const int t_out = (p == path_value && c == 1) ? 1 - t : t;
        const int out = (c * 2 + t_out) * 2 + p;
        m(out, in) = 1.0;
      }
    }
  }
  return UnitaryOp(std::move(m));
}

}  // namespace

SetupPipeline::SetupPipeline(PureState initial) : state_(std::move(initial)) {}

void SetupPipeline::apply(const OpticalElement& element) {
  std::visit(
      [this](const auto& el) {
        using T = std::decay_t<decltype(el)>;
        if constexpr (std::is_same_v<T, Hwp>) {
          state_ = apply_unitary(state_, hwp(el.theta), {el.target});
        } else if constexpr (std::is_same_v<T, Qwp>) {
          state_ = apply_unitary(state_, qwp(el.theta), {el.target});
        } else if constexpr (std::is_same_v<T, BeamDisplacer>) {
          state_ = apply_unitary(state_, beam_displacer(), {el.pol, el.path});
        } else if constexpr (std::is_same_v<T, Pbs>) {
          const PureState port =
              basis_ket(DimRegister({2}), {el.keep_port == 0 ? 0 : 1});
          postselect(port, {el.target});
        } else if constexpr (std::is_same_v<T, PpbsCnot>) {
          if (state_.reg().dim(el.control) != 2 || state_.reg().dim(el.target) != 2) {
            throw std::invalid_argument("PpbsCnot: control and target must be qubits");
          }
          if (!(el.success_prob > 0.0) || el.success_prob > 1.0) {
            throw std::invalid_argument("PpbsCnot: success probability out of (0, 1]");
          }
          if (el.conditioned_on_path.has_value()) {
            state_ = apply_unitary(
                state_, path_conditioned_cnot(el.path_value),
                {el.control, el.target, *el.conditioned_on_path});
          } else {
            state_ = apply_unitary(state_, polarization_cnot(), {el.control, el.target});
          }
          declare_success_factor(el.success_prob);
        } else if constexpr (std::is_same_v<T, DofConverter>) {
          state_ = apply_unitary(state_, beam_displacer(), {el.pol, el.path});
          // Reset the polarization: flip it back to H in the displaced path.
          state_ = apply_unitary(state_, polarization_cnot(), {el.path, el.pol});
        }
      },
      element);
}

void SetupPipeline::postselect(const PureState& projector,
                               const std::vector<int>& targets) {
  Projection proj = project(state_, projector, targets);
  if (proj.dead_branch() || !proj.remainder.has_value()) {
    throw std::runtime_error("SetupPipeline: postselection killed the state");
  }
  success_ *= proj.probability;
  state_ = std::move(*proj.remainder);
}

void SetupPipeline::declare_success_factor(double factor) {
  if (!(factor > 0.0) || factor > 1.0) {
    throw std::invalid_argument("SetupPipeline: success factor must be in (0, 1]");
  }
  success_ *= factor;
}

void SetupPipeline::expect_output_dims(const std::vector<int>& dims) const {
  if (state_.reg().dims() != dims) {
    throw std::runtime_error("SetupPipeline: declared output shape does not match");
  }
}

PureState dof_converter_expand(const PureState& pol_qubit) {
  if (pol_qubit.reg().dims() != std::vector<int>{2}) {
    throw std::invalid_argument("dof_converter_expand: input must be one qubit");
  }
  return dof_expand_subsystem(pol_qubit, 0);
}

PureState dof_expand_subsystem(const PureState& state, int index) {
  if (state.reg().dim(index) != 2) {
    throw std::invalid_argument("dof_expand_subsystem: subsystem must be a qubit");
  }
  const DimRegister& reg = state.reg();
  std::vector<int> dims = reg.dims();
  dims.insert(dims.begin() + index + 1, 2);
  std::vector<std::string> labels = reg.labels();
  if (!labels.empty()) {
    labels.insert(labels.begin() + index + 1, labels[index] + "_path");
  }
  DimRegister out_reg(dims, labels);

  // |x> at `index` becomes |pol=H, path=x>.
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(out_reg.total_dim());
  for (int flat = 0; flat < reg.total_dim(); ++flat) {
    std::vector<int> digits = reg.digits(flat);
    std::vector<int> out_digits = digits;
    out_digits[index] = 0;
    out_digits.insert(out_digits.begin() + index + 1, digits[index]);
    amps(out_reg.flat_index(out_digits)) = state.amp(flat);
  }
  return PureState(std::move(out_reg), std::move(amps));
}

PureState dof_converter_contract(const PureState& pol_path) {
  if (pol_path.reg().dims() != std::vector<int>{2, 2}) {
    throw std::invalid_argument("dof_converter_contract: input must be (pol, path)");
  }
  Eigen::VectorXcd amps(2);
  amps << pol_path.amp(0), pol_path.amp(1);
  if (std::abs(amps.norm() - 1.0) > kNormTolerance) {
    throw std::invalid_argument(
        "dof_converter_contract: state is outside the converter image");
  }
  return PureState(DimRegister({2}), std::move(amps));
}

PureState prepare_input_qubits(double hwp1, double qwp1, double hwp2, double qwp2) {
  const Eigen::Matrix2cd u1 = qwp(qwp1).matrix() * hwp(hwp1).matrix();
  const Eigen::Matrix2cd u2 = qwp(qwp2).matrix() * hwp(hwp2).matrix();
  Eigen::VectorXcd amps(4);
  // (u1 ⊗ u2) |H>|H> is the tensor of the two first columns.
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      amps(2 * x + y) = u1(x, 0) * u2(y, 0);
    }
  }
  return PureState(DimRegister({2, 2}, {"a1", "a2"}), std::move(amps));
}

PureState prepare_input_qubits(const WaveplateAngles& angles) {
  return prepare_input_qubits(angles.hwp1, angles.qwp1, angles.hwp2, angles.qwp2);
}

PureState pol_path_bell_target() {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(4);
  amps(0) = 1.0 / std::sqrt(2.0);  // |H,u>
  amps(3) = 1.0 / std::sqrt(2.0);  // |V,l>
  return PureState(DimRegister({2, 2}, {"pol", "path"}), std::move(amps));
}

Projection bell_projection_pol_path(const PureState& state, int pol, int path) {
  return project(state, pol_path_bell_target(), {pol, path});
}

Projection postselect_coincidence(const PureState& state,
                                  const DetectionPattern& pattern) {
  if (pattern.terms.empty()) {
    return Projection{1.0, state};
  }
  PureState projector = pattern.terms.front().projector;
  std::vector<int> targets = pattern.terms.front().targets;
  for (std::size_t i = 1; i < pattern.terms.size(); ++i) {
    projector = tensor(projector, pattern.terms[i].projector);
    targets.insert(targets.end(), pattern.terms[i].targets.begin(),
                   pattern.terms[i].targets.end());
  }
  return project(state, projector, targets);
}

PreparationResult simulate_preparation() {
  using teleport::BellKind;
  using teleport::bell_state;

  // Register order: (herald, a1, a2, b_pol, b_path).  The herald pairs with
  // a1; the second source pairs b's polarization with a2; b starts in the
  // upper path.
  PureState pair1 = bell_state(BellKind::PhiPlus);
  PureState pair2 = bell_state(BellKind::PhiPlus);
  PureState initial =
      tensor(tensor(pair1, pair2), basis_ket(DimRegister({2}), {0}));
  initial = regroup(initial, DimRegister({2, 2, 2, 2, 2},
                                         {"herald", "a1", "a2", "b_pol", "b_path"}));

  SetupPipeline pipeline(std::move(initial));
  // Split photon b into two paths keyed by its polarization (entangled with
  // a2), then write the herald-pair correlation onto b's polarization: the
  // herald drives the upper path, a1 the lower.
  pipeline.apply(DofConverter{3, 4});
  pipeline.apply(PpbsCnot{0, 3, kDefaultCnotSuccess, 4, 0});
  pipeline.apply(PpbsCnot{1, 3, kDefaultCnotSuccess, 4, 1});
  // Trigger: rotate the herald diagonally and keep its H port.
  pipeline.apply(Hwp{kPi / 8, 0});
  pipeline.apply(Pbs{0, 0});
  pipeline.expect_output_dims({2, 2, 2, 2});

  PureState physical = pipeline.state();
  PureState merged =
      regroup(physical, DimRegister({2, 2, 4}, {"a1", "a2", "b"}));
  return PreparationResult{std::move(merged), std::move(physical),
                           pipeline.success_probability()};
}

TeleportPipelineResult simulate_postselected_teleport(const WaveplateAngles& angles) {
  PreparationResult prep = simulate_preparation();

  // (a1, a2, b_pol, b_path) -> (a1_pol, a1_path, a2_pol, a2_path, b_pol, b_path)
  PureState state = dof_expand_subsystem(prep.physical_state, 0);
  state = dof_expand_subsystem(state, 2);

  state = apply_unitary(state, hwp(angles.hwp1), {0});
  state = apply_unitary(state, qwp(angles.qwp1), {0});
  state = apply_unitary(state, hwp(angles.hwp2), {2});
  state = apply_unitary(state, qwp(angles.qwp2), {2});

  Projection first = bell_projection_pol_path(state, 0, 1);
  if (!first.remainder.has_value()) {
    throw std::runtime_error("simulate_postselected_teleport: dead branch on a1");
  }
  Projection second = bell_projection_pol_path(*first.remainder, 0, 1);
  if (!second.remainder.has_value()) {
    throw std::runtime_error("simulate_postselected_teleport: dead branch on a2");
  }
  const double projection_probability = first.probability * second.probability;
  PureState output = regroup(*second.remainder, DimRegister({4}, {"b"}));
  return TeleportPipelineResult{std::move(output), projection_probability,
                                prep.success_probability * projection_probability};
}

}  // namespace hdsim::photonics
