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

#include <string>
#include <vector>

#include "hdsim/photonics/elements.hpp"
#include "hdsim/state_ops.hpp"

namespace hdsim::photonics {

/// An ordered optical setup acting on a growing/shrinking photon register.
///
/// Elements are applied in declaration order.  The success accumulator is the
/// exact float product, in declaration order, of every declared gate success
/// factor and every postselection probability.  Pipelines are immutable once
/// run; building and running are cheap enough to rebuild per use.
class SetupPipeline {
 public:
  explicit SetupPipeline(PureState initial);

  void apply(const OpticalElement& element);
  /// Projects targets onto `projector`, drops them from the register, and
  /// multiplies the Born probability into the success accumulator.
  void postselect(const PureState& projector, const std::vector<int>& targets);
  /// Declares a success scalar with no state change (e.g. a gate efficiency).
  void declare_success_factor(double factor);

  const PureState& state() const { return state_; }
  double success_probability() const { return success_; }

  /// Verifies the built state has the declared register shape; throws
  /// otherwise.  Call once construction is finished.
  void expect_output_dims(const std::vector<int>& dims) const;

 private:
  PureState state_;
  double success_ = 1.0;
};

/// Maps α|H> + β|V> to α|H,u> + β|H,l>: the polarization is copied onto a
/// fresh path qubit and then reset to H.  The output register is (pol, path).
PureState dof_converter_expand(const PureState& pol_qubit);

/// Same expansion applied in place to one subsystem of a larger state; the
/// subsystem at `index` (a qubit) becomes the (pol, path) pair at positions
/// (index, index+1).
PureState dof_expand_subsystem(const PureState& state, int index);

/// Declared inverse of dof_converter_expand: maps |H,u> -> |H> and
/// |H,l> -> |V>.  The input must lie in the converter's image (polarization
/// H) within the normalization tolerance.
PureState dof_converter_contract(const PureState& pol_path);

/// Waveplate settings for the two input polarization qubits; the prepared
/// state is (QWP(q1)·HWP(h1) ⊗ QWP(q2)·HWP(h2)) |H>|H>.
struct WaveplateAngles {
  double hwp1, qwp1, hwp2, qwp2;
};

/// Named preparations used throughout the tests and the CLI.  The QWP angles
/// align each quarter waveplate with the linear polarization leaving the
/// half waveplate, except for the third set where QWP(0) turns |D> circular.
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr WaveplateAngles kInputDiagV{kPi / 8, kPi / 4, kPi / 4, kPi / 2};
inline constexpr WaveplateAngles kInputDiagDiag{kPi / 8, kPi / 4, kPi / 8, kPi / 4};
inline constexpr WaveplateAngles kInputDiagCirc{kPi / 8, kPi / 4, kPi / 8, 0.0};

PureState prepare_input_qubits(double hwp1, double qwp1, double hwp2, double qwp2);
PureState prepare_input_qubits(const WaveplateAngles& angles);

/// The (|H,u> + |V,l>)/√2 state a photon's polarization and path qubits are
/// projected onto at the measurement stage.
PureState pol_path_bell_target();

/// Projects the (pol, path) pair of one photon onto pol_path_bell_target().
Projection bell_projection_pol_path(const PureState& state, int pol, int path);

/// A coincidence pattern: joint projectors on disjoint target groups.  An
/// empty pattern is the full space.
struct DetectionPattern {
  struct Term {
    PureState projector;
    std::vector<int> targets;
  };
  std::vector<Term> terms;
};

/// Projects onto the pattern's subspace; zero-probability patterns come back
/// as an explicit dead branch.
Projection postselect_coincidence(const PureState& state,
                                  const DetectionPattern& pattern);

/// Output of the entangled-state source simulation.
struct PreparationResult {
  /// The three-photon state over (a1, a2, b) with b a ququart.
  PureState state;
  /// The same state over (a1, a2, b_pol, b_path) before merging b.
  PureState physical_state;
  double success_probability;
};

/// Builds the two-qubit ⊗ ququart entangled resource from two polarization
/// Bell pairs: a DoF conversion splits photon b into two paths, each path
/// interacts with one herald-side photon through a postselected polarization
/// CNOT, and the herald photon is projected out diagonally.
PreparationResult simulate_preparation();

/// Full postselected teleportation bench: source, DoF expansion of both
/// qubit photons, input preparation with the given waveplate settings, and
/// the double polarization/path Bell projection.
struct TeleportPipelineResult {
  PureState output;  // dims (4), photon b
  double projection_probability;  // combined double-projection probability
  double success_probability;     // including source success
};

TeleportPipelineResult simulate_postselected_teleport(const WaveplateAngles& angles);

}  // namespace hdsim::photonics
