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
#include <string>
#include <variant>
#include <vector>

#include "hdsim/pure_state.hpp"
#include "hdsim/unitary.hpp"

namespace hdsim::photonics {

/// Polarization basis index: H = 0, V = 1.  Path basis index: u = 0, l = 1.
/// A ququart photon carrying both is indexed 2*pol + path, i.e.
/// Hu=0, Hl=1, Vu=2, Vl=3.
struct EncodingMap {
  std::string photon;
  int logical_dim;  // 2 or 4
  std::vector<std::string> basis_labels;

  static EncodingMap qubit(std::string photon);
  static EncodingMap ququart(std::string photon);
};

/// Ququart index from (pol, path) under the fixed encoding.
inline int ququart_index(int pol, int path) { return 2 * pol + path; }

// Jones matrices in the (H, V) basis.  Conventions are fixed here once:
//   HWP(θ) = [[cos 2θ, sin 2θ], [sin 2θ, -cos 2θ]]
//   QWP(θ) = R(θ) · diag(1, i) · R(-θ),  R a real rotation.
// A QWP whose fast axis is aligned with an incoming linear polarization
// leaves that state unchanged.
UnitaryOp hwp(double theta);
UnitaryOp qwp(double theta);

/// Ideal beam displacer on a (pol, path) qubit pair: H goes straight, V is
/// displaced into the other path (a pol-controlled path flip).
UnitaryOp beam_displacer();

/// Ideal polarization CNOT: the control photon's V flips the target's
/// polarization.  Physically a postselected PPBS gate; the success scalar
/// lives in the pipeline, not in the matrix.
UnitaryOp polarization_cnot();

/// Default postselected linear-optics CNOT success probability.
inline constexpr double kDefaultCnotSuccess = 1.0 / 9.0;

struct Hwp {
  double theta;
  int target;
};
struct Qwp {
  double theta;
  int target;
};
struct BeamDisplacer {
  int pol;
  int path;
};
/// Polarization beamsplitter: postselects one polarization port of a photon
/// and removes that subsystem from the register.
struct Pbs {
  int target;
  int keep_port;  // 0 = H port, 1 = V port
};
struct PpbsCnot {
  int control;
  int target;
  double success_prob = kDefaultCnotSuccess;
  /// When set, the gate acts only on the spatial mode where the photons
  /// overlap: the listed path subsystem must hold `path_value`.
  std::optional<int> conditioned_on_path;
  int path_value = 0;
};
/// Beam displacer plus waveplates: moves a polarization qubit onto a fresh
/// path qubit and resets the polarization to H.
struct DofConverter {
  int pol;
  int path;
};

using OpticalElement =
    std::variant<Hwp, Qwp, BeamDisplacer, Pbs, PpbsCnot, DofConverter>;

/// Result of pushing a state through a single postselected PPBS CNOT.
struct GateRecord {
  PureState state;
  double success_prob;
};

/// Applies the ideal CNOT between two polarization qubits and reports the
/// success scalar to multiply into a pipeline accumulator.  Throws when
/// either subsystem is not two-dimensional or the probability is out of
/// (0, 1].
GateRecord ppbs_cnot(const PureState& state, int control, int target,
                     double success_prob = kDefaultCnotSuccess);

}  // namespace hdsim::photonics
