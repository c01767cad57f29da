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

#include <cstdint>
#include <vector>

#include "hdsim/estimation/sampling.hpp"
#include "hdsim/estimation/witness.hpp"

namespace hdsim::estimation {

/// Single-knob error model: the resource is replaced by a convex mixture of
/// the ideal state (weight `ideal_weight`) with the maximally mixed state.
struct NoiseModel {
  double ideal_weight = 1.0;
};

/// Outcome tallies of one two-qubit (polarization, path) measurement of the
/// received ququart.
struct QuquartSettingCounts {
  PauliBasis pol;
  PauliBasis path;
  std::array<std::int64_t, 4> counts;
  std::int64_t total;

  std::string label() const;
};

struct TeleportFidelityReport {
  PureState ideal_output;       // dims (4)
  double success_probability;   // probability of the postselected branch
  FidelityEstimate exact;       // <ideal|rho_b|ideal>, no sampling
  FidelityEstimate estimated;   // from sampled counts, bootstrap error bar
  std::vector<QuquartSettingCounts> counts;
  double estimation_limit;
  double ququart_limit;
  bool exceeds_estimation_limit;  // estimated value vs 2/5
  bool exceeds_ququart_limit;     // estimated value vs 3/4
};

/// Runs the postselected teleportation of `input` over a white-noise resource
/// and estimates the output fidelity the way the bench would: photon b is
/// measured in the Z⊗Z population setting plus whichever coherence settings
/// the target state needs, counts are sampled at `total_counts` per setting,
/// and the estimate carries a Poisson bootstrap error bar.
TeleportFidelityReport teleport_fidelity_report(const PureState& input,
                                                const NoiseModel& noise,
                                                std::int64_t total_counts,
                                                std::uint64_t seed,
                                                int bootstrap_iterations = 1000);

}  // namespace hdsim::estimation
