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
#include <span>

#include "hdsim/estimation/settings.hpp"

namespace hdsim::estimation {

/// Integer outcome tallies for one measurement setting.  Outcome indices
/// follow qubit_outcome_probabilities packing.
struct CountsRecord {
  MeasurementSetting setting;
  std::array<std::int64_t, 16> counts;
  std::int64_t total;
};

/// Sanity window for estimator values before clamping.
inline constexpr double kEstimateWindowLow = -0.25;
inline constexpr double kEstimateWindowHigh = 1.25;

struct FidelityEstimate {
  /// Reported value, clamped to [0, 1].
  double value = 0.0;
  double std_error = 0.0;
  enum class Method { Exact, Bootstrap } method = Method::Exact;
  /// Estimator output before clamping.
  double raw_value = 0.0;
  /// False when raw_value fell outside [-0.25, 1.25].
  bool within_window = true;

  static FidelityEstimate from_raw(double raw, double std_error, Method method);
};

/// Point estimate of the overlap with the ideal qubit-pair ⊗ ququart state
/// from the nine-setting counts.
///
/// The estimate is 1/16 times the signed sum of the sixteen (A,B,A,B)
/// correlators with A, B ∈ {I,X,Y,Z} (sign -1 per Y factor).  Correlators
/// with identity slots are marginals, averaged over every measured setting
/// that is compatible with them.  On exact probabilities this reproduces
/// <psi|rho|psi> exactly.
FidelityEstimate fidelity_witness_224(std::span<const CountsRecord> records);

/// The same decomposition evaluated on exact outcome probabilities.
double witness_value_exact(const MixedState& rho);

namespace detail {

/// Witness core on real-valued per-setting outcome weights with explicit
/// normalization constants; records must be ordered as nine_settings().
double witness_from_weights(const std::array<std::array<double, 16>, 9>& weights,
                            const std::array<double, 9>& totals);

/// Signed correlator mean over one setting's weights.  `qubit_mask` selects
/// which of the four qubits contribute their ±1 outcome to the product.
double correlator(const std::array<double, 16>& weights, double total,
                  unsigned qubit_mask);

}  // namespace detail

}  // namespace hdsim::estimation
