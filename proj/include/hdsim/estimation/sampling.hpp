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
#include <functional>
#include <span>
#include <vector>

#include "hdsim/estimation/witness.hpp"
#include "hdsim/pure_state.hpp"

namespace hdsim::estimation {

/// Multinomial draw of `total` events over the 16 outcomes, deterministic per
/// seed.  Probabilities must be non-negative and sum to 1 within 1e-9.
CountsRecord sample_counts(const std::array<double, 16>& probs, std::int64_t total,
                           std::uint64_t seed,
                           MeasurementSetting setting = {PauliBasis::Z, PauliBasis::Z});

/// Monte-Carlo error propagation for counting statistics: every raw count is
/// resampled as an independent Poisson variate with mean equal to the
/// observed count and the estimator is recomputed on the perturbed counts.
///
/// The original record totals stay in place as the normalization constants,
/// so the error bar tracks the raw-event shot noise pushed through the
/// formula.  Iteration i draws from sub-seed (seed, i), making the result
/// independent of evaluation order.  Returns the sample standard deviation
/// (ddof = 1) of the witness across iterations.
double poisson_bootstrap(std::span<const CountsRecord> records, int iterations,
                         std::uint64_t seed);

/// Resampler core shared with other count-based estimators: `counts` is one
/// flat row per record, `estimator` maps resampled real-valued rows to a
/// statistic.
double poisson_bootstrap_generic(
    const std::vector<std::vector<std::int64_t>>& counts,
    const std::function<double(const std::vector<std::vector<double>>&)>& estimator,
    int iterations, std::uint64_t seed);

/// p·|psi><psi| + (1-p)·I/d.
MixedState white_noise(const PureState& psi, double p);

/// Events expected in a fixed acquisition window, rounded to nearest.
std::int64_t expected_counts(double rate_hz, double duration_s);

}  // namespace hdsim::estimation
