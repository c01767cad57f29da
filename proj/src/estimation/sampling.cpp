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

#include "hdsim/estimation/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "hdsim/random.hpp"

namespace hdsim::estimation {

CountsRecord sample_counts(const std::array<double, 16>& probs, std::int64_t total,
                           std::uint64_t seed, MeasurementSetting setting) {
  if (total < 0) {
    throw std::invalid_argument("sample_counts: total must be non-negative");
  }
  double sum = 0.0;
  for (double p : probs) {
    if (p < -1e-12 || !std::isfinite(p)) {
      throw std::invalid_argument("sample_counts: invalid probability");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("sample_counts: probabilities must sum to 1");
  }
  std::array<double, 16> clipped = probs;
  for (double& p : clipped) p = std::max(p, 0.0);

  rng::Engine engine(seed);
  const std::vector<std::int64_t> tallies =
      engine.multinomial(std::span<const double>(clipped.data(), clipped.size()), total);
  CountsRecord record;
  record.setting = setting;
  std::copy(tallies.begin(), tallies.end(), record.counts.begin());
  record.total = total;
  return record;
}

double poisson_bootstrap_generic(
    const std::vector<std::vector<std::int64_t>>& counts,
    const std::function<double(const std::vector<std::vector<double>>&)>& estimator,
    int iterations, std::uint64_t seed) {
  if (iterations < 100) {
    throw std::invalid_argument("poisson_bootstrap: need at least 100 iterations");
  }
  std::vector<std::vector<double>> resampled(counts.size());
  for (std::size_t r = 0; r < counts.size(); ++r) {
    resampled[r].resize(counts[r].size());
  }
  double mean = 0.0;
  double m2 = 0.0;
  for (int iter = 0; iter < iterations; ++iter) {
    rng::Engine engine(rng::derive_seed(seed, static_cast<std::uint64_t>(iter)));
    for (std::size_t r = 0; r < counts.size(); ++r) {
      for (std::size_t o = 0; o < counts[r].size(); ++o) {
        resampled[r][o] =
            static_cast<double>(engine.poisson(static_cast<double>(counts[r][o])));
      }
    }
    const double value = estimator(resampled);
    const double delta = value - mean;
    mean += delta / static_cast<double>(iter + 1);
    m2 += delta * (value - mean);
  }
  return std::sqrt(m2 / static_cast<double>(iterations - 1));
}

double poisson_bootstrap(std::span<const CountsRecord> records, int iterations,
                         std::uint64_t seed) {
  // Validate and freeze the observed totals by running the estimator once.
  fidelity_witness_224(records);

  const std::array<MeasurementSetting, 9> settings = nine_settings();
  std::vector<std::vector<std::int64_t>> counts(9);
  std::array<double, 9> totals{};
  for (const CountsRecord& record : records) {
    for (int s = 0; s < 9; ++s) {
      if (settings[s] == record.setting) {
        counts[s].assign(record.counts.begin(), record.counts.end());
        totals[s] = static_cast<double>(record.total);
      }
    }
  }
  const auto estimator = [&totals](const std::vector<std::vector<double>>& rows) {
    std::array<std::array<double, 16>, 9> weights{};
    for (int s = 0; s < 9; ++s) {
      std::copy(rows[s].begin(), rows[s].end(), weights[s].begin());
    }
    return detail::witness_from_weights(weights, totals);
  };
  return poisson_bootstrap_generic(counts, estimator, iterations, seed);
}

MixedState white_noise(const PureState& psi, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("white_noise: weight must be in [0, 1]");
  }
  const int d = psi.total_dim();
  Eigen::MatrixXcd m = p * (psi.amps() * psi.amps().adjoint()) +
                       ((1.0 - p) / static_cast<double>(d)) *
                           Eigen::MatrixXcd::Identity(d, d);
  return MixedState(psi.reg(), std::move(m));
}

std::int64_t expected_counts(double rate_hz, double duration_s) {
  if (!(rate_hz > 0.0) || !(duration_s > 0.0)) {
    throw std::invalid_argument("expected_counts: rate and duration must be positive");
  }
  return std::llround(rate_hz * duration_s);
}

}  // namespace hdsim::estimation
