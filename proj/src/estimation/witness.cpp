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

#include "hdsim/estimation/witness.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hdsim::estimation {
namespace {

// Outcome-bit mask for a subset of the four effective qubits; qubit q's
// outcome sits at bit (3 - q).
constexpr unsigned kMaskAA = 0b1010;  // a1 and b_pol
constexpr unsigned kMaskBB = 0b0101;  // a2 and b_path
constexpr unsigned kMaskAll = 0b1111;

// Sign of a basis in the maximally-entangled-pair decomposition
// |pair><pair| = 1/4 (II + XX - YY + ZZ).
double pair_sign(PauliBasis basis) { return basis == PauliBasis::Y ? -1.0 : 1.0; }

}  // namespace

namespace detail {

double correlator(const std::array<double, 16>& weights, double total,
                  unsigned qubit_mask) {
  if (total <= 0.0) {
    throw std::invalid_argument("correlator: normalization must be positive");
  }
  double acc = 0.0;
  for (int o = 0; o < 16; ++o) {
    const bool odd = (std::popcount(static_cast<unsigned>(o) & qubit_mask) & 1) != 0;
    acc += odd ? -weights[o] : weights[o];
  }
  return acc / total;
}

double witness_from_weights(const std::array<std::array<double, 16>, 9>& weights,
                            const std::array<double, 9>& totals) {
  const std::array<MeasurementSetting, 9> settings = nine_settings();
  double sum = 1.0;  // the identity-identity term
  for (int s = 0; s < 9; ++s) {
    const MeasurementSetting& setting = settings[s];
    const double sign = pair_sign(setting.a) * pair_sign(setting.b);
    sum += sign * correlator(weights[s], totals[s], kMaskAll);
    // Marginals: each full setting contributes one compatible estimate of
    // <A I A I> and <I B I B>; averaging over the three settings sharing the
    // axis uses all the data.
    sum += pair_sign(setting.a) * correlator(weights[s], totals[s], kMaskAA) / 3.0;
    sum += pair_sign(setting.b) * correlator(weights[s], totals[s], kMaskBB) / 3.0;
  }
  return sum / 16.0;
}

}  // namespace detail

FidelityEstimate FidelityEstimate::from_raw(double raw, double std_error,
                                            Method method) {
  FidelityEstimate est;
  est.raw_value = raw;
  est.within_window = raw >= kEstimateWindowLow && raw <= kEstimateWindowHigh;
  est.value = std::clamp(raw, 0.0, 1.0);
  est.std_error = std_error;
  est.method = method;
  return est;
}

FidelityEstimate fidelity_witness_224(std::span<const CountsRecord> records) {
  const std::array<MeasurementSetting, 9> settings = nine_settings();
  std::array<std::array<double, 16>, 9> weights{};
  std::array<double, 9> totals{};
  std::array<bool, 9> seen{};

  for (const CountsRecord& record : records) {
    const auto it = std::find(settings.begin(), settings.end(), record.setting);
    if (it == settings.end()) {
      throw std::invalid_argument("fidelity_witness_224: unknown setting " +
                                  record.setting.label());
    }
    const int s = static_cast<int>(it - settings.begin());
    if (seen[s]) {
      throw std::invalid_argument("fidelity_witness_224: duplicate setting " +
                                  record.setting.label());
    }
    std::int64_t sum = 0;
    for (int o = 0; o < 16; ++o) {
      if (record.counts[o] < 0) {
        throw std::invalid_argument("fidelity_witness_224: negative count");
      }
      weights[s][o] = static_cast<double>(record.counts[o]);
      sum += record.counts[o];
    }
    if (sum != record.total) {
      throw std::invalid_argument("fidelity_witness_224: counts do not sum to total");
    }
    if (record.total <= 0) {
      throw std::invalid_argument("fidelity_witness_224: zero total for setting " +
                                  record.setting.label());
    }
    totals[s] = static_cast<double>(record.total);
    seen[s] = true;
  }
  for (int s = 0; s < 9; ++s) {
    if (!seen[s]) {
      throw std::invalid_argument("fidelity_witness_224: missing setting " +
                                  settings[s].label());
    }
  }
  return FidelityEstimate::from_raw(detail::witness_from_weights(weights, totals),
                                    0.0, FidelityEstimate::Method::Exact);
}

double witness_value_exact(const MixedState& rho) {
  const std::array<MeasurementSetting, 9> settings = nine_settings();
  std::array<std::array<double, 16>, 9> weights{};
  std::array<double, 9> totals{};
  for (int s = 0; s < 9; ++s) {
    weights[s] = outcome_probabilities(rho, settings[s]);
    totals[s] = 1.0;
  }
  return detail::witness_from_weights(weights, totals);
}

}  // namespace hdsim::estimation
