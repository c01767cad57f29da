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

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hdsim::cli {

enum class Scenario {
  Prepare,
  TeleportForward,
  TeleportReverse,
  EstimateFidelity,
  NoiseSweep,
};

std::string scenario_name(Scenario scenario);
std::optional<Scenario> scenario_from_name(const std::string& name);

/// Which two-qubit state a scenario teleports.
struct InputStateSpec {
  enum class Kind { Phi1, Phi2, Phi3, Custom, Random };
  Kind kind = Kind::Phi1;
  /// Four amplitudes, only for Custom (normalized on use).
  std::vector<std::complex<double>> amps;
  /// Only for Random.
  std::uint64_t random_seed = 0;

  std::string name() const;
};

/// Raised on any configuration problem; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Declarative scenario input.  JSON document, flat keys, strict schema
/// (unknown keys are errors); the only nesting is the custom amplitude list
/// of [re, im] pairs.
struct ExperimentConfig {
  Scenario scenario = Scenario::Prepare;
  InputStateSpec input_state;
  /// Weight of the maximally mixed admixture; 0 means ideal.
  double noise_p = 0.0;
  double rate_hz = 0.183;
  std::optional<double> duration_s;
  std::optional<std::int64_t> counts_override;
  int bootstrap_iters = 1000;
  std::uint64_t seed = 0;
  int sweep_points = 11;
  std::string output_dir = "out";

  /// Acquisition duration falling back to the default window.
  static constexpr double kDefaultDurationS = 10000.0;
  double resolved_duration() const;
  /// Counts per measurement setting: the override when present, otherwise
  /// rate × duration rounded to nearest.
  std::int64_t resolved_totals() const;
};

/// Parses and validates a config document.  Throws ConfigError with the
/// offending line/column on syntax errors and the field name on range
/// errors; defaults are applied and echoed back by serialize_config.
ExperimentConfig parse_config(const std::string& text);

/// Full round-trippable JSON echo of a config, defaults included.
std::string serialize_config(const ExperimentConfig& config);

bool parse_equal(const ExperimentConfig& a, const ExperimentConfig& b);

}  // namespace hdsim::cli
