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

#include <json.hpp>

#include "hdsim/cli/config.hpp"

namespace hdsim::cli {

inline constexpr const char* kToolName = "hdsim";
inline constexpr const char* kToolVersion = "0.1.0";

/// Structured scenario output.  The payload is fully determined by the
/// config (seed included) and reruns byte-identically; timestamps and tool
/// info live in the metadata member only.
struct Report {
  nlohmann::json metadata;
  nlohmann::json payload;

  /// Deterministic serialization used for reproducibility comparisons.
  std::string payload_text() const;
  /// metadata + payload, what report.json holds.
  std::string document_text() const;
};

/// Exit codes used by the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitRuntimeError = 3;

/// Runs a scenario, writes report.json and the scenario's tabular sidecar
/// files under the output directory, and returns the report.  Throws
/// ConfigError for configuration problems and std::exception subclasses for
/// runtime failures.
Report run_scenario(const ExperimentConfig& config,
                    const std::string& output_dir_override = "");

/// Scenario names, one per line, stable order.
std::string list_scenarios();

/// Full command-line entry point: `run <config> [--out DIR] [--seed N]
/// [--quiet]`, `scenarios`, `validate <config>`.
int run_cli(int argc, const char* const* argv);

}  // namespace hdsim::cli
