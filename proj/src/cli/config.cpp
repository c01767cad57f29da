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

#include "hdsim/cli/config.hpp"

#include <cmath>
#include <set>

#include <json.hpp>

#include "hdsim/estimation/sampling.hpp"

namespace hdsim::cli {
namespace {

using nlohmann::json;

// Line/column of a byte offset, both 1-based, for parse diagnostics.
std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void fail(const std::string& message) { throw ConfigError(message); }

double require_number(const json& j, const std::string& field) {
  if (!j.is_number()) fail("config field '" + field + "' must be a number");
  return j.get<double>();
}

std::int64_t require_integer(const json& j, const std::string& field) {
  if (!j.is_number_integer()) fail("config field '" + field + "' must be an integer");
  return j.get<std::int64_t>();
}

std::string require_string(const json& j, const std::string& field) {
  if (!j.is_string()) fail("config field '" + field + "' must be a string");
  return j.get<std::string>();
}

}  // namespace

std::string scenario_name(Scenario scenario) {
  switch (scenario) {
    case Scenario::Prepare: return "prepare";
    case Scenario::TeleportForward: return "teleport-forward";
    case Scenario::TeleportReverse: return "teleport-reverse";
    case Scenario::EstimateFidelity: return "estimate-fidelity";
    case Scenario::NoiseSweep: return "noise-sweep";
  }
  fail("unknown scenario enum value");
}

std::optional<Scenario> scenario_from_name(const std::string& name) {
  for (Scenario s : {Scenario::Prepare, Scenario::TeleportForward,
                     Scenario::TeleportReverse, Scenario::EstimateFidelity,
                     Scenario::NoiseSweep}) {
    if (scenario_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string InputStateSpec::name() const {
  switch (kind) {
    case Kind::Phi1: return "phi1";
    case Kind::Phi2: return "phi2";
    case Kind::Phi3: return "phi3";
    case Kind::Custom: return "custom";
    case Kind::Random: return "random";
  }
  return "?";
}

double ExperimentConfig::resolved_duration() const {
  return duration_s.value_or(kDefaultDurationS);
}

std::int64_t ExperimentConfig::resolved_totals() const {
  if (counts_override.has_value()) return *counts_override;
  return estimation::expected_counts(rate_hz, resolved_duration());
}

ExperimentConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    fail("config syntax error at line " + std::to_string(line) + ", column " +
         std::to_string(column) + ": " + e.what());
  }
  if (!doc.is_object()) fail("config must be a JSON object");

  static const std::set<std::string> known = {
      "scenario",    "seed",        "input_state",     "input_amps",
      "input_seed",  "noise_p",     "rate_hz",         "duration_s",
      "counts_override", "bootstrap_iters", "sweep_points", "output_dir"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) fail("unknown config key '" + key + "'");
  }

  ExperimentConfig config;

  if (!doc.contains("scenario")) fail("missing required config key 'scenario'");
  const std::string scen = require_string(doc["scenario"], "scenario");
  const std::optional<Scenario> parsed = scenario_from_name(scen);
  if (!parsed.has_value()) fail("unknown scenario '" + scen + "'");
  config.scenario = *parsed;

  if (!doc.contains("seed")) fail("missing required config key 'seed'");
  config.seed = static_cast<std::uint64_t>(require_integer(doc["seed"], "seed"));

  if (doc.contains("input_state")) {
    const std::string name = require_string(doc["input_state"], "input_state");
    if (name == "phi1") config.input_state.kind = InputStateSpec::Kind::Phi1;
    else if (name == "phi2") config.input_state.kind = InputStateSpec::Kind::Phi2;
    else if (name == "phi3") config.input_state.kind = InputStateSpec::Kind::Phi3;
    else if (name == "custom") config.input_state.kind = InputStateSpec::Kind::Custom;
    else if (name == "random") config.input_state.kind = InputStateSpec::Kind::Random;
    else fail("config field 'input_state' must be one of phi1/phi2/phi3/custom/random");
  }

  if (config.input_state.kind == InputStateSpec::Kind::Custom) {
    if (!doc.contains("input_amps")) {
      fail("input_state 'custom' requires the 'input_amps' key");
    }
    const json& amps = doc["input_amps"];
    if (!amps.is_array() || amps.size() != 4) {
      fail("config field 'input_amps' must be a list of four [re, im] pairs");
    }
    for (const json& pair : amps) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
          !pair[1].is_number()) {
        fail("config field 'input_amps' entries must be [re, im] number pairs");
      }
      config.input_state.amps.emplace_back(pair[0].get<double>(),
                                           pair[1].get<double>());
    }
    double norm2 = 0.0;
    for (const auto& a : config.input_state.amps) norm2 += std::norm(a);
    if (norm2 <= 0.0) fail("config field 'input_amps' must not be the zero vector");
  } else if (doc.contains("input_amps")) {
    fail("config key 'input_amps' is only valid with input_state 'custom'");
  }

  if (config.input_state.kind == InputStateSpec::Kind::Random) {
    if (!doc.contains("input_seed")) {
      fail("input_state 'random' requires the 'input_seed' key");
    }
    config.input_state.random_seed =
        static_cast<std::uint64_t>(require_integer(doc["input_seed"], "input_seed"));
  } else if (doc.contains("input_seed")) {
    fail("config key 'input_seed' is only valid with input_state 'random'");
  }

  if (doc.contains("noise_p")) {
    config.noise_p = require_number(doc["noise_p"], "noise_p");
    if (config.noise_p < 0.0 || config.noise_p > 1.0) {
      fail("config field 'noise_p' must be in [0, 1]");
    }
  }
  if (doc.contains("rate_hz")) {
    config.rate_hz = require_number(doc["rate_hz"], "rate_hz");
    if (!(config.rate_hz > 0.0)) fail("config field 'rate_hz' must be positive");
  }
  if (doc.contains("duration_s")) {
    config.duration_s = require_number(doc["duration_s"], "duration_s");
    if (!(*config.duration_s > 0.0)) fail("config field 'duration_s' must be positive");
  }
  if (doc.contains("counts_override")) {
    config.counts_override = require_integer(doc["counts_override"], "counts_override");
    if (*config.counts_override <= 0) {
      fail("config field 'counts_override' must be positive");
    }
  }
  if (config.duration_s.has_value() && config.counts_override.has_value()) {
    fail("ambiguous totals: set only one of 'duration_s' and 'counts_override'");
  }
  if (doc.contains("bootstrap_iters")) {
    config.bootstrap_iters =
        static_cast<int>(require_integer(doc["bootstrap_iters"], "bootstrap_iters"));
    if (config.bootstrap_iters < 100) {
      fail("config field 'bootstrap_iters' must be at least 100");
    }
  }
  if (doc.contains("sweep_points")) {
    config.sweep_points =
        static_cast<int>(require_integer(doc["sweep_points"], "sweep_points"));
    if (config.sweep_points < 2 || config.sweep_points > 1001) {
      fail("config field 'sweep_points' must be in [2, 1001]");
    }
  }
  if (doc.contains("output_dir")) {
    config.output_dir = require_string(doc["output_dir"], "output_dir");
    if (config.output_dir.empty()) fail("config field 'output_dir' must not be empty");
  }
  return config;
}

std::string serialize_config(const ExperimentConfig& config) {
  json doc;
  doc["scenario"] = scenario_name(config.scenario);
  doc["seed"] = config.seed;
  doc["input_state"] = config.input_state.name();
  if (config.input_state.kind == InputStateSpec::Kind::Custom) {
    json amps = json::array();
    for (const auto& a : config.input_state.amps) {
      amps.push_back(json::array({a.real(), a.imag()}));
    }
    doc["input_amps"] = amps;
  }
  if (config.input_state.kind == InputStateSpec::Kind::Random) {
    doc["input_seed"] = config.input_state.random_seed;
  }
  doc["noise_p"] = config.noise_p;
  doc["rate_hz"] = config.rate_hz;
  if (config.duration_s.has_value()) doc["duration_s"] = *config.duration_s;
  if (config.counts_override.has_value()) {
    doc["counts_override"] = *config.counts_override;
  }
  doc["bootstrap_iters"] = config.bootstrap_iters;
  doc["sweep_points"] = config.sweep_points;
  doc["output_dir"] = config.output_dir;
  return doc.dump(2);
}

bool parse_equal(const ExperimentConfig& a, const ExperimentConfig& b) {
  return serialize_config(a) == serialize_config(b);
}

}  // namespace hdsim::cli
