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

#include "hdsim/cli/runner.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hdsim/estimation/teleport_report.hpp"
#include "hdsim/photonics/pipeline.hpp"
#include "hdsim/random.hpp"
#include "hdsim/state_ops.hpp"
#include "hdsim/teleport/protocol.hpp"

namespace hdsim::cli {
namespace {

using nlohmann::json;

// Payload numbers are fixed at 12 significant digits so that reports are
// stable under serialization round trips.
double round_sig12(double value) {
  if (!std::isfinite(value)) return value;
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return std::strtod(buffer, nullptr);
}

void round_numbers(json& node) {
  if (node.is_number_float()) {
    node = round_sig12(node.get<double>());
  } else if (node.is_object() || node.is_array()) {
    for (json& child : node) round_numbers(child);
  }
}

json estimate_json(const estimation::FidelityEstimate& est) {
  json j;
  j["value"] = est.value;
  j["std_error"] = est.std_error;
  j["method"] = est.method == estimation::FidelityEstimate::Method::Exact
                    ? "exact"
                    : "bootstrap";
  j["raw_value"] = est.raw_value;
  j["within_window"] = est.within_window;
  return j;
}

json amplitudes_json(const PureState& state) {
  json rows = json::array();
  for (int i = 0; i < state.total_dim(); ++i) {
    rows.push_back(json::array({state.amp(i).real(), state.amp(i).imag()}));
  }
  return rows;
}

// Sub-seed streams per purpose, so scenario additions never reshuffle
// existing draws.
enum SeedStream : std::uint64_t {
  kStreamInput = 1,
  kStreamProtocol = 2,
  kStreamReport = 3,
  kStreamCounts = 100,     // +setting index
  kStreamBars = 200,       // +state index
  kStreamSweep = 300,      // +row index
  kStreamBootstrap = 400,
};

PureState resolve_input_state(const ExperimentConfig& config) {
  using photonics::prepare_input_qubits;
  switch (config.input_state.kind) {
    case InputStateSpec::Kind::Phi1:
      return prepare_input_qubits(photonics::kInputDiagV);
    case InputStateSpec::Kind::Phi2:
      return prepare_input_qubits(photonics::kInputDiagDiag);
    case InputStateSpec::Kind::Phi3:
      return prepare_input_qubits(photonics::kInputDiagCirc);
    case InputStateSpec::Kind::Custom: {
      Eigen::VectorXcd amps(4);
      for (int i = 0; i < 4; ++i) amps(i) = config.input_state.amps[i];
      return ket_from_amplitudes(amps, DimRegister({2, 2}, {"a1", "a2"})).state;
    }
    case InputStateSpec::Kind::Random: {
      rng::Engine engine(config.input_state.random_seed);
      Eigen::VectorXcd amps(4);
      for (int i = 0; i < 4; ++i) {
        amps(i) = Complex(engine.normal(), engine.normal());
      }
      return ket_from_amplitudes(amps, DimRegister({2, 2}, {"a1", "a2"})).state;
    }
  }
  throw ConfigError("unresolved input state");
}

class OutputWriter {
 public:
  explicit OutputWriter(std::string directory) : dir_(std::move(directory)) {
    std::filesystem::create_directories(dir_);
  }

  void write(const std::string& name, const std::string& contents) {
    const std::filesystem::path path = std::filesystem::path(dir_) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot write output file " + path.string());
    }
    out << contents;
    files_.push_back(name);
  }

  const std::vector<std::string>& files() const { return files_; }

 private:
  std::string dir_;
  std::vector<std::string> files_;
};

std::string format_sig12(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

std::string counts_record_csv(const estimation::CountsRecord& record) {
  std::string out = "setting";
  for (int o = 0; o < 16; ++o) out += ",n" + std::to_string(o);
  out += ",total\n" + record.setting.label();
  for (int o = 0; o < 16; ++o) out += "," + std::to_string(record.counts[o]);
  out += "," + std::to_string(record.total) + "\n";
  return out;
}

std::string ququart_counts_csv(const estimation::QuquartSettingCounts& record) {
  std::string out = "setting";
  for (int o = 0; o < 4; ++o) out += ",n" + std::to_string(o);
  out += ",total\n" + record.label();
  for (int o = 0; o < 4; ++o) out += "," + std::to_string(record.counts[o]);
  out += "," + std::to_string(record.total) + "\n";
  return out;
}

json ququart_counts_json(const std::vector<estimation::QuquartSettingCounts>& counts) {
  json rows = json::array();
  for (const auto& record : counts) {
    json row;
    row["setting"] = record.label();
    row["counts"] = record.counts;
    row["total"] = record.total;
    rows.push_back(row);
  }
  return rows;
}

json teleport_report_json(const estimation::TeleportFidelityReport& report) {
  json j;
  j["success_probability"] = report.success_probability;
  j["fidelity_exact"] = estimate_json(report.exact);
  j["fidelity_estimate"] = estimate_json(report.estimated);
  j["counts"] = ququart_counts_json(report.counts);
  j["exceeds_estimation_limit"] = report.exceeds_estimation_limit;
  j["exceeds_ququart_limit"] = report.exceeds_ququart_limit;
  j["ideal_output"] = amplitudes_json(report.ideal_output);
  return j;
}

json run_prepare(const ExperimentConfig& config, OutputWriter& out) {
  const photonics::PreparationResult prep = photonics::simulate_preparation();
  const PureState ideal = teleport::make_224_state();

  json results;
  results["success_probability"] = prep.success_probability;
  results["fidelity_to_ideal"] = overlap_fidelity(prep.state, ideal);
  results["amplitudes"] = amplitudes_json(prep.state);

  const double p = 1.0 - config.noise_p;
  const MixedState resource = estimation::white_noise(prep.state, p);
  results["resource_witness_exact"] = estimation::witness_value_exact(resource);
  results["resource_fidelity_exact"] = fidelity_pure(ideal, resource);

  const photonics::EncodingMap enc_a1 = photonics::EncodingMap::qubit("a1");
  const photonics::EncodingMap enc_a2 = photonics::EncodingMap::qubit("a2");
  const photonics::EncodingMap enc_b = photonics::EncodingMap::ququart("b");
  std::string csv = "index,basis,re,im\n";
  for (int i = 0; i < prep.state.total_dim(); ++i) {
    const std::vector<int> digits = prep.state.reg().digits(i);
    const std::string basis = enc_a1.basis_labels[digits[0]] + "," +
                              enc_a2.basis_labels[digits[1]] + "," +
                              enc_b.basis_labels[digits[2]];
    csv += std::to_string(i) + ",\"" + basis + "\"," +
           format_sig12(prep.state.amp(i).real()) + "," +
           format_sig12(prep.state.amp(i).imag()) + "\n";
  }
  out.write("amplitudes.csv", csv);
  return results;
}

json run_estimate_fidelity(const ExperimentConfig& config, OutputWriter& out) {
  const double p = 1.0 - config.noise_p;
  const PureState ideal = teleport::make_224_state();
  const MixedState resource = estimation::white_noise(ideal, p);
  const std::int64_t totals = config.resolved_totals();
  if (totals <= 0) {
    throw ConfigError("resolved totals are zero; increase duration_s or rate_hz");
  }

  const std::array<estimation::MeasurementSetting, 9> settings =
      estimation::nine_settings();
  std::vector<estimation::CountsRecord> records;
  json counts_rows = json::array();
  for (std::size_t s = 0; s < settings.size(); ++s) {
    const std::array<double, 16> probs =
        estimation::outcome_probabilities(resource, settings[s]);
    estimation::CountsRecord record = estimation::sample_counts(
        probs, totals, rng::derive_seed(config.seed, kStreamCounts + s), settings[s]);
    out.write("counts_" + record.setting.label() + ".csv", counts_record_csv(record));
    json row;
    row["setting"] = record.setting.label();
    row["counts"] = record.counts;
    row["total"] = record.total;
    counts_rows.push_back(row);
    records.push_back(std::move(record));
  }

  estimation::FidelityEstimate estimate = estimation::fidelity_witness_224(records);
  const double bar = estimation::poisson_bootstrap(
      records, config.bootstrap_iters, rng::derive_seed(config.seed, kStreamBootstrap));
  estimate = estimation::FidelityEstimate::from_raw(
      estimate.raw_value, bar, estimation::FidelityEstimate::Method::Bootstrap);

  json results;
  results["totals_per_setting"] = totals;
  results["resource_purity_weight"] = p;
  results["fidelity_exact"] = estimation::witness_value_exact(resource);
  results["fidelity_estimate"] = estimate_json(estimate);
  results["counts"] = counts_rows;
  return results;
}

json run_teleport_forward(const ExperimentConfig& config, OutputWriter& out) {
  const PureState input = resolve_input_state(config);
  const std::int64_t totals = config.resolved_totals();
  const estimation::NoiseModel noise{1.0 - config.noise_p};
  const teleport::ClassicalBounds bounds = teleport::classical_bounds();

  // Protocol-level run with deterministic correction.
  const teleport::TeleportResult det = teleport::teleport_forward(
      input, teleport::TeleportMode::deterministic(),
      rng::derive_seed(config.seed, kStreamProtocol));
  const PureState relabeled = regroup(input, DimRegister({4}, {"b"}));

  json protocol;
  protocol["outcome"] = det.record.outcome.name();
  protocol["outcome_probability"] = det.record.probability;
  protocol["corrected"] = det.record.corrected;
  protocol["fidelity"] = overlap_fidelity(det.output, relabeled);

  // Bench-level postselected run with counting statistics.
  const estimation::TeleportFidelityReport bench = estimation::teleport_fidelity_report(
      input, noise, totals, rng::derive_seed(config.seed, kStreamReport),
      config.bootstrap_iters);
  for (const auto& record : bench.counts) {
    out.write("counts_b_" + record.label() + ".csv", ququart_counts_csv(record));
  }

  // Reference bars: the three standard inputs plus their average, and the
  // configured state when it is not one of them.
  const std::array<std::pair<std::string, photonics::WaveplateAngles>, 3> presets = {
      std::make_pair(std::string("phi1"), photonics::kInputDiagV),
      std::make_pair(std::string("phi2"), photonics::kInputDiagDiag),
      std::make_pair(std::string("phi3"), photonics::kInputDiagCirc)};
  json bars = json::array();
  std::string bars_csv =
      "state,fidelity,std_error,fidelity_exact,above_estimation_limit,"
      "above_ququart_limit\n";
  double value_sum = 0.0;
  double var_sum = 0.0;
  for (std::size_t i = 0; i < presets.size(); ++i) {
    const PureState state = photonics::prepare_input_qubits(presets[i].second);
    const estimation::TeleportFidelityReport rep = estimation::teleport_fidelity_report(
        state, noise, totals, rng::derive_seed(config.seed, kStreamBars + i),
        config.bootstrap_iters);
    json row;
    row["state"] = presets[i].first;
    row["fidelity"] = rep.estimated.value;
    row["std_error"] = rep.estimated.std_error;
    row["fidelity_exact"] = rep.exact.value;
    row["above_estimation_limit"] = rep.exceeds_estimation_limit;
    row["above_ququart_limit"] = rep.exceeds_ququart_limit;
    bars.push_back(row);
    bars_csv += presets[i].first + "," + format_sig12(rep.estimated.value) + "," +
                format_sig12(rep.estimated.std_error) + "," +
                format_sig12(rep.exact.value) + "," +
                (rep.exceeds_estimation_limit ? "1" : "0") + "," +
                (rep.exceeds_ququart_limit ? "1" : "0") + "\n";
    value_sum += rep.estimated.value;
    var_sum += rep.estimated.std_error * rep.estimated.std_error;
  }
  const double average = value_sum / 3.0;
  const double average_err = std::sqrt(var_sum) / 3.0;
  json avg_row;
  avg_row["state"] = "average";
  avg_row["fidelity"] = average;
  avg_row["std_error"] = average_err;
  avg_row["fidelity_exact"] = json();
  avg_row["above_estimation_limit"] = average > bounds.estimation_limit;
  avg_row["above_ququart_limit"] = average > bounds.ququart_limit;
  bars.push_back(avg_row);
  bars_csv += "average," + format_sig12(average) + "," + format_sig12(average_err) +
              ",," + (average > bounds.estimation_limit ? "1" : "0") + "," +
              (average > bounds.ququart_limit ? "1" : "0") + "\n";

  if (config.input_state.kind == InputStateSpec::Kind::Custom ||
      config.input_state.kind == InputStateSpec::Kind::Random) {
    json row;
    row["state"] = config.input_state.name();
    row["fidelity"] = bench.estimated.value;
    row["std_error"] = bench.estimated.std_error;
    row["fidelity_exact"] = bench.exact.value;
    row["above_estimation_limit"] = bench.exceeds_estimation_limit;
    row["above_ququart_limit"] = bench.exceeds_ququart_limit;
    bars.push_back(row);
    bars_csv += config.input_state.name() + "," +
                format_sig12(bench.estimated.value) + "," +
                format_sig12(bench.estimated.std_error) + "," +
                format_sig12(bench.exact.value) + "," +
                (bench.exceeds_estimation_limit ? "1" : "0") + "," +
                (bench.exceeds_ququart_limit ? "1" : "0") + "\n";
  }
  out.write("fidelity_bars.csv", bars_csv);

  json results;
  results["input_amplitudes"] = amplitudes_json(input);
  results["totals_per_setting"] = totals;
  results["protocol"] = protocol;
  results["bench"] = teleport_report_json(bench);
  results["bars"] = bars;
  results["average_fidelity"] = average;
  results["average_std_error"] = average_err;
  return results;
}

json run_teleport_reverse(const ExperimentConfig& config, OutputWriter& out) {
  const PureState input = resolve_input_state(config);
  const PureState as_ququart = regroup(input, DimRegister({4}));

  const teleport::ReverseResult rev = teleport::teleport_reverse(
      as_ququart, rng::derive_seed(config.seed, kStreamProtocol));

  const teleport::TeleportResult fwd = teleport::teleport_forward(
      input, teleport::TeleportMode::deterministic(),
      rng::derive_seed(config.seed, kStreamReport));
  const teleport::ReverseResult round_trip = teleport::teleport_reverse(
      fwd.output, rng::derive_seed(config.seed, kStreamInput));

  std::string csv = "outcome,probability\n";
  json outcome_rows = json::array();
  for (int i = 0; i < 16; ++i) {
    const teleport::QuquartBellOutcome outcome =
        teleport::QuquartBellOutcome::from_index(i);
    const teleport::ReverseResult forced =
        teleport::teleport_reverse_branch(as_ququart, outcome);
    csv += outcome.name() + "," + format_sig12(forced.record.probability) + "\n";
    json row;
    row["outcome"] = outcome.name();
    row["probability"] = forced.record.probability;
    outcome_rows.push_back(row);
  }
  out.write("outcome_probabilities.csv", csv);

  json results;
  results["input_amplitudes"] = amplitudes_json(as_ququart);
  results["sampled_outcome"] = rev.record.outcome.name();
  results["sampled_outcome_probability"] = rev.record.probability;
  results["fidelity"] = overlap_fidelity(rev.output, input);
  results["round_trip_fidelity"] = overlap_fidelity(round_trip.output, input);
  results["outcomes"] = outcome_rows;
  return results;
}

json run_noise_sweep(const ExperimentConfig& config, OutputWriter& out) {
  const PureState input = resolve_input_state(config);
  const std::int64_t totals = config.resolved_totals();
  const teleport::ClassicalBounds bounds = teleport::classical_bounds();

  json rows = json::array();
  std::string csv =
      "noise_p,purity,resource_fidelity,teleport_fidelity,teleport_estimate,"
      "teleport_std_error,resource_above_estimation_limit,"
      "resource_above_ququart_limit,teleport_above_estimation_limit,"
      "teleport_above_ququart_limit\n";

  json crossings;
  crossings["teleport_below_estimation_limit_from_noise_p"] = json();
  crossings["teleport_below_ququart_limit_from_noise_p"] = json();

  bool prev_above_est = true;
  bool prev_above_ququart = true;
  for (int i = 0; i < config.sweep_points; ++i) {
    const double noise_p =
        static_cast<double>(i) / static_cast<double>(config.sweep_points - 1);
    const double p = 1.0 - noise_p;
    const double resource_fidelity = p + (1.0 - p) / 16.0;
    const double teleport_fidelity = p + (1.0 - p) / 4.0;
    const estimation::TeleportFidelityReport rep = estimation::teleport_fidelity_report(
        input, estimation::NoiseModel{p}, totals,
        rng::derive_seed(config.seed, kStreamSweep + static_cast<std::uint64_t>(i)),
        config.bootstrap_iters);

    const bool res_above_est = resource_fidelity > bounds.estimation_limit;
    const bool res_above_ququart = resource_fidelity > bounds.ququart_limit;
    const bool tel_above_est = teleport_fidelity > bounds.estimation_limit;
    const bool tel_above_ququart = teleport_fidelity > bounds.ququart_limit;

    if (prev_above_est && !tel_above_est) {
      crossings["teleport_below_estimation_limit_from_noise_p"] = noise_p;
    }
    if (prev_above_ququart && !tel_above_ququart) {
      crossings["teleport_below_ququart_limit_from_noise_p"] = noise_p;
    }
    prev_above_est = tel_above_est;
    prev_above_ququart = tel_above_ququart;

    json row;
    row["noise_p"] = noise_p;
    row["purity"] = p;
    row["resource_fidelity"] = resource_fidelity;
    row["teleport_fidelity"] = teleport_fidelity;
    row["teleport_estimate"] = rep.estimated.value;
    row["teleport_std_error"] = rep.estimated.std_error;
    row["resource_above_estimation_limit"] = res_above_est;
    row["resource_above_ququart_limit"] = res_above_ququart;
    row["teleport_above_estimation_limit"] = tel_above_est;
    row["teleport_above_ququart_limit"] = tel_above_ququart;
    rows.push_back(row);

    csv += format_sig12(noise_p) + "," + format_sig12(p) + "," +
           format_sig12(resource_fidelity) + "," + format_sig12(teleport_fidelity) +
           "," + format_sig12(rep.estimated.value) + "," +
           format_sig12(rep.estimated.std_error) + "," +
           (res_above_est ? "1" : "0") + "," + (res_above_ququart ? "1" : "0") + "," +
           (tel_above_est ? "1" : "0") + "," + (tel_above_ququart ? "1" : "0") + "\n";
  }
  out.write("sweep.csv", csv);

  json results;
  results["totals_per_setting"] = totals;
  results["rows"] = rows;
  results["crossings"] = crossings;
  return results;
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buffer[32];
  std::tm tm_utc;
  gmtime_r(&t, &tm_utc);
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buffer;
}

}  // namespace

std::string Report::payload_text() const { return payload.dump(2); }

std::string Report::document_text() const {
  json doc;
  doc["metadata"] = metadata;
  doc["payload"] = payload;
  return doc.dump(2);
}

Report run_scenario(const ExperimentConfig& config,
                    const std::string& output_dir_override) {
  const std::string out_dir =
      output_dir_override.empty() ? config.output_dir : output_dir_override;
  OutputWriter out(out_dir);

  json results;
  switch (config.scenario) {
    case Scenario::Prepare:
      results = run_prepare(config, out);
      break;
    case Scenario::EstimateFidelity:
      results = run_estimate_fidelity(config, out);
      break;
    case Scenario::TeleportForward:
      results = run_teleport_forward(config, out);
      break;
    case Scenario::TeleportReverse:
      results = run_teleport_reverse(config, out);
      break;
    case Scenario::NoiseSweep:
      results = run_noise_sweep(config, out);
      break;
  }

  const teleport::ClassicalBounds bounds = teleport::classical_bounds();
  Report report;
  report.payload["scenario"] = scenario_name(config.scenario);
  report.payload["parameters"] = json::parse(serialize_config(config));
  report.payload["bounds"] = {{"estimation_limit", bounds.estimation_limit},
                              {"ququart_limit", bounds.ququart_limit}};
  report.payload["results"] = results;
  report.payload["version"] = kToolVersion;
  round_numbers(report.payload);

  report.metadata["tool"] = kToolName;
  report.metadata["version"] = kToolVersion;
  report.metadata["generated_at"] = iso_timestamp();

  out.write("report.json", report.document_text() + "\n");
  json files = json::array();
  for (const std::string& f : out.files()) files.push_back(f);
  report.metadata["files"] = files;
  return report;
}

std::string list_scenarios() {
  std::string out;
  for (Scenario s : {Scenario::Prepare, Scenario::TeleportForward,
                     Scenario::TeleportReverse, Scenario::EstimateFidelity,
                     Scenario::NoiseSweep}) {
    out += scenario_name(s) + "\n";
  }
  return out;
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"hybrid-dimensional entanglement and teleportation simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::int64_t seed_override = -1;
  bool quiet = false;
  bool has_seed_override = false;

  CLI::App* run = app.add_subcommand("run", "run a scenario from a config file");
  run->add_option("config", config_path, "path to the JSON config")->required();
  run->add_option("--out", out_dir, "output directory override");
  run->add_option("--seed", seed_override, "seed override")
      ->check(CLI::NonNegativeNumber);
  run->add_flag("--quiet", quiet, "suppress the summary line");

  CLI::App* scenarios = app.add_subcommand("scenarios", "list scenario names");

  std::string validate_path;
  CLI::App* validate = app.add_subcommand("validate", "parse and echo a config");
  validate->add_option("config", validate_path, "path to the JSON config")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfigError;
  }

  const auto read_file = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file " + path);
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
  };

  try {
    if (scenarios->parsed()) {
      std::cout << list_scenarios();
      return kExitOk;
    }
    if (validate->parsed()) {
      const ExperimentConfig config = parse_config(read_file(validate_path));
      std::cout << serialize_config(config) << "\n";
      return kExitOk;
    }
    ExperimentConfig config = parse_config(read_file(config_path));
    has_seed_override = run->count("--seed") > 0;
    if (has_seed_override) {
      config.seed = static_cast<std::uint64_t>(seed_override);
    }
    const Report report = run_scenario(config, out_dir);
    if (!quiet) {
      std::cout << "wrote "
                << (out_dir.empty() ? config.output_dir : out_dir) + "/report.json"
                << "\n";
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    json err;
    err["error"] = e.what();
    std::cerr << err.dump() << "\n";
    return kExitRuntimeError;
  }
}

}  // namespace hdsim::cli
