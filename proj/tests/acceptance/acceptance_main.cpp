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

// End-to-end verification gate.  Each criterion prints one line:
//   PASS  1. protocol exactness ... (detail)
// and the binary exits non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hdsim/cli/runner.hpp"
#include "hdsim/estimation/sampling.hpp"
#include "hdsim/estimation/teleport_report.hpp"
#include "hdsim/photonics/pipeline.hpp"
#include "hdsim/state_ops.hpp"
#include "hdsim/teleport/protocol.hpp"
#include "test_helpers.hpp"

using namespace hdsim;
namespace tp = hdsim::teleport;
namespace ph = hdsim::photonics;
namespace est = hdsim::estimation;

namespace {

struct Criterion {
  std::string name;
  std::function<std::string()> run;  // returns detail text; throws on failure
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw Failure(message);
}

std::string fmt(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", v);
  return buffer;
}

PureState random_two_qubit(std::uint64_t seed) {
  return testing::random_pure_state(DimRegister({2, 2}), seed);
}

// ---------------------------------------------------------------------------

std::string criterion_1_protocol_exactness() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const PureState input = random_two_qubit(10000 + seed);
    const PureState target = regroup(input, DimRegister({4}));
    const tp::BranchTable table = tp::expand_joint(input);
    for (int i = 0; i < 16; ++i) {
      const tp::BellOutcomePair outcome = tp::BellOutcomePair::from_index(i);
      const Eigen::Vector4cd corrected =
          tp::correction_unitary(outcome).matrix() * table.at(outcome).conditional;
      const PureState output(DimRegister({4}), corrected);
      const double deficit = 1.0 - overlap_fidelity(output, target);
      worst = std::max(worst, std::abs(deficit));
    }
    const tp::TeleportResult sampled =
        tp::teleport_forward(input, tp::TeleportMode::deterministic(), seed);
    worst = std::max(worst, std::abs(1.0 - overlap_fidelity(sampled.output, target)));
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(worst < 1e-12, "fidelity deficit " + fmt(worst) + " exceeds 1e-12");
  require(elapsed < 5.0, "runtime " + fmt(elapsed) + "s exceeds 5s");
  return "100 inputs x 16 branches, worst deficit " + fmt(worst) + ", " +
         fmt(elapsed) + "s";
}

std::string criterion_2_branch_oracle() {
  double worst_amp = 0.0;
  double worst_prob = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const PureState input = random_two_qubit(20000 + seed);
    const tp::BranchTable table = tp::expand_joint(input);
    const PureState joint = tensor(input, tp::make_224_state());
    for (int i = 0; i < 16; ++i) {
      const tp::BellOutcomePair outcome = tp::BellOutcomePair::from_index(i);
      const PureState projector =
          tensor(tp::bell_state(outcome.first), tp::bell_state(outcome.second));
      const Projection oracle = project(joint, projector, {0, 2, 1, 3});
      require(oracle.remainder.has_value(), "oracle branch died unexpectedly");
      const tp::Branch& branch = table.at(outcome);
      worst_amp = std::max(worst_amp, (oracle.remainder->amps() - branch.conditional)
                                          .cwiseAbs()
                                          .maxCoeff());
      worst_prob = std::max(worst_prob, std::abs(branch.probability - 1.0 / 16.0));
      worst_prob =
          std::max(worst_prob, std::abs(oracle.probability - branch.probability));
    }
  }
  require(worst_amp < 1e-12, "amplitude deviation " + fmt(worst_amp));
  require(worst_prob < 1e-12, "probability deviation " + fmt(worst_prob));
  return "100 inputs, worst amplitude dev " + fmt(worst_amp) + ", worst prob dev " +
         fmt(worst_prob);
}

std::string criterion_3_reverse_protocol() {
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const PureState input = testing::random_pure_state(DimRegister({4}), 30000 + seed);
    const PureState target = regroup(input, DimRegister({2, 2}));
    for (int i = 0; i < 16; ++i) {
      const tp::ReverseResult result =
          tp::teleport_reverse_branch(input, tp::QuquartBellOutcome::from_index(i));
      worst = std::max(worst, std::abs(1.0 - overlap_fidelity(result.output, target)));
    }
  }
  double worst_round_trip = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const PureState input = random_two_qubit(31000 + seed);
    const tp::TeleportResult forward =
        tp::teleport_forward(input, tp::TeleportMode::deterministic(), seed);
    const tp::ReverseResult back = tp::teleport_reverse(forward.output, seed + 17);
    worst_round_trip =
        std::max(worst_round_trip, std::abs(1.0 - overlap_fidelity(back.output, input)));
  }
  require(worst < 1e-12, "reverse fidelity deficit " + fmt(worst));
  require(worst_round_trip < 1e-12, "round-trip deficit " + fmt(worst_round_trip));
  return "per-outcome deficit " + fmt(worst) + ", round-trip deficit " +
         fmt(worst_round_trip);
}

std::string criterion_4_preparation_pipeline() {
  const ph::PreparationResult prep = ph::simulate_preparation();

  // Physical-basis target: amplitude 1/2 whenever b's polarization copies a1
  // and b's path copies a2.
  Eigen::VectorXcd physical_target = Eigen::VectorXcd::Zero(16);
  DimRegister reg({2, 2, 2, 2});
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      physical_target(reg.flat_index(std::vector<int>{x, y, x, y})) = 0.5;
    }
  }
  const PureState physical(reg, physical_target);
  const double f_physical = overlap_fidelity(prep.physical_state, physical);
  require(std::abs(1.0 - f_physical) < 1e-10,
          "physical-form fidelity " + fmt(f_physical));

  const double f_relabeled = overlap_fidelity(prep.state, tp::make_224_state());
  require(std::abs(1.0 - f_relabeled) < 1e-10,
          "relabeled fidelity " + fmt(f_relabeled));
  require(approx_equal_up_to_phase(prep.state, tp::make_224_state(), 1e-10),
          "states differ beyond a global phase");
  return "fidelity vs physical form " + fmt(f_physical) + ", vs canonical state " +
         fmt(f_relabeled) + ", success prob " + fmt(prep.success_probability);
}

std::string criterion_5_witness_exactness() {
  const PureState ideal = tp::make_224_state();
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const MixedState rho =
        testing::random_density_matrix(DimRegister({2, 2, 4}), 50000 + seed);
    worst = std::max(worst, std::abs(est::witness_value_exact(rho) -
                                     fidelity_pure(ideal, rho)));
  }
  require(worst < 1e-10, "witness deviation " + fmt(worst));

  double worst_noise = 0.0;
  for (int i = 0; i <= 10; ++i) {
    const double p = static_cast<double>(i) / 10.0;
    const double value = est::witness_value_exact(est::white_noise(ideal, p));
    worst_noise = std::max(worst_noise, std::abs(value - (p + (1.0 - p) / 16.0)));
  }
  require(worst_noise < 1e-10, "white-noise law deviation " + fmt(worst_noise));
  return "100 random states, worst deviation " + fmt(worst) +
         "; white-noise law deviation " + fmt(worst_noise);
}

std::string criterion_6_resource_fidelity() {
  const auto start = std::chrono::steady_clock::now();
  const double p = (0.72 - 1.0 / 16.0) / (15.0 / 16.0);
  const std::int64_t totals = est::expected_counts(0.183, 10000.0);
  require(totals == 1830, "expected 1830 counts per setting");
  const MixedState resource = est::white_noise(tp::make_224_state(), p);
  const std::array<est::MeasurementSetting, 9> settings = est::nine_settings();

  std::array<std::array<double, 16>, 9> exact_probs;
  for (int s = 0; s < 9; ++s) {
    exact_probs[s] = est::outcome_probabilities(resource, settings[s]);
  }

  int in_window = 0;
  double min_bar = 1.0;
  double max_bar = 0.0;
  for (std::uint64_t run = 0; run < 100; ++run) {
    std::vector<est::CountsRecord> records;
    for (int s = 0; s < 9; ++s) {
      records.push_back(est::sample_counts(
          exact_probs[s], totals,
          rng::derive_seed(run + 1, static_cast<std::uint64_t>(s)), settings[s]));
    }
    const est::FidelityEstimate estimate = est::fidelity_witness_224(records);
    if (std::abs(estimate.value - 0.72) <= 0.03) ++in_window;
    const double bar = est::poisson_bootstrap(records, 1000, run + 1);
    min_bar = std::min(min_bar, bar);
    max_bar = std::max(max_bar, bar);
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(in_window >= 90, "only " + std::to_string(in_window) +
                               "/100 runs inside 0.72 +/- 0.03");
  require(min_bar >= 0.005 && max_bar <= 0.05,
          "bootstrap bars [" + fmt(min_bar) + ", " + fmt(max_bar) +
              "] leave [0.005, 0.05]");
  require(elapsed < 60.0, "runtime " + fmt(elapsed) + "s exceeds 60s");
  return std::to_string(in_window) + "/100 runs in window, bars in [" + fmt(min_bar) +
         ", " + fmt(max_bar) + "], " + fmt(elapsed) + "s";
}

std::string criterion_7_teleportation_fidelities() {
  const std::array<std::pair<std::string, ph::WaveplateAngles>, 3> presets = {
      std::make_pair(std::string("phi1"), ph::kInputDiagV),
      std::make_pair(std::string("phi2"), ph::kInputDiagDiag),
      std::make_pair(std::string("phi3"), ph::kInputDiagCirc)};

  // Ideal resource: all three reported input states teleport exactly.
  for (const auto& [name, angles] : presets) {
    const PureState input = ph::prepare_input_qubits(angles);
    const est::TeleportFidelityReport report =
        est::teleport_fidelity_report(input, est::NoiseModel{1.0}, 2000, 123);
    require(std::abs(report.exact.value - 1.0) < 1e-12,
            name + " exact fidelity " + fmt(report.exact.value));
    require(report.exceeds_estimation_limit && report.exceeds_ququart_limit,
            name + " does not clear the classical bounds");
  }

  // White-noise sweep through the CLI runner: estimates monotone in the
  // purity, flags matching the analytic crossings.
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "hdsim_acceptance_sweep";
  std::filesystem::remove_all(dir);
  cli::ExperimentConfig config = cli::parse_config(
      R"({"scenario": "noise-sweep", "seed": 77, "sweep_points": 11,
          "counts_override": 1830, "bootstrap_iters": 200})");
  const cli::Report report = cli::run_scenario(config, dir.string());
  const auto& rows = report.payload["results"]["rows"];
  require(rows.size() == 11, "sweep must have 11 rows");
  double previous_estimate = 2.0;
  for (const auto& row : rows) {
    const double purity = row["purity"].get<double>();
    const double exact = purity + (1.0 - purity) / 4.0;
    require(std::abs(row["teleport_fidelity"].get<double>() - exact) < 1e-9,
            "sweep exact column deviates from the analytic law");
    const double estimate = row["teleport_estimate"].get<double>();
    // Rows run from noise 0 to noise 1, so estimates must decrease.
    require(estimate < previous_estimate, "sweep estimates are not monotone");
    previous_estimate = estimate;
    require(row["teleport_above_estimation_limit"].get<bool>() == (exact > 0.4),
            "estimation-limit flag mismatch");
    require(row["teleport_above_ququart_limit"].get<bool>() == (exact > 0.75),
            "ququart-limit flag mismatch");
    const double resource = row["resource_fidelity"].get<double>();
    require(std::abs(resource - (purity + (1.0 - purity) / 16.0)) < 1e-9,
            "resource fidelity column deviates");
  }
  std::filesystem::remove_all(dir);
  return "ideal-resource fidelities exact; sweep monotone with correct flags";
}

std::string criterion_8_statistics_laws() {
  // Bootstrap scale law over 50 seeds.
  const double p = (0.72 - 1.0 / 16.0) / (15.0 / 16.0);
  const MixedState resource = est::white_noise(tp::make_224_state(), p);
  const std::array<est::MeasurementSetting, 9> settings = est::nine_settings();
  std::array<std::array<double, 16>, 9> probs;
  for (int s = 0; s < 9; ++s) {
    probs[s] = est::outcome_probabilities(resource, settings[s]);
  }
  double min_ratio = 10.0;
  double max_ratio = 0.0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    std::vector<est::CountsRecord> base;
    std::vector<est::CountsRecord> scaled;
    for (int s = 0; s < 9; ++s) {
      base.push_back(est::sample_counts(
          probs[s], 1830, rng::derive_seed(seed, static_cast<std::uint64_t>(s)),
          settings[s]));
      scaled.push_back(est::sample_counts(
          probs[s], 4 * 1830,
          rng::derive_seed(seed, static_cast<std::uint64_t>(100 + s)), settings[s]));
    }
    const double ratio = est::poisson_bootstrap(scaled, 400, seed) /
                         est::poisson_bootstrap(base, 400, seed);
    min_ratio = std::min(min_ratio, ratio);
    max_ratio = std::max(max_ratio, ratio);
  }
  require(min_ratio >= 0.4 && max_ratio <= 0.6,
          "bootstrap ratios [" + fmt(min_ratio) + ", " + fmt(max_ratio) +
              "] leave [0.4, 0.6]");

  // Chi-square goodness of fit on one million draws from the ideal ZZZZ
  // distribution (three live degrees of freedom; 0.001 level).
  const std::array<double, 16> ideal_probs = est::outcome_probabilities(
      MixedState::from_pure(tp::make_224_state()), {est::PauliBasis::Z,
                                                    est::PauliBasis::Z});
  const est::CountsRecord record = est::sample_counts(ideal_probs, 1000000, 314159);
  double chi2 = 0.0;
  for (int o = 0; o < 16; ++o) {
    const double expected = ideal_probs[o] * 1e6;
    if (expected == 0.0) {
      require(record.counts[o] == 0, "sampler hit a zero-probability bin");
    } else {
      const double diff = static_cast<double>(record.counts[o]) - expected;
      chi2 += diff * diff / expected;
    }
  }
  const double kChi2Critical999Df3 = 16.266;
  require(chi2 < kChi2Critical999Df3,
          "chi-square " + fmt(chi2) + " exceeds the 0.001-level critical value");
  return "bootstrap ratios in [" + fmt(min_ratio) + ", " + fmt(max_ratio) +
         "], chi-square " + fmt(chi2) + " < 16.266";
}

std::string criterion_9_reproducibility() {
  const std::filesystem::path base =
      std::filesystem::temp_directory_path() / "hdsim_acceptance_repro";
  std::filesystem::remove_all(base);
  const std::vector<std::string> configs = {
      R"({"scenario": "estimate-fidelity", "seed": 5, "counts_override": 500,
          "bootstrap_iters": 150})",
      R"({"scenario": "teleport-forward", "seed": 6, "input_state": "phi3",
          "counts_override": 500, "bootstrap_iters": 150})",
      R"({"scenario": "prepare", "seed": 7})",
  };
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const cli::ExperimentConfig config = cli::parse_config(configs[i]);
    const cli::Report a = cli::run_scenario(
        config, (base / ("a" + std::to_string(i))).string());
    const cli::Report b = cli::run_scenario(
        config, (base / ("b" + std::to_string(i))).string());
    require(a.payload_text() == b.payload_text(),
            "payload mismatch for config " + std::to_string(i));
  }
  std::filesystem::remove_all(base);
  return std::to_string(configs.size()) + " scenarios rerun byte-identically";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1. protocol exactness (forward, all 16 branches)",
       criterion_1_protocol_exactness},
      {"2. branch-table oracle (tensor-and-project)", criterion_2_branch_oracle},
      {"3. reverse protocol and round trip", criterion_3_reverse_protocol},
      {"4. preparation pipeline output", criterion_4_preparation_pipeline},
      {"5. witness exactness", criterion_5_witness_exactness},
      {"6. resource fidelity at bench scale", criterion_6_resource_fidelity},
      {"7. teleportation fidelities and bound flags",
       criterion_7_teleportation_fidelities},
      {"8. statistics laws (bootstrap scale, chi-square)",
       criterion_8_statistics_laws},
      {"9. reproducibility", criterion_9_reproducibility},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    try {
      const std::string detail = criterion.run();
      std::printf("PASS  %s (%s)\n", criterion.name.c_str(), detail.c_str());
    } catch (const std::exception& e) {
      ++failures;
      std::printf("FAIL  %s (%s)\n", criterion.name.c_str(), e.what());
    }
    std::fflush(stdout);
  }
  if (failures > 0) {
    std::printf("%d of %zu acceptance criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu acceptance criteria passed\n", criteria.size());
  return 0;
}
