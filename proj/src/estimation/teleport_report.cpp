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

#include "hdsim/estimation/teleport_report.hpp"

#include <bit>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "hdsim/random.hpp"
#include "hdsim/state_ops.hpp"
#include "hdsim/teleport/bell.hpp"
#include "hdsim/teleport/protocol.hpp"

namespace hdsim::estimation {
namespace {

// Pauli label on one qubit; nullopt plays the identity.
using MaybeBasis = std::optional<PauliBasis>;

Eigen::Matrix2cd operator_of(MaybeBasis basis) {
  if (!basis.has_value()) return Eigen::Matrix2cd::Identity();
  return pauli_matrix(*basis);
}

// <psi| P ⊗ Q |psi> for a two-qubit pure state given as a 4-vector.
double pauli_weight(const Eigen::Vector4cd& psi, MaybeBasis pol, MaybeBasis path) {
  Eigen::Matrix4cd op = Eigen::Matrix4cd::Zero();
  const Eigen::Matrix2cd p = operator_of(pol);
  const Eigen::Matrix2cd q = operator_of(path);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      op.block<2, 2>(2 * i, 2 * j) = p(i, j) * q;
    }
  }
  const Complex w = psi.dot(op * psi);
  return w.real();
}

struct PauliTerm {
  MaybeBasis pol;
  MaybeBasis path;
  double weight;
};

bool setting_covers(PauliBasis set_pol, PauliBasis set_path, const PauliTerm& term) {
  const bool pol_ok = !term.pol.has_value() || *term.pol == set_pol;
  const bool path_ok = !term.path.has_value() || *term.path == set_path;
  return pol_ok && path_ok;
}

// Outcome-sign mask for a term: pol bit sits at position 1, path at 0.
unsigned term_mask(const PauliTerm& term) {
  unsigned mask = 0;
  if (term.pol.has_value()) mask |= 0b10u;
  if (term.path.has_value()) mask |= 0b01u;
  return mask;
}

double signed_mean(const std::vector<double>& weights, double total, unsigned mask) {
  double acc = 0.0;
  for (int o = 0; o < 4; ++o) {
    const bool odd = (std::popcount(static_cast<unsigned>(o) & mask) & 1) != 0;
    acc += odd ? -weights[o] : weights[o];
  }
  return acc / total;
}

}  // namespace

std::string QuquartSettingCounts::label() const {
  return std::string() + basis_char(pol) + basis_char(path);
}

TeleportFidelityReport teleport_fidelity_report(const PureState& input,
                                                const NoiseModel& noise,
                                                std::int64_t total_counts,
                                                std::uint64_t seed,
                                                int bootstrap_iterations) {
  if (input.reg().dims() != std::vector<int>{2, 2}) {
    throw std::invalid_argument("teleport_fidelity_report: input must be two qubits");
  }
  if (total_counts <= 0) {
    throw std::invalid_argument("teleport_fidelity_report: counts must be positive");
  }

  // Postselected branch over the noisy resource: project both (input qubit,
  // resource qubit) pairs of |in><in| ⊗ rho onto the no-correction Bell pair.
  const MixedState resource = white_noise(teleport::make_224_state(),
                                          noise.ideal_weight);
  const MixedState joint = tensor(MixedState::from_pure(input), resource);
  const PureState bell_pair = tensor(teleport::bell_state(teleport::BellKind::PhiPlus),
                                     teleport::bell_state(teleport::BellKind::PhiPlus));
  const MixedProjection branch = project(joint, bell_pair, {0, 2, 1, 3});
  if (!branch.remainder.has_value()) {
    throw std::runtime_error("teleport_fidelity_report: postselection dead branch");
  }
  const MixedState received = *branch.remainder;

  const PureState ideal_output = regroup(input, DimRegister({4}, {"b"}));
  const double exact_value = fidelity_pure(ideal_output, received);

  // Pauli decomposition of the target: F = 1/4 Σ w_PQ <P ⊗ Q>.
  const Eigen::Vector4cd psi = ideal_output.amps();
  std::vector<PauliTerm> terms;
  const std::array<MaybeBasis, 4> all = {MaybeBasis{}, PauliBasis::X, PauliBasis::Y,
                                         PauliBasis::Z};
  for (const MaybeBasis& pol : all) {
    for (const MaybeBasis& path : all) {
      if (!pol.has_value() && !path.has_value()) continue;
      const double w = pauli_weight(psi, pol, path);
      if (std::abs(w) > 1e-9) terms.push_back(PauliTerm{pol, path, w});
    }
  }

  // Measured settings: populations first, then the coherence settings the
  // target needs.
  std::vector<std::pair<PauliBasis, PauliBasis>> settings = {
      {PauliBasis::Z, PauliBasis::Z}};
  const auto ensure_setting = [&settings](PauliBasis pol, PauliBasis path) {
    for (const auto& s : settings) {
      if (s.first == pol && s.second == path) return;
    }
    settings.emplace_back(pol, path);
  };
  for (const PauliTerm& term : terms) {
    if (term.pol.has_value() && term.path.has_value()) {
      ensure_setting(*term.pol, *term.path);
    }
  }
  for (const PauliTerm& term : terms) {
    bool covered = false;
    for (const auto& s : settings) {
      covered = covered || setting_covers(s.first, s.second, term);
    }
    if (!covered) {
      ensure_setting(term.pol.value_or(PauliBasis::Z),
                     term.path.value_or(PauliBasis::Z));
    }
  }

  // Exact outcome probabilities per setting, then seeded multinomial counts.
  const MixedState received_qubits = regroup(received, DimRegister({2, 2}));
  std::vector<QuquartSettingCounts> counts;
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<double> totals;
  for (std::size_t s = 0; s < settings.size(); ++s) {
    const std::array<PauliBasis, 2> axes = {settings[s].first, settings[s].second};
    const std::vector<double> probs = qubit_outcome_probabilities(
        received_qubits, std::span(axes.data(), axes.size()));
    rng::Engine engine(rng::derive_seed(seed, s));
    const std::vector<std::int64_t> tally = engine.multinomial(
        std::span<const double>(probs.data(), probs.size()), total_counts);
    QuquartSettingCounts record;
    record.pol = settings[s].first;
    record.path = settings[s].second;
    std::copy(tally.begin(), tally.end(), record.counts.begin());
    record.total = total_counts;
    counts.push_back(record);
    rows.push_back(tally);
    totals.push_back(static_cast<double>(total_counts));
  }

  // Estimator over real-valued rows with the acquisition totals fixed.
  const auto estimate = [&](const std::vector<std::vector<double>>& data) {
    double sum = 1.0;  // identity ⊗ identity
    for (const PauliTerm& term : terms) {
      double acc = 0.0;
      int compatible = 0;
      for (std::size_t s = 0; s < settings.size(); ++s) {
        if (!setting_covers(settings[s].first, settings[s].second, term)) continue;
        acc += signed_mean(data[s], totals[s], term_mask(term));
        ++compatible;
      }
      if (compatible == 0) {
        throw std::runtime_error("teleport_fidelity_report: uncovered term");
      }
      sum += term.weight * acc / static_cast<double>(compatible);
    }
    return sum / 4.0;
  };

  std::vector<std::vector<double>> observed(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    observed[r].assign(rows[r].begin(), rows[r].end());
  }
  const double estimated_value = estimate(observed);
  const double std_error = poisson_bootstrap_generic(
      rows, estimate, bootstrap_iterations, rng::derive_seed(seed, 0x626f6f74ULL));

  TeleportFidelityReport report{
      ideal_output,
      branch.probability,
      FidelityEstimate::from_raw(exact_value, 0.0, FidelityEstimate::Method::Exact),
      FidelityEstimate::from_raw(estimated_value, std_error,
                                 FidelityEstimate::Method::Bootstrap),
      std::move(counts),
      teleport::classical_bounds().estimation_limit,
      teleport::classical_bounds().ququart_limit,
      false,
      false};
  report.exceeds_estimation_limit = report.estimated.value > report.estimation_limit;
  report.exceeds_ququart_limit = report.estimated.value > report.ququart_limit;
  return report;
}

}  // namespace hdsim::estimation
