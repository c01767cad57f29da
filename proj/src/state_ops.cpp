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

#include "hdsim/state_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hdsim {
namespace {

// Validates a target list: distinct, in range.  Returns the gate dimension
// (product of target dims).
int check_targets(const DimRegister& reg, const std::vector<int>& targets) {
  if (targets.empty()) {
    throw std::invalid_argument("targets must be non-empty");
  }
  long long gate_dim = 1;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const int t = targets[i];
    if (t < 0 || t >= reg.size()) {
      throw std::invalid_argument("target subsystem index out of range");
    }
    for (std::size_t j = i + 1; j < targets.size(); ++j) {
      if (targets[j] == t) {
        throw std::invalid_argument("repeated target subsystem");
      }
    }
    gate_dim *= reg.dim(t);
  }
  return static_cast<int>(gate_dim);
}

// Complement of `targets` in register order.
std::vector<int> complement(const DimRegister& reg, const std::vector<int>& targets) {
  std::vector<int> rest;
  for (int i = 0; i < reg.size(); ++i) {
    if (std::find(targets.begin(), targets.end(), i) == targets.end()) {
      rest.push_back(i);
    }
  }
  return rest;
}

// Flat offsets of every multi-index combination over the given subsystems,
// enumerated row-major in the order the subsystems are listed.
std::vector<int> enumerate_offsets(const DimRegister& reg, const std::vector<int>& subs) {
  long long count = 1;
  for (int s : subs) count *= reg.dim(s);
  std::vector<int> offsets(static_cast<std::size_t>(count), 0);
  int repeat = static_cast<int>(count);
  for (int s : subs) {
    const int d = reg.dim(s);
    const int stride = reg.stride(s);
    repeat /= d;
    int block = repeat * d;
    for (int i = 0; i < static_cast<int>(count); ++i) {
      offsets[i] += ((i % block) / repeat) * stride;
    }
  }
  return offsets;
}

Eigen::MatrixXcd apply_to_columns(const Eigen::MatrixXcd& m, const UnitaryOp& u,
                                  const DimRegister& reg,
                                  const std::vector<int>& targets) {
  const std::vector<int> rest = complement(reg, targets);
  const std::vector<int> target_offsets = enumerate_offsets(reg, targets);
  std::vector<int> rest_offsets;
  if (rest.empty()) {
    rest_offsets = {0};
  } else {
    rest_offsets = enumerate_offsets(reg, rest);
  }
  const int gate_dim = static_cast<int>(target_offsets.size());
  Eigen::MatrixXcd out = m;
  Eigen::VectorXcd scratch(gate_dim);
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    for (int base : rest_offsets) {
      for (int k = 0; k < gate_dim; ++k) scratch(k) = m(base + target_offsets[k], col);
      scratch = u.matrix() * scratch;
      for (int k = 0; k < gate_dim; ++k) out(base + target_offsets[k], col) = scratch(k);
    }
  }
  return out;
}

}  // namespace

PureState tensor(const PureState& a, const PureState& b) {
  DimRegister reg = DimRegister::concat(a.reg(), b.reg());
  const int db = b.total_dim();
  Eigen::VectorXcd amps(reg.total_dim());
  for (int i = 0; i < a.total_dim(); ++i) {
    amps.segment(static_cast<Eigen::Index>(i) * db, db) = a.amp(i) * b.amps();
  }
  return PureState(std::move(reg), std::move(amps));
}

MixedState tensor(const MixedState& a, const MixedState& b) {
  DimRegister reg = DimRegister::concat(a.reg(), b.reg());
  const int da = a.total_dim();
  const int db = b.total_dim();
  Eigen::MatrixXcd m(da * db, da * db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      m.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
    }
  }
  return MixedState(std::move(reg), std::move(m));
}

PureState apply_unitary(const PureState& state, const UnitaryOp& u,
                        const std::vector<int>& targets) {
  const int gate_dim = check_targets(state.reg(), targets);
  if (gate_dim != u.dim()) {
    throw std::invalid_argument("apply_unitary: gate dim does not match target dims");
  }
  Eigen::MatrixXcd col = apply_to_columns(state.amps(), u, state.reg(), targets);
  return PureState(state.reg(), Eigen::VectorXcd(col.col(0)));
}

MixedState apply_unitary(const MixedState& rho, const UnitaryOp& u,
                         const std::vector<int>& targets) {
  const int gate_dim = check_targets(rho.reg(), targets);
  if (gate_dim != u.dim()) {
    throw std::invalid_argument("apply_unitary: gate dim does not match target dims");
  }
  Eigen::MatrixXcd left = apply_to_columns(rho.matrix(), u, rho.reg(), targets);
  Eigen::MatrixXcd full =
      apply_to_columns(left.adjoint(), u, rho.reg(), targets).adjoint();
  // Symmetrize away the last bits of float asymmetry.
  full = 0.5 * (full + full.adjoint().eval());
  return MixedState(rho.reg(), std::move(full));
}

Projection project(const PureState& state, const PureState& projector,
                   const std::vector<int>& targets) {
  check_targets(state.reg(), targets);
  if (!projector.reg().same_dims(state.reg().subset(targets))) {
    throw std::invalid_argument("project: projector dims do not match target dims");
  }
  const std::vector<int> rest = complement(state.reg(), targets);
  const std::vector<int> target_offsets = enumerate_offsets(state.reg(), targets);
  const int gate_dim = static_cast<int>(target_offsets.size());

  std::vector<int> rest_offsets =
      rest.empty() ? std::vector<int>{0} : enumerate_offsets(state.reg(), rest);
  Eigen::VectorXcd reduced(static_cast<Eigen::Index>(rest_offsets.size()));
  for (std::size_t r = 0; r < rest_offsets.size(); ++r) {
    Complex acc = 0.0;
    for (int k = 0; k < gate_dim; ++k) {
      acc += std::conj(projector.amp(k)) * state.amp(rest_offsets[r] + target_offsets[k]);
    }
    reduced(static_cast<Eigen::Index>(r)) = acc;
  }
  const double probability = reduced.squaredNorm();
  Projection result;
  result.probability = probability;
  if (probability > kDeadBranchProbability && !rest.empty()) {
    result.remainder =
        PureState(state.reg().subset(rest), reduced / std::sqrt(probability));
  }
  return result;
}

MixedProjection project(const MixedState& rho, const PureState& projector,
                        const std::vector<int>& targets) {
  check_targets(rho.reg(), targets);
  if (!projector.reg().same_dims(rho.reg().subset(targets))) {
    throw std::invalid_argument("project: projector dims do not match target dims");
  }
  const std::vector<int> rest = complement(rho.reg(), targets);
  const std::vector<int> target_offsets = enumerate_offsets(rho.reg(), targets);
  const int gate_dim = static_cast<int>(target_offsets.size());
  std::vector<int> rest_offsets =
      rest.empty() ? std::vector<int>{0} : enumerate_offsets(rho.reg(), rest);
  const int dr = static_cast<int>(rest_offsets.size());

  Eigen::MatrixXcd reduced(dr, dr);
  for (int r = 0; r < dr; ++r) {
    for (int c = 0; c < dr; ++c) {
      Complex acc = 0.0;
      for (int km = 0; km < gate_dim; ++km) {
        for (int kn = 0; kn < gate_dim; ++kn) {
          acc += std::conj(projector.amp(km)) * projector.amp(kn) *
                 rho.matrix()(rest_offsets[r] + target_offsets[km],
                              rest_offsets[c] + target_offsets[kn]);
        }
      }
      reduced(r, c) = acc;
    }
  }
  const double probability = std::real(reduced.trace());
  MixedProjection result;
  result.probability = probability;
  if (probability > kDeadBranchProbability && !rest.empty()) {
    Eigen::MatrixXcd normalized = reduced / probability;
    normalized = 0.5 * (normalized + normalized.adjoint().eval());
    result.remainder = MixedState(rho.reg().subset(rest), std::move(normalized));
  }
  return result;
}

MixedState partial_trace(const MixedState& rho, const std::vector<int>& keep) {
  check_targets(rho.reg(), keep);
  const std::vector<int> traced = complement(rho.reg(), keep);
  const std::vector<int> keep_offsets = enumerate_offsets(rho.reg(), keep);
  std::vector<int> traced_offsets =
      traced.empty() ? std::vector<int>{0} : enumerate_offsets(rho.reg(), traced);
  const int dk = static_cast<int>(keep_offsets.size());

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dk, dk);
  for (int i = 0; i < dk; ++i) {
    for (int j = 0; j < dk; ++j) {
      Complex acc = 0.0;
      for (int t : traced_offsets) {
        acc += rho.matrix()(keep_offsets[i] + t, keep_offsets[j] + t);
      }
      out(i, j) = acc;
    }
  }
  return MixedState(rho.reg().subset(keep), std::move(out));
}

double fidelity_pure(const PureState& psi, const MixedState& rho) {
  if (!psi.reg().same_dims(rho.reg())) {
    throw std::invalid_argument("fidelity_pure: register mismatch");
  }
  const Complex value = psi.amps().dot(rho.matrix() * psi.amps());
  if (std::abs(value.imag()) > 1e-8) {
    throw std::runtime_error("fidelity_pure: overlap has a non-real component");
  }
  const double f = value.real();
  if (f < -1e-8 || f > 1.0 + 1e-8) {
    throw std::runtime_error("fidelity_pure: value outside [0,1] beyond tolerance");
  }
  return std::clamp(f, 0.0, 1.0);
}

PureState regroup(const PureState& state, DimRegister new_register) {
  if (new_register.total_dim() != state.total_dim()) {
    throw std::invalid_argument("regroup: total dimension mismatch");
  }
  return PureState(std::move(new_register), state.amps());
}

MixedState regroup(const MixedState& rho, DimRegister new_register) {
  if (new_register.total_dim() != rho.total_dim()) {
    throw std::invalid_argument("regroup: total dimension mismatch");
  }
  return MixedState(std::move(new_register), rho.matrix());
}

}  // namespace hdsim
