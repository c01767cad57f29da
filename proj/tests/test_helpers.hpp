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
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "hdsim/pure_state.hpp"
#include "hdsim/mixed_state.hpp"
#include "hdsim/random.hpp"

namespace hdsim::testing {

inline Eigen::VectorXcd random_gaussian_vector(int dim, std::uint64_t seed) {
  rng::Engine engine(seed);
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) {
    v(i) = Complex(engine.normal(), engine.normal());
  }
  return v;
}

inline PureState random_pure_state(DimRegister reg, std::uint64_t seed) {
  Eigen::VectorXcd v = random_gaussian_vector(reg.total_dim(), seed);
  return PureState(std::move(reg), v / v.norm());
}

/// Ginibre construction: G G† / tr, full rank, always a valid density matrix.
inline MixedState random_density_matrix(DimRegister reg, std::uint64_t seed) {
  const int d = reg.total_dim();
  rng::Engine engine(seed);
  Eigen::MatrixXcd g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      g(i, j) = Complex(engine.normal(), engine.normal());
    }
  }
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace();
  rho = 0.5 * (rho + rho.adjoint().eval());
  return MixedState(std::move(reg), std::move(rho));
}

/// Haar-ish unitary via QR of a Ginibre matrix with phase-fixed diagonal.
inline Eigen::MatrixXcd random_unitary_matrix(int dim, std::uint64_t seed) {
  rng::Engine engine(seed);
  Eigen::MatrixXcd g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = Complex(engine.normal(), engine.normal());
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const Complex d = r(i, i);
    if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

// ---- Brute-force oracles, independent of the library's stride machinery ----

/// Row-major flat index from digits; local reimplementation on purpose.
inline int oracle_flat(const std::vector<int>& dims, const std::vector<int>& digits) {
  int flat = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    flat = flat * dims[i] + digits[i];
  }
  return flat;
}

inline std::vector<int> oracle_digits(const std::vector<int>& dims, int flat) {
  std::vector<int> digits(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    digits[i] = flat % dims[i];
    flat /= dims[i];
  }
  return digits;
}

/// Kronecker product of two vectors by definition.
inline Eigen::VectorXcd oracle_kron(const Eigen::VectorXcd& a,
                                    const Eigen::VectorXcd& b) {
  Eigen::VectorXcd out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    for (Eigen::Index j = 0; j < b.size(); ++j) {
      out(i * b.size() + j) = a(i) * b(j);
    }
  }
  return out;
}

/// Unnormalized remainder of projecting `targets` of `state` onto
/// `projector`, computed with plain digit loops.  The remainder runs over
/// the non-target subsystems in their original order.
inline Eigen::VectorXcd oracle_project_unnormalized(
    const Eigen::VectorXcd& state, const std::vector<int>& dims,
    const Eigen::VectorXcd& projector, const std::vector<int>& proj_dims,
    const std::vector<int>& targets) {
  std::vector<int> rest;
  std::vector<int> rest_dims;
  for (int i = 0; i < static_cast<int>(dims.size()); ++i) {
    bool is_target = false;
    for (int t : targets) is_target = is_target || (t == i);
    if (!is_target) {
      rest.push_back(i);
      rest_dims.push_back(dims[i]);
    }
  }
  const int rest_total = std::accumulate(rest_dims.begin(), rest_dims.end(), 1,
                                         std::multiplies<int>());
  const int proj_total = std::accumulate(proj_dims.begin(), proj_dims.end(), 1,
                                         std::multiplies<int>());
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(std::max(rest_total, 1));
  for (int r = 0; r < std::max(rest_total, 1); ++r) {
    const std::vector<int> rest_digits =
        rest_dims.empty() ? std::vector<int>{} : oracle_digits(rest_dims, r);
    Complex acc = 0.0;
    for (int m = 0; m < proj_total; ++m) {
      const std::vector<int> target_digits = oracle_digits(proj_dims, m);
      std::vector<int> full(dims.size(), 0);
      for (std::size_t k = 0; k < rest.size(); ++k) full[rest[k]] = rest_digits[k];
      for (std::size_t k = 0; k < targets.size(); ++k) {
        full[targets[k]] = target_digits[k];
      }
      acc += std::conj(projector(m)) * state(oracle_flat(dims, full));
    }
    out(r) = acc;
  }
  return out;
}

}  // namespace hdsim::testing
