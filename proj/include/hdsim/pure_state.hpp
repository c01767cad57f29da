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
#include <initializer_list>
#include <span>

#include <Eigen/Dense>

#include "hdsim/dim_register.hpp"

namespace hdsim {

using Complex = std::complex<double>;

/// Norm tolerance accepted at state construction.  Internal arithmetic keeps
/// full double precision; this only separates user error from float drift.
inline constexpr double kNormTolerance = 1e-10;

/// Normalized state vector over a dimension register.
///
/// Values are immutable after construction; all operations on them are pure
/// functions, so states can be shared freely across threads.
class PureState {
 public:
  /// Requires |norm - 1| <= kNormTolerance.  Use ket_from_amplitudes to
  /// normalize arbitrary non-zero vectors.
  PureState(DimRegister reg, Eigen::VectorXcd amps);

  const DimRegister& reg() const { return reg_; }
  const Eigen::VectorXcd& amps() const { return amps_; }
  int total_dim() const { return reg_.total_dim(); }

  Complex amp(int flat) const { return amps_(flat); }
  Complex amp(std::span<const int> digits) const {
    return amps_(reg_.flat_index(digits));
  }

  double norm() const { return amps_.norm(); }

 private:
  DimRegister reg_;
  Eigen::VectorXcd amps_;
};

/// Result of normalizing a raw amplitude vector.
struct NormalizedKet {
  PureState state;
  /// Factor the input was multiplied by (1 / original norm).
  double scale;
};

/// Normalizes amps into a PureState, recording the scale factor applied.
/// Throws on length mismatch or an (effectively) zero vector.
NormalizedKet ket_from_amplitudes(const Eigen::VectorXcd& amps, DimRegister reg);

/// Computational basis state |digits> of the given register.
PureState basis_ket(DimRegister reg, std::initializer_list<int> digits);

/// Elementwise equality within tol.
bool approx_equal(const PureState& a, const PureState& b, double tol = 1e-12);

/// Equality after removing one global phase.  Global phase is never
/// normalized away automatically; callers pick exact or phase-free testing.
bool approx_equal_up_to_phase(const PureState& a, const PureState& b,
                              double tol = 1e-12);

/// |<a|b>|^2 for two pure states over matching dims.
double overlap_fidelity(const PureState& a, const PureState& b);

}  // namespace hdsim
