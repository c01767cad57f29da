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

#include <catch2/catch_amalgamated.hpp>

#include "hdsim/photonics/pipeline.hpp"
#include "hdsim/teleport/protocol.hpp"
#include "test_helpers.hpp"

using namespace hdsim;
using namespace hdsim::photonics;
using Catch::Approx;

TEST_CASE("encoding maps fix the photon basis labels") {
  const EncodingMap qubit = EncodingMap::qubit("a1");
  REQUIRE(qubit.logical_dim == 2);
  REQUIRE(qubit.basis_labels == std::vector<std::string>{"H", "V"});

  const EncodingMap ququart = EncodingMap::ququart("b");
  REQUIRE(ququart.logical_dim == 4);
  REQUIRE(ququart.basis_labels == std::vector<std::string>{"Hu", "Hl", "Vu", "Vl"});

  // Ququart index = 2*pol + path, matching the label order above.
  REQUIRE(ququart_index(0, 0) == 0);
  REQUIRE(ququart_index(0, 1) == 1);
  REQUIRE(ququart_index(1, 0) == 2);
  REQUIRE(ququart_index(1, 1) == 3);
}

TEST_CASE("half waveplate Jones matrix") {
  SECTION("theta = 0 is diag(1, -1)") {
    const Eigen::MatrixXcd m = hwp(0.0).matrix();
    REQUIRE(std::abs(m(0, 0) - Complex(1, 0)) < 1e-15);
    REQUIRE(std::abs(m(1, 1) - Complex(-1, 0)) < 1e-15);
    REQUIRE(std::abs(m(0, 1)) < 1e-15);
  }
  SECTION("theta = pi/8 sends H to the diagonal state") {
    const Eigen::VectorXcd out = hwp(kPi / 8).matrix().col(0);
    const double s = 1.0 / std::sqrt(2.0);
    REQUIRE(std::abs(out(0) - Complex(s, 0)) < 1e-12);
    REQUIRE(std::abs(out(1) - Complex(s, 0)) < 1e-12);
  }
  SECTION("theta = pi/4 swaps H and V") {
    const Eigen::MatrixXcd m = hwp(kPi / 4).matrix();
    REQUIRE(std::abs(m(1, 0) - Complex(1, 0)) < 1e-12);
    REQUIRE(std::abs(m(0, 1) - Complex(1, 0)) < 1e-12);
  }
}

TEST_CASE("quarter waveplate Jones matrix") {
  SECTION("theta = 0 is diag(1, i)") {
    const Eigen::MatrixXcd m = qwp(0.0).matrix();
    REQUIRE(std::abs(m(0, 0) - Complex(1, 0)) < 1e-15);
    REQUIRE(std::abs(m(1, 1) - Complex(0, 1)) < 1e-15);
  }
  SECTION("theta = pi/4 turns H circular") {
    const Eigen::VectorXcd out = qwp(kPi / 4).matrix().col(0);
    REQUIRE(std::norm(out(0)) == Approx(0.5).margin(1e-12));
  }
  SECTION("a QWP aligned with the incoming linear polarization is a no-op") {
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Vector2cd diag_state(s, s);
    REQUIRE((qwp(kPi / 4).matrix() * diag_state - diag_state).cwiseAbs().maxCoeff() <
            1e-12);
    Eigen::Vector2cd vert(0.0, 1.0);
    REQUIRE((qwp(kPi / 2).matrix() * vert - vert).cwiseAbs().maxCoeff() < 1e-12);
  }
  SECTION("unitarity over random angles") {
    rng::Engine engine(99);
    for (int i = 0; i < 100; ++i) {
      const double theta = (engine.uniform() - 0.5) * 8.0;
      REQUIRE_NOTHROW(qwp(theta));  // constructor asserts unitarity
      REQUIRE_NOTHROW(hwp(theta));
    }
  }
}

TEST_CASE("dof_converter_expand moves polarization onto the path") {
  SECTION("|H> -> |H,u> and |V> -> |H,l>") {
    const PureState h = dof_converter_expand(basis_ket(DimRegister({2}), {0}));
    REQUIRE(std::abs(h.amp(std::vector<int>{0, 0}) - Complex(1, 0)) < 1e-15);
    const PureState v = dof_converter_expand(basis_ket(DimRegister({2}), {1}));
    REQUIRE(std::abs(v.amp(std::vector<int>{0, 1}) - Complex(1, 0)) < 1e-15);
  }

  SECTION("isometry: norms preserved, declared inverse recovers the input") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const PureState in = testing::random_pure_state(DimRegister({2}), 700 + seed);
      const PureState expanded = dof_converter_expand(in);
      REQUIRE(std::abs(expanded.norm() - in.norm()) < 1e-12);
      const PureState back = dof_converter_contract(expanded);
      REQUIRE(approx_equal(in, back, 1e-12));
    }
  }

  SECTION("expanding both qubit photons of the prepared state") {
    const PreparationResult prep = simulate_preparation();
    PureState expanded = dof_expand_subsystem(prep.physical_state, 0);
    expanded = dof_expand_subsystem(expanded, 2);
    REQUIRE(expanded.reg().dims() == std::vector<int>{2, 2, 2, 2, 2, 2});
    // Every branch ends with both photons horizontally polarized, their old
    // polarization moved onto the paths: amplitude 1/2 at (0,x,0,y,x,y).
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        REQUIRE(std::abs(expanded.amp(std::vector<int>{0, x, 0, y, x, y}) -
                         Complex(0.5, 0)) < 1e-12);
      }
    }
  }
}

TEST_CASE("ppbs_cnot applies the truth table and reports its success scalar") {
  SECTION("|V>|H> -> |V>|V>") {
    const PureState in = basis_ket(DimRegister({2, 2}), {1, 0});
    const GateRecord rec = ppbs_cnot(in, 0, 1);
    REQUIRE(std::abs(rec.state.amp(std::vector<int>{1, 1}) - Complex(1, 0)) < 1e-15);
    REQUIRE(rec.success_prob == Approx(1.0 / 9.0));
  }
  SECTION("|H>|H> unchanged") {
    const PureState in = basis_ket(DimRegister({2, 2}), {0, 0});
    const GateRecord rec = ppbs_cnot(in, 0, 1);
    REQUIRE(std::abs(rec.state.amp(0) - Complex(1, 0)) < 1e-15);
  }
  SECTION("two sequential gates multiply the pipeline accumulator to (1/9)^2") {
    SetupPipeline pipeline(basis_ket(DimRegister({2, 2, 2}), {1, 0, 0}));
    pipeline.apply(PpbsCnot{0, 1});
    pipeline.apply(PpbsCnot{1, 2});
    REQUIRE(pipeline.success_probability() == (1.0 / 9.0) * (1.0 / 9.0));
  }
  SECTION("non-qubit target is rejected") {
    const PureState in = testing::random_pure_state(DimRegister({2, 4}), 5);
    REQUIRE_THROWS_AS(ppbs_cnot(in, 0, 1), std::invalid_argument);
  }
}

TEST_CASE("prepare_input_qubits composes HWP then QWP on each photon") {
  const double s = 1.0 / std::sqrt(2.0);

  SECTION("diagonal ⊗ vertical") {
    const PureState state = prepare_input_qubits(kInputDiagV);
    Eigen::Vector4cd expected(0.0, s, 0.0, s);
    REQUIRE((state.amps() - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
  SECTION("diagonal ⊗ diagonal") {
    const PureState state = prepare_input_qubits(kInputDiagDiag);
    Eigen::Vector4cd expected(0.5, 0.5, 0.5, 0.5);
    REQUIRE((state.amps() - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
  SECTION("diagonal ⊗ circular") {
    const PureState state = prepare_input_qubits(kInputDiagCirc);
    Eigen::Vector4cd expected(Complex(0.5, 0), Complex(0, 0.5), Complex(0.5, 0),
                              Complex(0, 0.5));
    REQUIRE((state.amps() - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
  SECTION("waveplates act in HWP -> QWP order") {
    // QWP(0)·HWP(pi/8)|H> = (1, i)/√2; the reverse order would stay real.
    const PureState state = prepare_input_qubits(kPi / 8, 0.0, 0.0, 0.0);
    REQUIRE(std::abs(state.amp(std::vector<int>{1, 0}) - Complex(0, s)) < 1e-12);
  }
}

TEST_CASE("bell_projection_pol_path") {
  SECTION("the target state projects with probability 1") {
    const Projection p = bell_projection_pol_path(pol_path_bell_target(), 0, 1);
    REQUIRE(p.probability == Approx(1.0).margin(1e-12));
  }
  SECTION("|H,l> is orthogonal") {
    const Projection p =
        bell_projection_pol_path(basis_ket(DimRegister({2, 2}), {0, 1}), 0, 1);
    REQUIRE(p.probability == Approx(0.0).margin(1e-15));
    REQUIRE(p.dead_branch());
  }
}

TEST_CASE("simulate_preparation builds the qubit-pair/ququart resource") {
  const PreparationResult prep = simulate_preparation();
  const PureState ideal = teleport::make_224_state();

  SECTION("output matches the ideal state up to global phase") {
    REQUIRE(approx_equal_up_to_phase(prep.state, ideal, 1e-10));
    REQUIRE(overlap_fidelity(prep.state, ideal) == Approx(1.0).margin(1e-10));
  }

  SECTION("physical four-qubit form carries amplitude 1/2 at (x, y, x, y)") {
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        REQUIRE(std::abs(prep.physical_state.amp(std::vector<int>{x, y, x, y}) -
                         Complex(0.5, 0)) < 1e-10);
      }
    }
  }

  SECTION("the ququart alone is maximally mixed") {
    const MixedState rho = MixedState::from_pure(prep.state);
    const MixedState reduced = partial_trace(rho, {2});
    REQUIRE((reduced.matrix() - 0.25 * Eigen::MatrixXcd::Identity(4, 4))
                .cwiseAbs()
                .maxCoeff() < 1e-10);
  }

  SECTION("success probability is the declared product") {
    // Two gate factors exactly, times the computed trigger projection (1/2
    // up to rounding).
    const double manual = (1.0 / 9.0) * (1.0 / 9.0) * 0.5;
    REQUIRE(prep.success_probability == Approx(manual).margin(1e-15));
  }
}

TEST_CASE("postselect_coincidence") {
  const PureState state = testing::random_pure_state(DimRegister({2, 2, 2}), 44);

  SECTION("empty pattern is the full space") {
    const Projection p = postselect_coincidence(state, DetectionPattern{});
    REQUIRE(p.probability == Approx(1.0));
    REQUIRE(p.remainder.has_value());
    REQUIRE(approx_equal(*p.remainder, state, 0.0));
  }

  SECTION("a two-term pattern matches the composed projection") {
    DetectionPattern pattern;
    pattern.terms.push_back({basis_ket(DimRegister({2}), {0}), {0}});
    pattern.terms.push_back({basis_ket(DimRegister({2}), {1}), {2}});
    const Projection combined = postselect_coincidence(state, pattern);

    const Projection first = project(state, basis_ket(DimRegister({2}), {0}), {0});
    REQUIRE(first.remainder.has_value());
    const Projection second =
        project(*first.remainder, basis_ket(DimRegister({2}), {1}), {1});
    REQUIRE(combined.probability ==
            Approx(first.probability * second.probability).margin(1e-12));
    REQUIRE(second.remainder.has_value());
    REQUIRE(combined.remainder.has_value());
    REQUIRE(approx_equal(*combined.remainder, *second.remainder, 1e-12));
  }

  SECTION("orthogonal pattern reports a dead branch") {
    const PureState zero = basis_ket(DimRegister({2, 2}), {0, 0});
    DetectionPattern pattern;
    pattern.terms.push_back({basis_ket(DimRegister({2}), {1}), {0}});
    const Projection p = postselect_coincidence(zero, pattern);
    REQUIRE(p.probability == Approx(0.0).margin(1e-15));
    REQUIRE(p.dead_branch());
  }
}

TEST_CASE("postselected teleportation bench reproduces the waveplate input on b") {
  const std::array<WaveplateAngles, 3> presets = {kInputDiagV, kInputDiagDiag,
                                                  kInputDiagCirc};
  for (const WaveplateAngles& angles : presets) {
    const PureState expected = prepare_input_qubits(angles);
    const TeleportPipelineResult result = simulate_postselected_teleport(angles);
    REQUIRE((result.output.amps() - expected.amps()).cwiseAbs().maxCoeff() < 1e-10);
    REQUIRE(result.projection_probability == Approx(1.0 / 16.0).margin(1e-10));
  }

  SECTION("both single projections carry probability 1/4") {
    const PreparationResult prep = simulate_preparation();
    PureState state = dof_expand_subsystem(prep.physical_state, 0);
    state = dof_expand_subsystem(state, 2);
    state = apply_unitary(state, hwp(kInputDiagV.hwp1), {0});
    state = apply_unitary(state, qwp(kInputDiagV.qwp1), {0});
    state = apply_unitary(state, hwp(kInputDiagV.hwp2), {2});
    state = apply_unitary(state, qwp(kInputDiagV.qwp2), {2});
    const Projection first = bell_projection_pol_path(state, 0, 1);
    REQUIRE(first.probability == Approx(0.25).margin(1e-10));
    REQUIRE(first.remainder.has_value());
    const Projection second = bell_projection_pol_path(*first.remainder, 0, 1);
    REQUIRE(second.probability == Approx(0.25).margin(1e-10));
  }
}
