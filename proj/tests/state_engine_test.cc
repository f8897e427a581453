// Copyright 2026 The kerrmzi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "kerrmzi/state_engine.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "kerrmzi/error.h"
#include "test_oracles.h"

using namespace kerrmzi;
using kerrmzi::testing::cd;

namespace {

constexpr double kPi = std::numbers::pi;

void expect_amps_near(const JointState &s, const JointState::Amplitudes &ref, double tol) {
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_NEAR(s.amplitudes()[k].real(), ref[k].real(), tol) << "k=" << k << " (real)";
        EXPECT_NEAR(s.amplitudes()[k].imag(), ref[k].imag(), tol) << "k=" << k << " (imag)";
    }
}

template <typename F>
void expect_error(F &&f, ErrorCode code) {
    try {
        f();
        ADD_FAILURE() << "expected " << error_code_name(code);
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

JointState after_first_splitters() {
    return apply_beam_splitter(apply_beam_splitter(make_input_state(), Interferometer::A), Interferometer::B);
}

}  // namespace

TEST(InputState, IsYOnAXOnB) {
    const JointState s = make_input_state();
    expect_amps_near(s, {0, 0, 1, 0}, 0);
    EXPECT_EQ(s.stage(), Stage::Initial);
    EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
    const auto p = joint_probabilities(s);
    EXPECT_EQ(p, (std::array<double, 4>{0, 0, 1, 0}));
}

TEST(BeamSplitter, SplitsAPhotonWithFixedConvention) {
    const JointState s = apply_beam_splitter(make_input_state(), Interferometer::A);
    const double r = 1 / std::sqrt(2.0);
    // |y>_A -> (-|x>_A + |y>_A)/sqrt2, B untouched in x.
    expect_amps_near(s, {-r, 0, r, 0}, 1e-15);
    EXPECT_EQ(s.stage(), Stage::Intermediate);
    EXPECT_EQ(s.splitters_passed(Interferometer::A), 1);
    EXPECT_EQ(s.splitters_passed(Interferometer::B), 0);
}

TEST(BeamSplitter, PreservesNormAndAdvancesStage) {
    JointState s = after_first_splitters();
    EXPECT_EQ(s.stage(), Stage::Intermediate);
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
    s = apply_beam_splitter(apply_beam_splitter(s, Interferometer::A), Interferometer::B);
    EXPECT_EQ(s.stage(), Stage::Final);
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
}

TEST(BeamSplitter, TwiceIsAQuarterTurnNotIdentity) {
    // Two balanced splitters with no phase in between swap the paths.
    const JointState s = apply_beam_splitter(apply_beam_splitter(make_input_state(), Interferometer::A),
                                             Interferometer::A);
    EXPECT_NEAR(std::abs(s.amplitude(Arm::X, Arm::X)), 1.0, 1e-15);
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
}

TEST(BeamSplitter, RejectsThirdSplitter) {
    JointState s = make_input_state();
    s = apply_beam_splitter(s, Interferometer::B);
    s = apply_beam_splitter(s, Interferometer::B);
    expect_error([&] { apply_beam_splitter(s, Interferometer::B); }, ErrorCode::StageMismatch);
}

TEST(BeamSplitter, RejectsUnnormalizedInput) {
    const auto s = JointState::from_amplitudes({0, 0, 1.1, 0}, Stage::Initial);
    expect_error([&] { apply_beam_splitter(s, Interferometer::A); }, ErrorCode::NotNormalized);
}

TEST(PhaseShift, ZeroAngleIsExactIdentity) {
    const JointState s = after_first_splitters();
    const JointState t = apply_phase_shift(s, Interferometer::A, Arm::Y, 0.0);
    EXPECT_EQ(s.amplitudes(), t.amplitudes());
}

TEST(PhaseShift, FullTurnIsIdentity) {
    const JointState s = after_first_splitters();
    expect_amps_near(apply_phase_shift(s, Interferometer::B, Arm::X, 2 * kPi), s.amplitudes(), 1e-12);
}

TEST(PhaseShift, SingleComponentPhase) {
    const auto s = JointState::from_amplitudes({0, 0, 1, 0}, Stage::Intermediate);
    const double vartheta = 0.7;
    const JointState t = apply_phase_shift(s, Interferometer::B, Arm::X, vartheta);
    expect_amps_near(t, {0, 0, std::polar(1.0, vartheta), 0}, 1e-15);
}

TEST(PhaseShift, OnlyBetweenSplitters) {
    expect_error([] { apply_phase_shift(make_input_state(), Interferometer::A, Arm::Y, 0.1); },
                 ErrorCode::StageMismatch);
    const JointState final_state = evolve({});
    expect_error([&] { apply_phase_shift(final_state, Interferometer::B, Arm::X, 0.1); }, ErrorCode::StageMismatch);
}

TEST(Kerr, ZeroCouplingIsExactIdentity) {
    const JointState s = after_first_splitters();
    EXPECT_EQ(apply_kerr(s, 0.0).amplitudes(), s.amplitudes());
}

TEST(Kerr, PhaseOnlyOnAxBy) {
    const auto s = JointState::from_amplitudes({0, 1, 0, 0}, Stage::Intermediate);
    expect_amps_near(apply_kerr(s, kPi), {0, -1, 0, 0}, 1e-15);
}

TEST(Kerr, NeverChangesProbabilities) {
    const JointState s = apply_phase_shift(after_first_splitters(), Interferometer::A, Arm::Y, 0.3);
    for (double chi : {0.05, 0.5, 1.0, kPi, 5.0}) {
        const auto before = joint_probabilities(s);
        const auto after = joint_probabilities(apply_kerr(s, chi));
        for (std::size_t k = 0; k < 4; ++k) {
            EXPECT_NEAR(before[k], after[k], 1e-15);
        }
    }
}

TEST(Kerr, RequiresBothInterferometersOpen) {
    const JointState half = apply_beam_splitter(make_input_state(), Interferometer::A);
    expect_error([&] { apply_kerr(half, 0.1); }, ErrorCode::StageMismatch);
}

TEST(Evolve, NoPhasesGivesXOnAYOnB) {
    const JointState s = evolve({0, 0, 0});
    const auto ref = JointState::from_amplitudes({0, 1, 0, 0}, Stage::Final);
    EXPECT_NEAR(fidelity(s, ref), 1.0, 1e-12);
}

TEST(Evolve, PiCouplingSpreadsEvenly) {
    const auto p = joint_probabilities(evolve({0, 0, kPi}));
    for (double pk : p) {
        EXPECT_NEAR(pk, 0.25, 1e-12);
    }
}

TEST(Evolve, OutOfPhasePointIsNonMaximallyEntangled) {
    for (double chi : {0.05, 0.1, 1.0, 2.0, 3.0}) {
        const JointState s = evolve(CircuitParams::out_of_phase(chi));
        const auto ref = JointState::from_amplitudes(
            {std::cos(chi / 4), 0, 0, cd(0, -std::sin(chi / 4))}, Stage::Final);
        EXPECT_NEAR(fidelity(s, ref), 1.0, 1e-9) << "chi=" << chi;
    }
}

TEST(Evolve, RejectsNonFiniteAngles) {
    expect_error([] { evolve({0, NAN, 0}); }, ErrorCode::InvalidArgument);
}

TEST(Marginals, BNearlyBrightAtGeometricPhase) {
    const double chi = 0.1;
    const auto m = marginal_probabilities(evolve({0, chi / 2, chi}), Interferometer::B);
    EXPECT_NEAR(m.y, 0.5 * (1 + std::cos(0.05)), 1e-12);
    EXPECT_NEAR(m.y, 0.999375130197483, 1e-12);
}

TEST(Marginals, AWithoutCouplingFollowsPhi) {
    for (double phi : {0.0, 0.4, 1.9, 3.3}) {
        const auto m = marginal_probabilities(evolve({phi, 1.2, 0.0}), Interferometer::A);
        EXPECT_NEAR(m.x, 0.5 * (1 + std::cos(phi)), 1e-12);
    }
}

TEST(Marginals, NoInterferenceAtPiCoupling) {
    const auto m = marginal_probabilities(evolve({0, 0, kPi}), Interferometer::A);
    EXPECT_NEAR(m.x, 0.5, 1e-12);
    EXPECT_NEAR(m.y, 0.5, 1e-12);
}

TEST(Marginals, RequireFinalStage) {
    expect_error([] { marginal_probabilities(after_first_splitters(), Interferometer::A); },
                 ErrorCode::StageMismatch);
}

TEST(Postselect, OutOfPhaseSwitchesAToY) {
    const double chi = 0.1;
    const ConditionalState c = postselect(evolve(CircuitParams::out_of_phase(chi)), Interferometer::B, Arm::Y);
    EXPECT_NEAR(std::norm(c.amps[1]), 1.0, 1e-9);
    EXPECT_NEAR(c.postselection_prob, std::pow(std::sin(0.025), 2), 1e-15);
    EXPECT_NEAR(c.postselection_prob, 6.24869802516877e-4, 1e-15);
    EXPECT_EQ(c.postselected, Interferometer::B);
    EXPECT_EQ(c.port, Arm::Y);
}

TEST(Postselect, CertainPort) {
    const ConditionalState c = postselect(evolve({0, 0, 0}), Interferometer::B, Arm::Y);
    EXPECT_NEAR(std::norm(c.amps[0]), 1.0, 1e-12);
    EXPECT_NEAR(c.postselection_prob, 1.0, 1e-12);
}

TEST(Postselect, DarkPortIsAnError) {
    expect_error([] { postselect(evolve({0, 0, 0}), Interferometer::B, Arm::X); },
                 ErrorCode::ZeroProbabilityPostselection);
    // 0/0 point: no coupling, phi = 0, detuning pi.
    expect_error([] { postselect(evolve({0, kPi, 0}), Interferometer::B, Arm::Y); },
                 ErrorCode::ZeroProbabilityPostselection);
}

TEST(Postselect, ProbabilityMatchesMarginalAndStateIsNormalized) {
    for (double phi : {0.0, 0.8, 2.5}) {
        for (double vt : {0.3, 1.7, 4.0}) {
            for (double chi : {0.1, 1.0, 3.0}) {
                const JointState s = evolve({phi, vt, chi});
                for (Interferometer w : {Interferometer::A, Interferometer::B}) {
                    const auto m = marginal_probabilities(s, w);
                    for (Arm port : {Arm::X, Arm::Y}) {
                        const ConditionalState c = postselect(s, w, port);
                        EXPECT_NEAR(c.postselection_prob, port == Arm::X ? m.x : m.y, 1e-12);
                        const auto p = c.probabilities();
                        EXPECT_NEAR(p.x + p.y, 1.0, 1e-12);
                    }
                }
            }
        }
    }
}

TEST(Fidelity, GlobalPhaseInvariantAndOrthogonality) {
    const JointState s = evolve({0.3, 1.1, 0.7});
    EXPECT_NEAR(fidelity(s, s), 1.0, 1e-12);
    const cd g = std::polar(1.0, kPi / 3);
    JointState::Amplitudes rotated = s.amplitudes();
    for (auto &a : rotated) {
        a *= g;
    }
    EXPECT_NEAR(fidelity(s, JointState::from_amplitudes(rotated, Stage::Final)), 1.0, 1e-12);

    const auto xx = JointState::from_amplitudes({1, 0, 0, 0}, Stage::Final);
    const auto yy = JointState::from_amplitudes({0, 0, 0, 1}, Stage::Final);
    EXPECT_EQ(fidelity(xx, yy), 0.0);
}

TEST(Concurrence, ReferencePoints) {
    EXPECT_NEAR(concurrence(evolve(CircuitParams::out_of_phase(kPi))), 1.0, 1e-12);
    EXPECT_NEAR(concurrence(evolve(CircuitParams::out_of_phase(1e-9))), 0.0, 1e-9);
    EXPECT_NEAR(concurrence(evolve(CircuitParams::out_of_phase(0.1))), std::sin(0.05), 1e-12);
    EXPECT_NEAR(concurrence(evolve(CircuitParams::out_of_phase(0.1))), 0.0499791692706783, 1e-12);
}

TEST(CircuitParams, RegimeFlag) {
    EXPECT_FALSE((CircuitParams{0, 0, 0}).chi_outside_regime());
    EXPECT_FALSE((CircuitParams{0, 0, kPi}).chi_outside_regime());
    EXPECT_TRUE((CircuitParams{0, 0, 4.0}).chi_outside_regime());
    EXPECT_TRUE((CircuitParams{0, 0, -0.1}).chi_outside_regime());
    // Outside the regime the engine still evolves unitarily.
    EXPECT_NEAR(evolve({0, 0, 4.0}).norm_squared(), 1.0, 1e-12);
}

// Grid properties over phi, vartheta in {0, pi/50, ..., 2 pi} and the chi grid.
class GridProperties : public ::testing::Test {
  protected:
    const std::vector<double> angles = kerrmzi::testing::angle_grid(100);
};

TEST_F(GridProperties, UnitaryAndMatchesClosedForm) {
    double worst_norm = 0, worst_fid = 0, worst_prob = 0, worst_coeff = 0;
    for (double chi : kerrmzi::testing::kChiGrid) {
        for (double phi : angles) {
            for (double vt : angles) {
                const JointState s = evolve({phi, vt, chi});
                const auto coeffs = kerrmzi::testing::output_coefficients(phi, vt, chi);
                double total = 0;
                for (const auto &c : coeffs) {
                    total += std::norm(c);
                }
                worst_coeff = std::max(worst_coeff, std::abs(total - 16.0));
                worst_norm = std::max(worst_norm, std::abs(s.norm_squared() - 1.0));
                worst_fid = std::max(
                    worst_fid, std::abs(1.0 - fidelity(s, kerrmzi::testing::closed_form_state(phi, vt, chi))));
                const auto p = joint_probabilities(s);
                for (std::size_t k = 0; k < 4; ++k) {
                    worst_prob = std::max(worst_prob, std::abs(p[k] - std::norm(coeffs[k]) / 16.0));
                }
            }
        }
    }
    EXPECT_LT(worst_norm, 1e-12);
    EXPECT_LT(worst_coeff, 1e-9);
    EXPECT_LT(worst_fid, 1e-9);
    EXPECT_LT(worst_prob, 1e-12);
}

TEST_F(GridProperties, MarginalsMatchStandardFormulasAndAreLocal) {
    double worst_b = 0, worst_a = 0;
    for (double chi : kerrmzi::testing::kChiGrid) {
        for (double phi : angles) {
            for (double vt : angles) {
                const JointState s = evolve({phi, vt, chi});
                const auto b = marginal_probabilities(s, Interferometer::B);
                const auto a = marginal_probabilities(s, Interferometer::A);
                worst_b = std::max({worst_b, std::abs(b.y - kerrmzi::testing::p_by(vt, chi)),
                                    std::abs(b.x + b.y - 1.0)});
                worst_a = std::max({worst_a, std::abs(a.x - kerrmzi::testing::p_ax(phi, chi)),
                                    std::abs(a.x + a.y - 1.0)});
            }
        }
    }
    EXPECT_LT(worst_b, 1e-12);
    EXPECT_LT(worst_a, 1e-12);
}

TEST_F(GridProperties, EachMarginalIgnoresTheOtherPhase) {
    double worst = 0;
    for (double chi : kerrmzi::testing::kChiGrid) {
        for (double fixed : angles) {
            const auto a0 = marginal_probabilities(evolve({fixed, 0.0, chi}), Interferometer::A);
            const auto b0 = marginal_probabilities(evolve({0.0, fixed, chi}), Interferometer::B);
            for (double other : angles) {
                const auto a = marginal_probabilities(evolve({fixed, other, chi}), Interferometer::A);
                const auto b = marginal_probabilities(evolve({other, fixed, chi}), Interferometer::B);
                worst = std::max({worst, std::abs(a.x - a0.x), std::abs(b.y - b0.y)});
            }
        }
    }
    EXPECT_LT(worst, 1e-12);
}

TEST_F(GridProperties, PostselectedAMatchesConditionalFormula) {
    double worst = 0;
    int checked = 0;
    for (double chi : kerrmzi::testing::kChiGrid) {
        for (double vt : angles) {
            const JointState s = evolve({0.0, vt, chi});
            if (!(marginal_probabilities(s, Interferometer::B).y > 1e-12)) {
                continue;
            }
            const auto c = postselect(s, Interferometer::B, Arm::Y).probabilities();
            worst = std::max(worst, std::abs(c.y - kerrmzi::testing::conditional_p_ay(vt, chi)));
            ++checked;
        }
    }
    EXPECT_GT(checked, 600);
    EXPECT_LT(worst, 1e-12);
}

TEST(ConcurrenceProperty, EqualsSinHalfChiAtOutOfPhasePoint) {
    for (int i = 1; i <= 200; ++i) {
        const double chi = kPi * i / 200;
        EXPECT_NEAR(concurrence(evolve(CircuitParams::out_of_phase(chi))), std::sin(chi / 2), 1e-9) << chi;
    }
}
