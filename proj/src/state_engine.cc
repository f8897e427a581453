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

#include <cmath>
#include <numbers>
#include <string>

#include "kerrmzi/error.h"

namespace kerrmzi {

namespace {

constexpr std::size_t index_of(Interferometer w) {
    return static_cast<std::size_t>(w);
}

const char *name_of(Interferometer w) {
    return w == Interferometer::A ? "A" : "B";
}

void require_finite(double v, const char *what) {
    if (!std::isfinite(v)) {
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be finite");
    }
}

void require_splitters(const JointState &s, Interferometer w, int expected, const char *op) {
    if (s.splitters_passed(w) != expected) {
        throw Error(
            ErrorCode::StageMismatch,
            std::string(op) + " needs interferometer " + name_of(w) + " after " + std::to_string(expected) +
                " splitter(s), it has passed " + std::to_string(s.splitters_passed(w)));
    }
}

void require_final(const JointState &s, const char *op) {
    require_splitters(s, Interferometer::A, 2, op);
    require_splitters(s, Interferometer::B, 2, op);
}

// Basis index of a component given which photon sits where.
std::size_t component(Interferometer w, Arm own, Arm other) {
    return w == Interferometer::A ? basis_index(own, other) : basis_index(other, own);
}

}  // namespace

bool CircuitParams::is_finite() const {
    return std::isfinite(phi) && std::isfinite(vartheta) && std::isfinite(chi);
}

bool CircuitParams::chi_outside_regime() const {
    return !(chi >= 0.0 && chi <= std::numbers::pi);
}

CircuitParams CircuitParams::out_of_phase(double chi) {
    return {chi / 2, std::numbers::pi + chi / 2, chi};
}

JointState JointState::from_amplitudes(const Amplitudes &amps, Stage stage) {
    for (const auto &a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw Error(ErrorCode::InvalidArgument, "amplitudes must be finite");
        }
    }
    int n = stage == Stage::Initial ? 0 : stage == Stage::Intermediate ? 1 : 2;
    return JointState(amps, {n, n});
}

Stage JointState::stage() const {
    if (splitters_[0] == 0 && splitters_[1] == 0) {
        return Stage::Initial;
    }
    if (splitters_[0] == 2 && splitters_[1] == 2) {
        return Stage::Final;
    }
    return Stage::Intermediate;
}

double JointState::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

JointState make_input_state() {
    JointState::Amplitudes amps{};
    amps[basis_index(Arm::Y, Arm::X)] = 1.0;
    return JointState(amps, {0, 0});
}

JointState apply_beam_splitter(const JointState &s, Interferometer which) {
    if (std::abs(s.norm_squared() - 1.0) > kNormTolerance) {
        throw Error(ErrorCode::NotNormalized, "beam splitter input has squared norm " + std::to_string(s.norm_squared()));
    }
    if (s.splitters_passed(which) >= 2) {
        throw Error(ErrorCode::StageMismatch, std::string("interferometer ") + name_of(which) + " has no third splitter");
    }

    // Amplitudes transform with the coefficients of the mode relations:
    // x' = (x - y)/sqrt2, y' = (x + y)/sqrt2, i.e. |x> -> (|x>+|y>)/sqrt2 and
    // |y> -> (-|x>+|y>)/sqrt2. This is the orientation that reproduces the
    // closed-form output amplitudes exactly (global factor -1).
    constexpr double r = std::numbers::sqrt2 / 2;
    JointState out = s;
    for (Arm other : {Arm::X, Arm::Y}) {
        const std::size_t ix = component(which, Arm::X, other);
        const std::size_t iy = component(which, Arm::Y, other);
        const Amplitude ax = s.amps_[ix];
        const Amplitude ay = s.amps_[iy];
        out.amps_[ix] = r * (ax - ay);
        out.amps_[iy] = r * (ax + ay);
    }
    ++out.splitters_[index_of(which)];
    return out;
}

JointState apply_phase_shift(const JointState &s, Interferometer which, Arm arm, double angle) {
    require_finite(angle, "phase shift angle");
    require_splitters(s, which, 1, "phase shift");
    const Amplitude phase = std::polar(1.0, angle);
    JointState out = s;
    for (Arm other : {Arm::X, Arm::Y}) {
        out.amps_[component(which, arm, other)] *= phase;
    }
    return out;
}

JointState apply_kerr(const JointState &s, double chi) {
    require_finite(chi, "chi");
    require_splitters(s, Interferometer::A, 1, "Kerr coupling");
    require_splitters(s, Interferometer::B, 1, "Kerr coupling");
    JointState out = s;
    out.amps_[basis_index(Arm::X, Arm::Y)] *= std::polar(1.0, chi);
    return out;
}

JointState evolve(const CircuitParams &p) {
    if (!p.is_finite()) {
        throw Error(ErrorCode::InvalidArgument, "circuit angles must be finite");
    }
    JointState s = make_input_state();
    s = apply_beam_splitter(s, Interferometer::A);
    s = apply_beam_splitter(s, Interferometer::B);
    s = apply_phase_shift(s, Interferometer::A, Arm::Y, p.phi);
    s = apply_phase_shift(s, Interferometer::B, Arm::X, p.vartheta);
    s = apply_kerr(s, p.chi);
    s = apply_beam_splitter(s, Interferometer::A);
    s = apply_beam_splitter(s, Interferometer::B);
    return s;
}

std::array<double, 4> joint_probabilities(const JointState &s) {
    std::array<double, 4> p{};
    for (std::size_t k = 0; k < 4; ++k) {
        p[k] = std::norm(s.amplitudes()[k]);
    }
    return p;
}

PortProbabilities marginal_probabilities(const JointState &s, Interferometer which) {
    require_final(s, "marginal probabilities");
    PortProbabilities out;
    for (Arm other : {Arm::X, Arm::Y}) {
        out.x += std::norm(s.amplitudes()[component(which, Arm::X, other)]);
        out.y += std::norm(s.amplitudes()[component(which, Arm::Y, other)]);
    }
    return out;
}

ConditionalState postselect(const JointState &s, Interferometer which, Arm port) {
    require_final(s, "postselection");
    const Interferometer remaining = which == Interferometer::A ? Interferometer::B : Interferometer::A;
    const Amplitude bx = s.amplitudes()[component(remaining, Arm::X, port)];
    const Amplitude by = s.amplitudes()[component(remaining, Arm::Y, port)];
    const double prob = std::norm(bx) + std::norm(by);
    if (!(prob > kPostselectionThreshold)) {
        throw Error(
            ErrorCode::ZeroProbabilityPostselection,
            std::string("port ") + (port == Arm::X ? "x" : "y") + " of " + name_of(which) +
                " has probability " + std::to_string(prob));
    }
    const double scale = 1.0 / std::sqrt(prob);
    return ConditionalState{{bx * scale, by * scale}, prob, which, port};
}

double fidelity(const JointState &a, const JointState &b) {
    Amplitude overlap = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        overlap += std::conj(a.amplitudes()[k]) * b.amplitudes()[k];
    }
    return std::abs(overlap);
}

double concurrence(const JointState &s) {
    require_final(s, "concurrence");
    const auto &a = s.amplitudes();
    return 2.0 * std::abs(a[0] * a[3] - a[1] * a[2]);
}

}  // namespace kerrmzi
