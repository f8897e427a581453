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
#include "kerrmzi/analytics.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "kerrmzi/error.h"

namespace kerrmzi {

namespace {

constexpr double kClampTolerance = 1e-9;
constexpr double kSingularThreshold = 1e-15;

}  // namespace

double visibility(double chi) {
    return std::cos(chi / 2);
}

double geometric_phase(double chi) {
    return chi / 2;
}

StandardProbs standard_probs_B(double vartheta, double chi) {
    const double v = visibility(chi);
    const double g = geometric_phase(chi);
    const double c = v * std::cos(vartheta - g);
    return {0.5 * (1 - c), 0.5 * (1 + c), v, g};
}

StandardProbs standard_probs_A(double phi, double chi) {
    const double v = visibility(chi);
    const double g = geometric_phase(chi);
    const double c = v * std::cos(phi - g);
    return {0.5 * (1 + c), 0.5 * (1 - c), v, g};
}

PortProbabilities conditional_probs_A(double vartheta, double chi) {
    const double g = geometric_phase(chi);
    const double denom = 2 + 2 * visibility(chi) * std::cos(vartheta - g);
    if (!(denom > kSingularThreshold)) {
        throw Error(ErrorCode::DegenerateConditional, "conditional probability is 0/0 at this configuration");
    }
    const double s = std::sin(g);
    const double p_y = s * s / denom;
    return {1 - p_y, p_y};
}

double clamped_arccos(double x) {
    if (!(std::abs(x) <= 1 + kClampTolerance)) {
        throw Error(ErrorCode::NumericalInconsistency, "arccos argument " + std::to_string(x) + " outside [-1, 1]");
    }
    return std::acos(std::clamp(x, -1.0, 1.0));
}

double inferred_phase(const CircuitParams &p) {
    const ConditionalState c = postselect(evolve(p), Interferometer::B, Arm::Y);
    // Ratio of the squared amplitudes rather than P_x - P_y: an exactly dark
    // port then gives exactly +-1, where arccos is infinitely steep.
    const double nx = std::norm(c.amps[0]);
    const double ny = std::norm(c.amps[1]);
    return clamped_arccos((nx - ny) / (nx + ny));
}

WeakValue weak_value(double vartheta) {
    const std::complex<double> denom = 1.0 + std::polar(1.0, vartheta);
    if (!(std::abs(denom) > kSingularThreshold)) {
        throw Error(ErrorCode::WeakValueDivergence, "weak value diverges at vartheta = pi");
    }
    return {1.0 / denom};
}

double naive_postselection_prob(double vartheta) {
    return 0.5 * (1 + std::cos(vartheta));
}

JointState purified_state(double chi) {
    using namespace std::complex_literals;
    const std::complex<double> global = -std::polar(1.0, 0.75 * chi);
    JointState::Amplitudes amps{};
    amps[basis_index(Arm::X, Arm::X)] = global * std::cos(chi / 4);
    amps[basis_index(Arm::Y, Arm::Y)] = global * (-1i * std::sin(chi / 4));
    return JointState::from_amplitudes(amps, Stage::Final);
}

}  // namespace kerrmzi
