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

// Closed-form references used only by the tests. Written directly from the
// published formulas, independent of the library code paths.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "kerrmzi/state_engine.h"

namespace kerrmzi::testing {

using cd = std::complex<double>;

/// (alpha, beta, gamma, delta) of the output state, before the 1/4 factor.
inline std::array<cd, 4> output_coefficients(double phi, double vartheta, double chi) {
    const cd et = std::polar(1.0, vartheta);
    const cd ec = std::polar(1.0, chi);
    const cd etp = std::polar(1.0, vartheta + phi);
    const cd ep = std::polar(1.0, phi);
    return {et - ec + etp - ep, et + ec + etp + ep, et - ec - etp + ep, et + ec - etp - ep};
}

inline JointState closed_form_state(double phi, double vartheta, double chi) {
    const auto c = output_coefficients(phi, vartheta, chi);
    return JointState::from_amplitudes({c[0] / 4.0, c[1] / 4.0, c[2] / 4.0, c[3] / 4.0}, Stage::Final);
}

/// P_By = (1 + cos(chi/2) cos(vartheta - chi/2)) / 2.
inline double p_by(double vartheta, double chi) {
    return 0.5 * (1 + std::cos(chi / 2) * std::cos(vartheta - chi / 2));
}

/// P_Ax = (1 + cos(chi/2) cos(phi - chi/2)) / 2.
inline double p_ax(double phi, double chi) {
    return 0.5 * (1 + std::cos(chi / 2) * std::cos(phi - chi / 2));
}

/// Conditional P~_Ay at phi = 0.
inline double conditional_p_ay(double vartheta, double chi) {
    const double s = std::sin(chi / 2);
    return s * s / (2 + 2 * std::cos(chi / 2) * std::cos(vartheta - chi / 2));
}

/// {0, step, ..., 2 pi} with step = 2 pi / divisions.
inline std::vector<double> angle_grid(int divisions) {
    std::vector<double> g;
    for (int i = 0; i <= divisions; ++i) {
        g.push_back(2 * std::numbers::pi * i / divisions);
    }
    return g;
}

inline const std::vector<double> kChiGrid{0.0, 0.05, 0.1, 0.5, 1.0, std::numbers::pi / 2, std::numbers::pi};

}  // namespace kerrmzi::testing
