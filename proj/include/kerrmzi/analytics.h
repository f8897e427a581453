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

// Closed-form detection probabilities, conditional probabilities, inferred
// phase and weak-value comparator for the Kerr-coupled interferometer pair.
// These serve as the independent reference for the state engine.

#pragma once

#include <complex>

#include "kerrmzi/state_engine.h"

namespace kerrmzi {

struct StandardProbs {
    double p_x = 0.0;
    double p_y = 0.0;
    double visibility = 0.0;       ///< cos(chi/2)
    double geometric_phase = 0.0;  ///< chi/2
};

/// Interference visibility cos(chi/2).
double visibility(double chi);

/// Geometric phase chi/2 by which the fringes shift.
double geometric_phase(double chi);

/// Unconditioned ports of B: p_y = (1 + v cos(vartheta - theta_g)) / 2.
StandardProbs standard_probs_B(double vartheta, double chi);

/// Unconditioned ports of A: p_x = (1 + v cos(phi - theta_g)) / 2.
StandardProbs standard_probs_A(double phi, double chi);

/// Ports of A given a click at B's y port, closed form for phi = 0:
///   p_y = sin^2(theta_g) / (2 + 2 v cos(vartheta - theta_g)).
/// Throws DegenerateConditional when the denominator is <= 1e-15.
PortProbabilities conditional_probs_A(double vartheta, double chi);

/// arccos with a 1e-9 tolerance band: arguments within the band outside
/// [-1, 1] are clamped, anything further out throws NumericalInconsistency.
double clamped_arccos(double x);

/// Phase read off A's ports after postselecting B on y, at general phi,
/// obtained from the state engine. Propagates ZeroProbabilityPostselection.
double inferred_phase(const CircuitParams &p);

struct WeakValue {
    std::complex<double> value;

    /// Weak value of the reference-arm photon number, 1 - value.
    std::complex<double> reference_arm() const {
        return 1.0 - value;
    }
};

/// Weak value of B's probe-arm photon number, 1 / (1 + e^{i vartheta}).
/// Throws WeakValueDivergence when |1 + e^{i vartheta}| <= 1e-15.
WeakValue weak_value(double vartheta);

/// Interaction-free postselection probability (1 + cos vartheta) / 2.
double naive_postselection_prob(double vartheta);

/// -e^{i 3chi/4} [cos(chi/4)|x>|x> - i sin(chi/4)|y>|y>], stage Final.
JointState purified_state(double chi);

}  // namespace kerrmzi
