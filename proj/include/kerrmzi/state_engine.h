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

// Exact two-photon state evolution through a pair of Mach-Zehnder
// interferometers (A and B) whose probe arms are coupled by a cross-Kerr
// medium. Each photon is a qubit over its path {x, y}; the joint state lives
// on the ordered basis
//
//     0: |x>_A|x>_B   1: |x>_A|y>_B   2: |y>_A|x>_B   3: |y>_A|y>_B
//
// All operations are pure functions on immutable values.

#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace kerrmzi {

using Amplitude = std::complex<double>;

enum class Interferometer { A, B };

/// Path inside an interferometer, or output port after the second splitter.
enum class Arm { X, Y };

enum class Stage { Initial, Intermediate, Final };

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kPostselectionThreshold = 1e-15;

/// The three angles (radians) that specify one experiment configuration.
struct CircuitParams {
    double phi = 0.0;       ///< phase on arm y of A
    double vartheta = 0.0;  ///< phase on arm x of B
    double chi = 0.0;       ///< cross-Kerr phase (kappa * t)

    bool is_finite() const;

    /// chi outside [0, pi]. Accepted everywhere (all formulas are periodic)
    /// but reported to the user.
    bool chi_outside_regime() const;

    /// phi = chi/2, vartheta = pi + chi/2: the out-of-phase postselection point.
    static CircuitParams out_of_phase(double chi);
};

constexpr std::size_t basis_index(Arm a, Arm b) {
    return 2 * static_cast<std::size_t>(a) + static_cast<std::size_t>(b);
}

class JointState {
  public:
    using Amplitudes = std::array<Amplitude, 4>;

    /// Wraps raw amplitudes, e.g. a closed-form reference state. Every
    /// interferometer is marked as having passed the number of splitters
    /// implied by the stage. Throws InvalidArgument on non-finite input.
    static JointState from_amplitudes(const Amplitudes &amps, Stage stage);

    const Amplitudes &amplitudes() const {
        return amps_;
    }
    Amplitude amplitude(Arm a, Arm b) const {
        return amps_[basis_index(a, b)];
    }
    Stage stage() const;
    int splitters_passed(Interferometer which) const {
        return splitters_[static_cast<std::size_t>(which)];
    }
    double norm_squared() const;

  private:
    JointState(const Amplitudes &amps, std::array<int, 2> splitters) : amps_(amps), splitters_(splitters) {
    }

    Amplitudes amps_{};
    std::array<int, 2> splitters_{};

    friend JointState make_input_state();
    friend JointState apply_beam_splitter(const JointState &, Interferometer);
    friend JointState apply_phase_shift(const JointState &, Interferometer, Arm, double);
    friend JointState apply_kerr(const JointState &, double);
};

struct PortProbabilities {
    double x = 0.0;
    double y = 0.0;
};

/// State of the unmeasured photon after projecting the other interferometer
/// onto one output port.
struct ConditionalState {
    std::array<Amplitude, 2> amps{};  ///< over {|x>, |y>} of the remaining photon
    double postselection_prob = 0.0;
    Interferometer postselected = Interferometer::B;
    Arm port = Arm::Y;

    PortProbabilities probabilities() const {
        return {std::norm(amps[0]), std::norm(amps[1])};
    }
};

/// |y>_A |x>_B, stage Initial.
JointState make_input_state();

/// Balanced splitter on one interferometer. The first splitter of an
/// interferometer takes it to the intermediate stage, the second to the
/// final stage; a third throws StageMismatch. Throws NotNormalized when the
/// input norm deviates from 1 by more than kNormTolerance.
JointState apply_beam_splitter(const JointState &s, Interferometer which);

/// Multiplies every component with photon \p which in \p arm by e^{i angle}.
/// Only between the two splitters of that interferometer.
JointState apply_phase_shift(const JointState &s, Interferometer which, Arm arm, double angle);

/// Cross-Kerr coupling: phase e^{+i chi} on the A-in-x, B-in-y component.
/// Both interferometers must be between their splitters.
JointState apply_kerr(const JointState &s, double chi);

/// input -> splitters -> phi on A arm y, vartheta on B arm x -> Kerr -> splitters.
JointState evolve(const CircuitParams &p);

std::array<double, 4> joint_probabilities(const JointState &s);

/// Detection probabilities of one interferometer's ports, tracing out the
/// other. Requires the final stage.
PortProbabilities marginal_probabilities(const JointState &s, Interferometer which);

/// Projects \p which onto \p port and renormalizes the other photon. Throws
/// ZeroProbabilityPostselection when the port probability is at or below
/// kPostselectionThreshold.
ConditionalState postselect(const JointState &s, Interferometer which, Arm port);

/// |<a|b>|, insensitive to global phase.
double fidelity(const JointState &a, const JointState &b);

/// Pure-state concurrence 2|a0 a3 - a1 a2|. Requires the final stage.
double concurrence(const JointState &s);

}  // namespace kerrmzi
