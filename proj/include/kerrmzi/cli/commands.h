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

// The three command-line operations as library calls: figure-data sweeps,
// Monte-Carlo experiment runs and the rate-based estimation report. Each
// render_* function is pure and returns the exact bytes the CLI writes.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kerrmzi/state_engine.h"

namespace kerrmzi::cli {

enum class SweepQuantity { ConditionalProb, InferredPhase, Snr, StandardProbs, WeakValue, Fisher };

std::optional<SweepQuantity> parse_quantity(std::string_view name);
std::string_view quantity_name(SweepQuantity q);

/// Detuning sweep (vartheta - theta_g) for one quantity, one column per chi.
///
/// conditional_prob  P~_Ay at phi = 0
/// inferred_phase    Theta from the state engine at phi (or phi = theta_g)
/// snr               sqrt(n) sqrt(P~_Ay / P~_Ax) at phi = 0
/// standard_probs    P_By without postselection
/// weak_value        |1 / (1 + e^{i vartheta})|
/// fisher            n / (P~_Ay (1 - P~_Ay)) at phi = 0
struct SweepSpec {
    SweepQuantity quantity = SweepQuantity::ConditionalProb;
    double phi = 0.0;
    bool phi_at_geometric = false;
    std::vector<double> chi_list;
    double start = 0.0;
    double stop = 0.0;
    std::size_t steps = 0;
    std::uint64_t n = 1;
    bool raw_theta = false;  ///< x-axis is vartheta itself instead of the detuning

    /// Throws InvalidArgument on an unusable spec.
    void validate() const;
};

/// fig2, fig4 or fig5.
std::optional<SweepSpec> preset(std::string_view name);

std::string render_sweep(const SweepSpec &spec);

struct SimulateSpec {
    CircuitParams params;
    std::uint64_t n_trials = 0;
    std::uint64_t seed = 0;
    Arm port = Arm::Y;
    unsigned threads = 0;
};

struct Rendered {
    std::string csv;
    std::string summary;
};

Rendered render_simulation(const SimulateSpec &spec);

struct EstimateSpec {
    double rate = 0.0;
    double duration = 0.0;
    double chi = 0.0;
    double wavelength = 1e-6;
};

Rendered render_estimate(const EstimateSpec &spec);

/// z-score of \p count successes in \p n trials against probability p.
/// Zero-variance cases give 0 when the count matches exactly, else nothing.
std::optional<double> z_score(std::uint64_t count, std::uint64_t n, double p);

}  // namespace kerrmzi::cli
