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

// Seeded Monte-Carlo realization of repeated runs of the interferometer pair:
// each run draws one joint detector outcome from the Born probabilities of
// evolve(). Results are a pure function of (params, n_trials, seed).
//
// Random stream (version 1): trials are split into chunks of kChunkTrials.
// Trial t of chunk c uses Philox4x32-10 with key = (seed low word, seed high
// word) and counter = (t / 2, c low word, c high word, kStreamVersion); the
// four output words give two uniforms (words 0:1 for even t, 2:3 for odd t).
// Chunk results are integer tallies, so the thread count cannot change them.

#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "kerrmzi/estimation.h"
#include "kerrmzi/state_engine.h"

namespace kerrmzi {

inline constexpr std::uint32_t kStreamVersion = 1;
inline constexpr std::uint64_t kChunkTrials = std::uint64_t{1} << 16;

struct TrialOutcome {
    Arm a_port = Arm::X;
    Arm b_port = Arm::X;
};

/// Joint click tallies in basis order AxBx, AxBy, AyBx, AyBy.
struct CountsRecord {
    CircuitParams params;
    std::uint64_t n_trials = 0;
    std::uint64_t seed = 0;
    std::array<std::uint64_t, 4> joint_counts{};
};

/// Inverse-CDF table over the four joint outcomes.
class OutcomeSampler {
  public:
    explicit OutcomeSampler(const std::array<double, 4> &probabilities);

    /// Outcome for a uniform variate u in [0, 1).
    std::size_t index(double u) const {
        std::size_t k = 0;
        while (k < 3 && !(u < cdf_[k])) {
            ++k;
        }
        return k;
    }

    TrialOutcome outcome(double u) const;

  private:
    std::array<double, 4> cdf_{};
};

/// Runs n_trials independent trials. \p threads = 0 picks the hardware
/// concurrency; the result does not depend on it.
CountsRecord run_experiment(const CircuitParams &p, std::uint64_t n_trials, std::uint64_t seed, unsigned threads = 0);

/// Statistics of the A photon among trials where B clicked \p port.
struct ConditionedStats {
    Arm port = Arm::Y;
    std::uint64_t n_postselected = 0;
    std::uint64_t n_ay = 0;
    std::uint64_t n_ax = 0;
    std::optional<double> p_hat;  ///< n_ay / n_postselected, empty when nothing was postselected
    double empirical_rate = 0.0;  ///< n_postselected / n_trials (0 for an empty run)

    bool empty() const {
        return n_postselected == 0;
    }
};

ConditionedStats conditioned_statistics(const CountsRecord &c, Arm postselect_port);

/// arccos((n_ax - n_ay) / (n_ax + n_ay)). Throws EmptySample.
double empirical_inferred_phase(const ConditionedStats &s);

/// n_ay / sqrt(n p_hat (1 - p_hat)). Throws DegenerateSample at p_hat in {0, 1}
/// and EmptySample when nothing was postselected.
double empirical_snr(const ConditionedStats &s);

/// Negative second central difference of log_likelihood at p_hat, step
/// max(1e-5, 1e-3 min(p_hat, 1 - p_hat)) kept inside (0, 1).
/// Throws DegenerateSample at p_hat in {0, 1}.
double empirical_fisher(const ClickSample &s);
double empirical_fisher(const ConditionedStats &s);

}  // namespace kerrmzi
