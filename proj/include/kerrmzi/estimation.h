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

// Binomial likelihood of D_Ay clicks among postselected runs, maximum
// likelihood estimation, Fisher information and the derived Cramer-Rao phase
// bound and signal-to-noise ratio. Natural logarithms throughout.

#pragma once

#include <cstdint>

namespace kerrmzi {

/// n postselected runs of which n_y clicked D_Ay.
struct ClickSample {
    std::uint64_t n = 0;
    std::uint64_t n_y = 0;

    /// Throws InvalidArgument unless 1 <= n and n_y <= n.
    static ClickSample make(std::uint64_t n, std::uint64_t n_y);
};

struct MlEstimate {
    double p_ml = 0.0;
    double variance = 0.0;  ///< plug-in p_ml (1 - p_ml) / n
};

struct EstimationReport {
    double p_ml = 0.0;
    double variance = 0.0;
    double fisher = 0.0;
    double crb_uncertainty = 0.0;  ///< 1 / sqrt(fisher)
    double snr = 0.0;
};

/// Binomial pmf C(n, n_y) p^n_y (1-p)^(n-n_y), evaluated in log space.
double likelihood(const ClickSample &s, double p);

/// log of likelihood(), including log C(n, n_y). Throws DomainError when a
/// log(0) would carry a nonzero count.
double log_likelihood(const ClickSample &s, double p);

MlEstimate ml_estimate(const ClickSample &s);

/// Variance p (1 - p) / n of the ML estimator at the true probability.
double estimator_variance(double p, std::uint64_t n);

/// n / (p (1 - p)). Throws SingularFisher for p outside (0, 1).
double fisher_information(std::uint64_t n, double p);

/// Fisher information at vartheta = pi + theta_g, 4 n / sin^2(chi/2).
/// The count may be fractional (expected postselections). Throws
/// SingularFisher when sin(chi/2) vanishes.
double fisher_at_optimum(double postselections, double chi);

/// Mean number of runs per postselected click at B's y port, 1 / P_By.
/// Throws ZeroProbabilityPostselection when P_By <= 1e-15.
double mean_runs_per_postselection(double chi, double vartheta);

struct RateFisher {
    double postselections = 0.0;  ///< P_By * rate * duration at the optimum
    double exact = 0.0;           ///< fisher_at_optimum(postselections, chi)
    double approximation = 0.0;   ///< rate * duration
};

/// Fisher information accumulated from a pair rate over a duration when
/// operating at the out-of-phase point. Throws InvalidArgument unless rate
/// and duration are positive and chi in (0, pi].
RateFisher fisher_from_rate(double rate, double duration, double chi);

/// Cramer-Rao bound 1 / sqrt(fisher). Throws SingularFisher for fisher <= 0.
double crb_phase_uncertainty(double fisher);

/// Small-chi form of the bound at the optimum, (chi/4) / sqrt(n).
double crb_phase_uncertainty_small_chi(double postselections, double chi);

/// sqrt(n) sqrt(P~_Ay / P~_Ax) with the phi = 0 conditional probabilities.
/// Throws InfiniteSNR when P~_Ax <= 1e-15.
double snr(std::uint64_t n, double vartheta, double chi);

enum class InfoUnit { Nats, Bits };

/// -log p. Throws DomainError for p outside (0, 1].
double self_information(double p, InfoUnit unit = InfoUnit::Nats);

/// Mirror displacement delta_phase * wavelength / (2 pi).
double displacement_sensitivity(double delta_phase, double wavelength);

/// Report from an observed sample (plug-in variance, Fisher at p_ml, sample
/// SNR n_y / sqrt(n p_ml (1 - p_ml))). Throws SingularFisher when p_ml is 0 or 1.
EstimationReport report_from_sample(const ClickSample &s);

/// Expected report for n postselections at the out-of-phase point.
EstimationReport report_at_optimum(std::uint64_t n, double chi);

}  // namespace kerrmzi
