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
#include "kerrmzi/estimation.h"

#include <cmath>
#include <numbers>
#include <string>

#include "kerrmzi/analytics.h"
#include "kerrmzi/error.h"

namespace kerrmzi {

namespace {

constexpr double kSingularThreshold = 1e-15;

void require_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "probability " + std::to_string(p) + " outside [0, 1]");
    }
}

double log_binomial(std::uint64_t n, std::uint64_t k) {
    const double dn = static_cast<double>(n);
    const double dk = static_cast<double>(k);
    return std::lgamma(dn + 1) - std::lgamma(dk + 1) - std::lgamma(dn - dk + 1);
}

// count * log(q), where 0 * log(0) is 0.
double weighted_log(std::uint64_t count, double q) {
    if (count == 0) {
        return 0.0;
    }
    if (q <= 0.0) {
        throw Error(ErrorCode::DomainError, "log(0) with nonzero count");
    }
    return static_cast<double>(count) * std::log(q);
}

}  // namespace

ClickSample ClickSample::make(std::uint64_t n, std::uint64_t n_y) {
    if (n == 0 || n_y > n) {
        throw Error(
            ErrorCode::InvalidArgument,
            "click sample needs 1 <= n and n_y <= n, got n=" + std::to_string(n) + " n_y=" + std::to_string(n_y));
    }
    return {n, n_y};
}

double likelihood(const ClickSample &s, double p) {
    require_probability(p);
    if ((p == 0.0 && s.n_y > 0) || (p == 1.0 && s.n_y < s.n)) {
        return 0.0;
    }
    return std::exp(log_likelihood(s, p));
}

double log_likelihood(const ClickSample &s, double p) {
    require_probability(p);
    return log_binomial(s.n, s.n_y) + weighted_log(s.n_y, p) + weighted_log(s.n - s.n_y, 1.0 - p);
}

MlEstimate ml_estimate(const ClickSample &s) {
    if (s.n == 0) {
        throw Error(ErrorCode::InvalidArgument, "ML estimate needs at least one postselection");
    }
    const double p = static_cast<double>(s.n_y) / static_cast<double>(s.n);
    return {p, estimator_variance(p, s.n)};
}

double estimator_variance(double p, std::uint64_t n) {
    require_probability(p);
    if (n == 0) {
        throw Error(ErrorCode::InvalidArgument, "variance needs n >= 1");
    }
    return p * (1.0 - p) / static_cast<double>(n);
}

double fisher_information(std::uint64_t n, double p) {
    if (n == 0) {
        throw Error(ErrorCode::InvalidArgument, "Fisher information needs n >= 1");
    }
    if (!(p > 0.0 && p < 1.0)) {
        throw Error(ErrorCode::SingularFisher, "Fisher information is singular at p = " + std::to_string(p));
    }
    return static_cast<double>(n) / (p * (1.0 - p));
}

double fisher_at_optimum(double postselections, double chi) {
    if (!(postselections > 0.0) || !std::isfinite(postselections) || !std::isfinite(chi)) {
        throw Error(ErrorCode::InvalidArgument, "need a positive postselection count and finite chi");
    }
    const double s = std::sin(geometric_phase(chi));
    if (chi == 0.0 || s == 0.0) {
        throw Error(ErrorCode::SingularFisher, "no Fisher information without Kerr coupling");
    }
    return 4.0 * postselections / (s * s);
}

double mean_runs_per_postselection(double chi, double vartheta) {
    const double p = standard_probs_B(vartheta, chi).p_y;
    if (!(p > kSingularThreshold)) {
        throw Error(ErrorCode::ZeroProbabilityPostselection, "P_By = " + std::to_string(p));
    }
    return 1.0 / p;
}

RateFisher fisher_from_rate(double rate, double duration, double chi) {
    if (!(rate > 0.0) || !(duration > 0.0) || !std::isfinite(rate) || !std::isfinite(duration)) {
        throw Error(ErrorCode::InvalidArgument, "rate and duration must be positive");
    }
    if (!(chi > 0.0 && chi <= std::numbers::pi)) {
        throw Error(ErrorCode::InvalidArgument, "chi must lie in (0, pi]");
    }
    const double inputs = rate * duration;
    const double p_by = standard_probs_B(std::numbers::pi + geometric_phase(chi), chi).p_y;
    const double n = p_by * inputs;
    return {n, fisher_at_optimum(n, chi), inputs};
}

double crb_phase_uncertainty(double fisher) {
    if (!(fisher > 0.0)) {
        throw Error(ErrorCode::SingularFisher, "Cramer-Rao bound needs positive Fisher information");
    }
    return 1.0 / std::sqrt(fisher);
}

double crb_phase_uncertainty_small_chi(double postselections, double chi) {
    if (!(postselections > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "need a positive postselection count");
    }
    return chi / 4.0 / std::sqrt(postselections);
}

double snr(std::uint64_t n, double vartheta, double chi) {
    if (n == 0) {
        throw Error(ErrorCode::InvalidArgument, "SNR needs n >= 1");
    }
    const PortProbabilities c = conditional_probs_A(vartheta, chi);
    if (!(c.x > kSingularThreshold)) {
        throw Error(ErrorCode::InfiniteSnr, "P~_Ax = " + std::to_string(c.x));
    }
    return std::sqrt(static_cast<double>(n)) * std::sqrt(c.y / c.x);
}

double self_information(double p, InfoUnit unit) {
    if (!(p > 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::DomainError, "self-information needs p in (0, 1]");
    }
    const double nats = -std::log(p);
    return unit == InfoUnit::Nats ? nats : nats / std::numbers::ln2;
}

double displacement_sensitivity(double delta_phase, double wavelength) {
    if (!(wavelength > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "wavelength must be positive");
    }
    return delta_phase * wavelength / (2 * std::numbers::pi);
}

EstimationReport report_from_sample(const ClickSample &s) {
    const MlEstimate ml = ml_estimate(s);
    const double fisher = fisher_information(s.n, ml.p_ml);
    const double spread = std::sqrt(static_cast<double>(s.n) * ml.p_ml * (1.0 - ml.p_ml));
    return {ml.p_ml, ml.variance, fisher, crb_phase_uncertainty(fisher), static_cast<double>(s.n_y) / spread};
}

EstimationReport report_at_optimum(std::uint64_t n, double chi) {
    const double vartheta = std::numbers::pi + geometric_phase(chi);
    const double p = conditional_probs_A(vartheta, chi).y;
    const double fisher = fisher_at_optimum(static_cast<double>(n), chi);
    return {p, estimator_variance(p, n), fisher, crb_phase_uncertainty(fisher), snr(n, vartheta, chi)};
}

}  // namespace kerrmzi
