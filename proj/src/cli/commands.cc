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
#include "kerrmzi/cli/commands.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "kerrmzi/analytics.h"
#include "kerrmzi/cli/csv.h"
#include "kerrmzi/error.h"
#include "kerrmzi/estimation.h"
#include "kerrmzi/montecarlo.h"

namespace kerrmzi::cli {

namespace {

constexpr std::array<std::pair<std::string_view, SweepQuantity>, 6> kQuantities{{
    {"conditional_prob", SweepQuantity::ConditionalProb},
    {"inferred_phase", SweepQuantity::InferredPhase},
    {"snr", SweepQuantity::Snr},
    {"standard_probs", SweepQuantity::StandardProbs},
    {"weak_value", SweepQuantity::WeakValue},
    {"fisher", SweepQuantity::Fisher},
}};

constexpr std::array<std::string_view, 4> kOutcomeNames{"AxBx", "AxBy", "AyBx", "AyBy"};

double sweep_point(const SweepSpec &spec, double vartheta, double chi) {
    switch (spec.quantity) {
        case SweepQuantity::ConditionalProb:
            return conditional_probs_A(vartheta, chi).y;
        case SweepQuantity::InferredPhase: {
            const double phi = spec.phi_at_geometric ? geometric_phase(chi) : spec.phi;
            return inferred_phase({phi, vartheta, chi});
        }
        case SweepQuantity::Snr:
            return snr(spec.n, vartheta, chi);
        case SweepQuantity::StandardProbs:
            return standard_probs_B(vartheta, chi).p_y;
        case SweepQuantity::WeakValue:
            return std::abs(weak_value(vartheta).value);
        case SweepQuantity::Fisher:
            return fisher_information(spec.n, conditional_probs_A(vartheta, chi).y);
    }
    return std::nan("");
}

// Library errors mark a singular point of a curve, written as NA.
template <typename F>
std::optional<double> optional_of(F &&f) {
    try {
        return f();
    } catch (const Error &) {
        return std::nullopt;
    }
}

std::string port_label(Arm port) {
    return port == Arm::X ? "Bx" : "By";
}

}  // namespace

std::optional<SweepQuantity> parse_quantity(std::string_view name) {
    for (const auto &[n, q] : kQuantities) {
        if (n == name) {
            return q;
        }
    }
    return std::nullopt;
}

std::string_view quantity_name(SweepQuantity q) {
    for (const auto &[n, v] : kQuantities) {
        if (v == q) {
            return n;
        }
    }
    return "unknown";
}

void SweepSpec::validate() const {
    if (steps < 2) {
        throw Error(ErrorCode::InvalidArgument, "sweep needs at least 2 steps");
    }
    if (!std::isfinite(start) || !std::isfinite(stop) || !(start < stop)) {
        throw Error(ErrorCode::InvalidArgument, "sweep needs finite start < stop");
    }
    if (chi_list.empty()) {
        throw Error(ErrorCode::InvalidArgument, "sweep needs at least one chi value");
    }
    for (double chi : chi_list) {
        if (!std::isfinite(chi)) {
            throw Error(ErrorCode::InvalidArgument, "chi values must be finite");
        }
    }
    if (!std::isfinite(phi)) {
        throw Error(ErrorCode::InvalidArgument, "phi must be finite");
    }
    if (n == 0) {
        throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
    }
}

std::optional<SweepSpec> preset(std::string_view name) {
    SweepSpec spec;
    spec.start = 0.0;
    spec.stop = 2 * std::numbers::pi;
    spec.steps = 721;
    if (name == "fig2") {
        spec.quantity = SweepQuantity::ConditionalProb;
        spec.chi_list = {0.1, 1.0, 2.0, std::numbers::pi};
    } else if (name == "fig4") {
        spec.quantity = SweepQuantity::InferredPhase;
        spec.chi_list = {0.1};
    } else if (name == "fig5") {
        spec.quantity = SweepQuantity::Snr;
        spec.n = 1;
        spec.chi_list = {0.05, 0.1, 0.5};
    } else {
        return std::nullopt;
    }
    return spec;
}

std::string render_sweep(const SweepSpec &spec) {
    spec.validate();
    std::vector<std::string> header{spec.raw_theta ? "theta_b_rad" : "detuning_rad"};
    for (double chi : spec.chi_list) {
        header.push_back("chi=" + format_number(chi));
    }
    std::string out = csv_line(header);

    const double last = static_cast<double>(spec.steps - 1);
    for (std::size_t i = 0; i < spec.steps; ++i) {
        const double x = spec.start + (spec.stop - spec.start) * (static_cast<double>(i) / last);
        std::vector<std::string> row{format_number(x)};
        for (double chi : spec.chi_list) {
            const double vartheta = spec.raw_theta ? x : x + geometric_phase(chi);
            row.push_back(format_number(optional_of([&] { return sweep_point(spec, vartheta, chi); })));
        }
        out += csv_line(row);
    }
    return out;
}

std::optional<double> z_score(std::uint64_t count, std::uint64_t n, double p) {
    if (n == 0) {
        return std::nullopt;
    }
    p = std::clamp(p, 0.0, 1.0);
    const double dn = static_cast<double>(n);
    const double expected = dn * p;
    const double var = dn * p * (1.0 - p);
    const double diff = static_cast<double>(count) - expected;
    if (var > 0.0) {
        return diff / std::sqrt(var);
    }
    if (diff == 0.0) {
        return 0.0;
    }
    return std::nullopt;
}

Rendered render_simulation(const SimulateSpec &spec) {
    const CountsRecord counts = run_experiment(spec.params, spec.n_trials, spec.seed, spec.threads);
    const JointState state = evolve(spec.params);
    const auto probs = joint_probabilities(state);
    const ConditionedStats stats = conditioned_statistics(counts, spec.port);

    const StandardProbs b = standard_probs_B(spec.params.vartheta, spec.params.chi);
    const double rate_analytic = spec.port == Arm::Y ? b.p_y : b.p_x;
    const std::optional<double> p_hat_analytic =
        optional_of([&] { return postselect(state, Interferometer::B, spec.port).probabilities().y; });
    const std::optional<double> z_rate = z_score(stats.n_postselected, counts.n_trials, rate_analytic);
    const std::optional<double> z_p_hat =
        p_hat_analytic ? z_score(stats.n_ay, stats.n_postselected, *p_hat_analytic) : std::nullopt;

    std::vector<std::string> header;
    std::vector<std::string> row;
    auto column = [&](std::string name, std::string value) {
        header.push_back(std::move(name));
        row.push_back(std::move(value));
    };
    column("phi", format_number(spec.params.phi));
    column("theta_b", format_number(spec.params.vartheta));
    column("chi", format_number(spec.params.chi));
    column("trials", std::to_string(counts.n_trials));
    column("seed", std::to_string(counts.seed));
    column("postselect_port_y", spec.port == Arm::Y ? "1" : "0");
    const double trials = static_cast<double>(counts.n_trials);
    for (std::size_t k = 0; k < 4; ++k) {
        column("count_" + std::string(kOutcomeNames[k]), std::to_string(counts.joint_counts[k]));
    }
    for (std::size_t k = 0; k < 4; ++k) {
        column("freq_" + std::string(kOutcomeNames[k]),
               counts.n_trials > 0 ? format_number(static_cast<double>(counts.joint_counts[k]) / trials)
                                   : std::string(kMissing));
    }
    for (std::size_t k = 0; k < 4; ++k) {
        column("prob_" + std::string(kOutcomeNames[k]), format_number(probs[k]));
    }
    for (std::size_t k = 0; k < 4; ++k) {
        column("z_" + std::string(kOutcomeNames[k]),
               format_number(z_score(counts.joint_counts[k], counts.n_trials, probs[k])));
    }
    column("n_postselected", std::to_string(stats.n_postselected));
    column("n_Ax", std::to_string(stats.n_ax));
    column("n_Ay", std::to_string(stats.n_ay));
    column("rate", counts.n_trials > 0 ? format_number(stats.empirical_rate) : std::string(kMissing));
    column("rate_analytic", format_number(rate_analytic));
    column("z_rate", format_number(z_rate));
    column("p_hat", format_number(stats.p_hat));
    column("p_hat_analytic", format_number(p_hat_analytic));
    column("z_p_hat", format_number(z_p_hat));
    column("inferred_phase", format_number(optional_of([&] { return empirical_inferred_phase(stats); })));

    std::ostringstream summary;
    summary << "trials " << counts.n_trials << " seed " << counts.seed << " rng " << "philox4x32-10/v"
            << kStreamVersion << "\n";
    summary << "joint counts";
    for (std::size_t k = 0; k < 4; ++k) {
        summary << " " << kOutcomeNames[k] << "=" << counts.joint_counts[k];
    }
    summary << "\n";
    summary << "postselected on " << port_label(spec.port) << ": " << stats.n_postselected << " (n_Ax "
            << stats.n_ax << ", n_Ay " << stats.n_ay << ")\n";
    summary << "rate " << format_number(counts.n_trials > 0 ? std::optional(stats.empirical_rate) : std::nullopt)
            << " vs analytic " << format_number(rate_analytic) << " (z " << format_number(z_rate) << ")\n";
    summary << "p_hat " << format_number(stats.p_hat) << " vs analytic " << format_number(p_hat_analytic)
            << " (z " << format_number(z_p_hat) << ")\n";
    if (spec.params.chi_outside_regime()) {
        summary << "warning: chi outside [0, pi]\n";
    }
    return {csv_line(header) + csv_line(row), summary.str()};
}

Rendered render_estimate(const EstimateSpec &spec) {
    // Closed interval is fine for the library; the report is about the weak-coupling regime.
    if (!(spec.chi > 0.0 && spec.chi < std::numbers::pi)) {
        throw Error(ErrorCode::InvalidArgument, "chi must lie in (0, pi)");
    }
    const RateFisher f = fisher_from_rate(spec.rate, spec.duration, spec.chi);
    const double vartheta = std::numbers::pi + geometric_phase(spec.chi);
    const double runs = mean_runs_per_postselection(spec.chi, vartheta);
    const double crb = crb_phase_uncertainty(f.exact);
    const double crb_approx = crb_phase_uncertainty(f.approximation);
    const double crb_small = crb_phase_uncertainty_small_chi(f.postselections, spec.chi);
    const PortProbabilities c = conditional_probs_A(vartheta, spec.chi);
    const double signal_to_noise = std::sqrt(f.postselections) * std::sqrt(c.y / c.x);
    const double displacement = displacement_sensitivity(crb, spec.wavelength);

    const std::vector<std::pair<std::string, double>> fields{
        {"rate", spec.rate},
        {"duration_s", spec.duration},
        {"chi", spec.chi},
        {"wavelength_m", spec.wavelength},
        {"postselections", f.postselections},
        {"runs_per_postselection", runs},
        {"fisher_exact", f.exact},
        {"fisher_approx", f.approximation},
        {"crb_rad", crb},
        {"crb_approx_rad", crb_approx},
        {"crb_small_chi_rad", crb_small},
        {"snr", signal_to_noise},
        {"displacement_m", displacement},
    };
    std::vector<std::string> header, row;
    std::ostringstream summary;
    for (const auto &[name, value] : fields) {
        header.push_back(name);
        row.push_back(format_number(value));
        summary << name << " " << format_number(value) << "\n";
    }
    return {csv_line(header) + csv_line(row), summary.str()};
}

}  // namespace kerrmzi::cli
