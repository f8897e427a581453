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
#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "kerrmzi/cli/commands.h"
#include "kerrmzi/cli/csv.h"
#include "kerrmzi/error.h"

namespace {

using namespace kerrmzi;
using namespace kerrmzi::cli;

Arm parse_port(const std::string &s) {
    if (s == "y" || s == "By") {
        return Arm::Y;
    }
    if (s == "x" || s == "Bx") {
        return Arm::X;
    }
    throw Error(ErrorCode::InvalidArgument, "port must be x or y (or Bx, By), got '" + s + "'");
}

// CSV goes to --output when given (atomically), else to stdout.
void emit(const std::string &output, const std::string &csv) {
    if (output.empty()) {
        std::cout << csv;
    } else {
        write_file_atomically(output, csv);
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Postselected Kerr-coupled Mach-Zehnder pair: figure sweeps, Monte-Carlo runs, estimation"};
    app.require_subcommand(1);

    // sweep
    auto *sweep = app.add_subcommand("sweep", "Tabulate a quantity versus detuning vartheta - theta_g as CSV");
    std::string preset_name;
    std::string quantity = "conditional_prob";
    double sweep_phi = 0.0;
    std::vector<double> chis;
    double start = 0.0;
    double stop = 2 * std::numbers::pi;
    std::size_t steps = 721;
    std::uint64_t sweep_n = 1;
    bool phi_at_geometric = false;
    bool raw_theta = false;
    std::string sweep_output;
    sweep->add_option("--preset", preset_name, "fig2, fig4 or fig5; explicit flags override it");
    auto *quantity_opt = sweep->add_option(
        "--quantity", quantity, "conditional_prob, inferred_phase, snr, standard_probs, weak_value or fisher");
    auto *phi_opt = sweep->add_option("--phi", sweep_phi, "phase on A arm y (inferred_phase only)");
    auto *chi_opt = sweep->add_option("--chi", chis, "Kerr phase(s), comma separated")->delimiter(',');
    auto *start_opt = sweep->add_option("--start", start, "first detuning");
    auto *stop_opt = sweep->add_option("--stop", stop, "last detuning");
    auto *steps_opt = sweep->add_option("--steps", steps, "number of rows (>= 2)");
    auto *n_opt = sweep->add_option("--n", sweep_n, "postselections for snr and fisher");
    auto *geo_opt = sweep->add_flag("--phi-at-geometric", phi_at_geometric, "use phi = theta_g for inferred_phase");
    auto *raw_opt = sweep->add_flag("--raw-theta", raw_theta, "x-axis is vartheta instead of the detuning");
    sweep->add_option("--output", sweep_output, "CSV path (stdout when omitted)");

    // simulate
    auto *simulate = app.add_subcommand("simulate", "Monte-Carlo run with postselection statistics");
    SimulateSpec sim;
    std::string port = "y";
    std::string sim_output;
    simulate->add_option("--phi", sim.params.phi, "phase on A arm y");
    simulate->add_option("--theta-b", sim.params.vartheta, "phase on B arm x");
    simulate->add_option("--chi", sim.params.chi, "Kerr phase");
    simulate->add_option("--trials", sim.n_trials, "number of runs")->required();
    simulate->add_option("--seed", sim.seed, "64-bit seed")->required();
    simulate->add_option("--port", port, "postselected B port: x or y");
    simulate->add_option("--threads", sim.threads, "worker threads (0 = all cores); output does not depend on it");
    simulate->add_option("--output", sim_output, "CSV path (stdout when omitted)");

    // estimate
    auto *estimate = app.add_subcommand("estimate", "Fisher information, Cramer-Rao bound and SNR from a pair rate");
    EstimateSpec est;
    std::string est_output;
    estimate->add_option("--rate", est.rate, "photon pairs per second")->required();
    estimate->add_option("--duration", est.duration, "acquisition time in seconds")->required();
    estimate->add_option("--chi", est.chi, "Kerr phase in (0, pi]")->required();
    estimate->add_option("--wavelength", est.wavelength, "wavelength in meters for the displacement figure");
    estimate->add_option("--output", est_output, "CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "kerrmzi: error: " << e.what() << "\n";
        return e.get_exit_code() != 0 ? e.get_exit_code() : 2;
    }

    try {
        if (sweep->parsed()) {
            SweepSpec spec;
            if (!preset_name.empty()) {
                const auto p = preset(preset_name);
                if (!p) {
                    throw Error(ErrorCode::InvalidArgument, "unknown preset '" + preset_name + "'");
                }
                spec = *p;
            } else {
                spec.start = start;
                spec.stop = stop;
                spec.steps = steps;
            }
            if (preset_name.empty() || quantity_opt->count() > 0) {
                const auto q = parse_quantity(quantity);
                if (!q) {
                    throw Error(ErrorCode::InvalidArgument, "unknown quantity '" + quantity + "'");
                }
                spec.quantity = *q;
            }
            if (phi_opt->count() > 0) spec.phi = sweep_phi;
            if (chi_opt->count() > 0) spec.chi_list = chis;
            if (start_opt->count() > 0) spec.start = start;
            if (stop_opt->count() > 0) spec.stop = stop;
            if (steps_opt->count() > 0) spec.steps = steps;
            if (n_opt->count() > 0) spec.n = sweep_n;
            if (geo_opt->count() > 0) spec.phi_at_geometric = phi_at_geometric;
            if (raw_opt->count() > 0) spec.raw_theta = raw_theta;
            emit(sweep_output, render_sweep(spec));
        } else if (simulate->parsed()) {
            sim.port = parse_port(port);
            const Rendered r = render_simulation(sim);
            emit(sim_output, r.csv);
            (sim_output.empty() ? std::cerr : std::cout) << r.summary;
        } else if (estimate->parsed()) {
            const Rendered r = render_estimate(est);
            if (!est_output.empty()) {
                write_file_atomically(est_output, r.csv);
            }
            std::cout << r.summary;
        }
    } catch (const std::exception &e) {
        std::cerr << "kerrmzi: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
