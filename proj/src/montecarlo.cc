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
#include "kerrmzi/montecarlo.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "kerrmzi/analytics.h"
#include "kerrmzi/error.h"
#include "kerrmzi/philox.h"

namespace kerrmzi {

namespace {

using Tally = std::array<std::uint64_t, 4>;

void run_chunk(const OutcomeSampler &sampler, std::uint64_t chunk, std::uint64_t n_trials, Philox4x32::Key key,
               Tally &tally) {
    const std::uint64_t first = chunk * kChunkTrials;
    const std::uint64_t count = std::min(kChunkTrials, n_trials - first);
    const Philox4x32::Counter base{0, static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32),
                                   kStreamVersion};
    for (std::uint64_t t = 0; t < count; t += 2) {
        Philox4x32::Counter ctr = base;
        ctr[0] = static_cast<std::uint32_t>(t / 2);
        const Philox4x32::Counter words = Philox4x32::generate(ctr, key);
        ++tally[sampler.index(uniform_from_words(words[0], words[1]))];
        if (t + 1 < count) {
            ++tally[sampler.index(uniform_from_words(words[2], words[3]))];
        }
    }
}

}  // namespace

OutcomeSampler::OutcomeSampler(const std::array<double, 4> &probabilities) {
    double running = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        if (!(probabilities[k] >= 0.0)) {
            throw Error(ErrorCode::InvalidArgument, "outcome probabilities must be nonnegative");
        }
        running += probabilities[k];
        cdf_[k] = running;
    }
    if (std::abs(running - 1.0) > kNormTolerance) {
        throw Error(ErrorCode::NotNormalized, "outcome probabilities do not sum to 1");
    }
    cdf_[3] = 1.0;
}

TrialOutcome OutcomeSampler::outcome(double u) const {
    const std::size_t k = index(u);
    return {k < 2 ? Arm::X : Arm::Y, k % 2 == 0 ? Arm::X : Arm::Y};
}

CountsRecord run_experiment(const CircuitParams &p, std::uint64_t n_trials, std::uint64_t seed, unsigned threads) {
    CountsRecord record{p, n_trials, seed, {}};
    if (n_trials == 0) {
        return record;
    }
    const OutcomeSampler sampler(joint_probabilities(evolve(p)));
    const Philox4x32::Key key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    const std::uint64_t n_chunks = (n_trials + kChunkTrials - 1) / kChunkTrials;

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    const auto n_workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, n_chunks));

    std::vector<Tally> tallies(n_workers, Tally{});
    std::atomic<std::uint64_t> next_chunk{0};
    auto worker = [&](unsigned w) {
        for (std::uint64_t c = next_chunk++; c < n_chunks; c = next_chunk++) {
            run_chunk(sampler, c, n_trials, key, tallies[w]);
        }
    };
    if (n_workers == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_workers);
        for (unsigned w = 0; w < n_workers; ++w) {
            pool.emplace_back(worker, w);
        }
    }
    for (const Tally &t : tallies) {
        for (std::size_t k = 0; k < 4; ++k) {
            record.joint_counts[k] += t[k];
        }
    }
    return record;
}

ConditionedStats conditioned_statistics(const CountsRecord &c, Arm postselect_port) {
    ConditionedStats s;
    s.port = postselect_port;
    s.n_ax = c.joint_counts[basis_index(Arm::X, postselect_port)];
    s.n_ay = c.joint_counts[basis_index(Arm::Y, postselect_port)];
    s.n_postselected = s.n_ax + s.n_ay;
    if (s.n_postselected > 0) {
        s.p_hat = static_cast<double>(s.n_ay) / static_cast<double>(s.n_postselected);
    }
    if (c.n_trials > 0) {
        s.empirical_rate = static_cast<double>(s.n_postselected) / static_cast<double>(c.n_trials);
    }
    return s;
}

double empirical_inferred_phase(const ConditionedStats &s) {
    if (s.empty()) {
        throw Error(ErrorCode::EmptySample, "no postselected trials");
    }
    const double nx = static_cast<double>(s.n_ax);
    const double ny = static_cast<double>(s.n_ay);
    return clamped_arccos((nx - ny) / (nx + ny));
}

double empirical_snr(const ConditionedStats &s) {
    if (s.empty()) {
        throw Error(ErrorCode::EmptySample, "no postselected trials");
    }
    const double p = *s.p_hat;
    if (s.n_ay == 0 || s.n_ax == 0) {
        throw Error(ErrorCode::DegenerateSample, "zero sample deviation at p_hat = " + std::to_string(p));
    }
    return static_cast<double>(s.n_ay) / std::sqrt(static_cast<double>(s.n_postselected) * p * (1.0 - p));
}

double empirical_fisher(const ClickSample &s) {
    if (s.n_y == 0 || s.n_y == s.n) {
        throw Error(ErrorCode::DegenerateSample, "Fisher curvature undefined at the boundary estimate");
    }
    const double p = static_cast<double>(s.n_y) / static_cast<double>(s.n);
    const double margin = std::min(p, 1.0 - p);
    const double h = std::min(std::max(1e-5, 1e-3 * margin), 0.5 * margin);
    const double up = log_likelihood(s, p + h);
    const double mid = log_likelihood(s, p);
    const double down = log_likelihood(s, p - h);
    return -(up - 2.0 * mid + down) / (h * h);
}

double empirical_fisher(const ConditionedStats &s) {
    if (s.empty()) {
        throw Error(ErrorCode::EmptySample, "no postselected trials");
    }
    return empirical_fisher(ClickSample::make(s.n_postselected, s.n_ay));
}

}  // namespace kerrmzi
