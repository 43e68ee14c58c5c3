// Copyright 2026 The isingforge Authors
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

/// \file anneal.hpp
/// \brief Metropolis simulated annealing with multi-read sampling.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <thread>
#include <utility>
#include <vector>

#include "isingforge/error.hpp"
#include "isingforge/ising.hpp"
#include "isingforge/model_ir.hpp"
#include "isingforge/random.hpp"
#include "isingforge/text.hpp"

namespace isingforge {

/// Geometric cooling: T_k = t_initial * (t_final / t_initial)^(k / (sweeps - 1)).
struct AnnealSchedule {
    std::uint64_t sweeps = 1000;
    double t_initial = 10.0;
    double t_final = 0.01;

    void check() const {
        if (sweeps < 2) throw InvalidArgument("schedule needs at least 2 sweeps");
        if (!(t_final > 0.0) || !(t_final < t_initial) || !std::isfinite(t_initial)) {
            throw InvalidArgument("schedule needs 0 < t_final < t_initial");
        }
    }

    double temperature(std::uint64_t sweep) const {
        const double frac = static_cast<double>(sweep) / static_cast<double>(sweeps - 1);
        return t_initial * std::pow(t_final / t_initial, frac);
    }
};

inline AnnealSchedule schedule_for(const AnnealerPsm &psm) { return {psm.sweeps, psm.t_initial, psm.t_final}; }

struct SampleRecord {
    SpinConfig config;
    double energy = 0.0;
    std::uint64_t occurrences = 0;

    friend bool operator==(const SampleRecord &, const SampleRecord &) = default;
};

/// Records ordered by energy, then by bit string.
struct SampleSet {
    std::vector<SampleRecord> records;

    std::uint64_t total_reads() const {
        std::uint64_t total = 0;
        for (const auto &r : records) total += r.occurrences;
        return total;
    }

    friend bool operator==(const SampleSet &, const SampleSet &) = default;
};

/// Metropolis acceptance: 1 for downhill moves, exp(-delta / T) otherwise.
inline double acceptance_probability(double delta, double temperature) {
    return delta <= 0.0 ? 1.0 : std::exp(-delta / temperature);
}

namespace detail {

inline SpinConfig anneal_read(const IsingModel &model, const AnnealSchedule &schedule, std::uint64_t seed) {
    const std::size_t n = model.size();
    Rng rng(seed);
    std::vector<int> spins(n);
    for (auto &s : spins) s = uniform01(rng) < 0.5 ? 1 : -1;
    for (std::uint64_t k = 0; k < schedule.sweeps; ++k) {
        const double t = schedule.temperature(k);
        for (std::size_t i = 0; i < n; ++i) {
            double local = model.fields()[i];
            for (const auto &[j, coupling] : model.neighbors(i)) local += coupling * spins[j];
            const double delta = -2.0 * spins[i] * local;
            if (delta <= 0.0 || uniform01(rng) < std::exp(-delta / t)) spins[i] = -spins[i];
        }
    }
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = spins[i] == 1 ? 0 : 1;
    return SpinConfig(std::move(bits));
}

}  // namespace detail

/// `reads` independent anneals; read r is seeded with seed + r. Energies are
/// recomputed from the final configurations with the full energy function.
/// `workers` > 1 runs reads on threads with an identical result.
inline SampleSet anneal(const IsingModel &model, const AnnealSchedule &schedule, std::uint64_t reads,
                        std::uint64_t seed, unsigned workers = 1) {
    if (reads == 0) throw InvalidArgument("reads must be positive");
    schedule.check();

    std::vector<SpinConfig> finals(reads);
    workers = std::max(1U, static_cast<unsigned>(std::min<std::uint64_t>(workers, reads)));
    if (workers == 1) {
        for (std::uint64_t r = 0; r < reads; ++r) finals[r] = detail::anneal_read(model, schedule, seed + r);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                for (std::uint64_t r = w; r < reads; r += workers) {
                    finals[r] = detail::anneal_read(model, schedule, seed + r);
                }
            });
        }
        for (auto &t : threads) t.join();
    }

    std::map<SpinConfig, std::uint64_t> counts;
    for (const auto &c : finals) ++counts[c];
    SampleSet out;
    for (const auto &[config, count] : counts) out.records.push_back({config, energy(model, config), count});
    std::stable_sort(out.records.begin(), out.records.end(),
                     [](const SampleRecord &a, const SampleRecord &b) { return a.energy < b.energy; });
    return out;
}

inline std::pair<SpinConfig, double> best(const SampleSet &samples) {
    if (samples.records.empty()) throw EmptySampleSet();
    return {samples.records.front().config, samples.records.front().energy};
}

inline void write_samples_csv(std::ostream &os, const SampleSet &samples) {
    os << "config,energy,occurrences\n";
    for (const auto &r : samples.records) {
        os << r.config.str() << ',' << text::format_real(r.energy) << ',' << r.occurrences << '\n';
    }
}

}  // namespace isingforge
