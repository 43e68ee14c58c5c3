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

/// \file ising.hpp
/// \brief Classical Ising problem: topologies, models, spin configurations,
/// energies and the brute-force ground-state oracle.
///
/// The Hamiltonian is H(s) = sum_{i<j} J_ij s_i s_j + sum_i h_i s_i with
/// s_i in {+1, -1}. A configuration is stored as bits, bit 0 meaning spin +1
/// (the Z eigenvalue of |0>) and bit 1 meaning spin -1. Bit strings are
/// rendered qubit 0 first, so "0101" has qubits 1 and 3 flipped.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "isingforge/error.hpp"

namespace isingforge {

enum class Topology { Full, Linear, Circular };

inline constexpr Topology kAllTopologies[] = {Topology::Full, Topology::Linear, Topology::Circular};

inline std::string_view to_string(Topology t) {
    switch (t) {
        case Topology::Full:
            return "full";
        case Topology::Linear:
            return "linear";
        case Topology::Circular:
            return "circular";
    }
    return "?";
}

inline std::optional<Topology> topology_from_string(std::string_view s) {
    if (s == "full") return Topology::Full;
    if (s == "linear") return Topology::Linear;
    if (s == "circular") return Topology::Circular;
    return std::nullopt;
}

/// Smallest qubit count for which the topology is defined.
inline constexpr std::size_t min_qubits(Topology t) { return t == Topology::Circular ? 3 : 2; }

/// Undirected coupling, always normalized so that first < second.
using Edge = std::pair<std::size_t, std::size_t>;

/// Couplings of a topology, in canonical order. The circular wrap edge
/// (n-1, 0) is normalized to (0, n-1) and comes last.
inline std::vector<Edge> edge_set(Topology topology, std::size_t n) {
    if (n < min_qubits(topology)) {
        throw InvalidSize(std::string(to_string(topology)) + " topology requires at least " +
                          std::to_string(min_qubits(topology)) + " qubits, got " + std::to_string(n));
    }
    std::vector<Edge> edges;
    switch (topology) {
        case Topology::Full:
            edges.reserve(n * (n - 1) / 2);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    edges.emplace_back(i, j);
                }
            }
            break;
        case Topology::Linear:
        case Topology::Circular:
            for (std::size_t i = 0; i + 1 < n; ++i) {
                edges.emplace_back(i, i + 1);
            }
            if (topology == Topology::Circular) {
                edges.emplace_back(0, n - 1);
            }
            break;
    }
    return edges;
}

/// Spin configuration over n qubits; see the file comment for the bit
/// convention. Ordering is lexicographic over the rendered bit string.
class SpinConfig {
   public:
    SpinConfig() = default;
    explicit SpinConfig(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto b : bits_) {
            if (b > 1) {
                throw InvalidArgument("spin configuration bits must be 0 or 1");
            }
        }
    }

    static SpinConfig zeros(std::size_t n) { return SpinConfig(std::vector<std::uint8_t>(n, 0)); }

    /// Parses a bit string such as "0101" (qubit 0 first).
    static SpinConfig parse(std::string_view text) {
        std::vector<std::uint8_t> bits;
        bits.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1') {
                throw InvalidArgument("invalid bit string '" + std::string(text) + "'");
            }
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return SpinConfig(std::move(bits));
    }

    /// Configuration whose qubit q equals bit q of `index` (qubit 0 = LSB).
    static SpinConfig from_index(std::uint64_t index, std::size_t n) {
        std::vector<std::uint8_t> bits(n);
        for (std::size_t q = 0; q < n; ++q) {
            bits[q] = static_cast<std::uint8_t>((index >> q) & 1U);
        }
        return SpinConfig(std::move(bits));
    }

    std::uint64_t index() const {
        std::uint64_t k = 0;
        for (std::size_t q = 0; q < bits_.size(); ++q) {
            k |= static_cast<std::uint64_t>(bits_[q]) << q;
        }
        return k;
    }

    std::size_t size() const noexcept { return bits_.size(); }
    std::uint8_t bit(std::size_t q) const { return bits_.at(q); }
    int spin(std::size_t q) const { return bits_.at(q) == 0 ? 1 : -1; }
    const std::vector<std::uint8_t> &bits() const noexcept { return bits_; }

    SpinConfig flipped(std::size_t q) const {
        if (q >= bits_.size()) {
            throw IndexError("qubit " + std::to_string(q) + " out of range for " +
                             std::to_string(bits_.size()) + " spins");
        }
        SpinConfig out = *this;
        out.bits_[q] ^= 1U;
        return out;
    }

    SpinConfig complement() const {
        SpinConfig out = *this;
        for (auto &b : out.bits_) b ^= 1U;
        return out;
    }

    std::string str() const {
        std::string s(bits_.size(), '0');
        for (std::size_t q = 0; q < bits_.size(); ++q) {
            if (bits_[q] != 0) s[q] = '1';
        }
        return s;
    }

    friend auto operator<=>(const SpinConfig &, const SpinConfig &) = default;
    friend bool operator==(const SpinConfig &, const SpinConfig &) = default;

   private:
    std::vector<std::uint8_t> bits_;
};

/// Immutable Ising problem with per-site fields and pairwise couplings.
class IsingModel {
   public:
    using Couplings = std::map<Edge, double>;

    IsingModel(std::vector<double> fields, Couplings couplings)
        : fields_(std::move(fields)), couplings_(std::move(couplings)), adjacency_(fields_.size()) {
        if (fields_.empty()) {
            throw InvalidSize("an Ising model needs at least one qubit");
        }
        for (const auto &[edge, value] : couplings_) {
            if (edge.first >= edge.second || edge.second >= fields_.size()) {
                throw InvalidArgument("coupling (" + std::to_string(edge.first) + "," +
                                      std::to_string(edge.second) + ") must satisfy i < j < n");
            }
            adjacency_[edge.first].emplace_back(edge.second, value);
            adjacency_[edge.second].emplace_back(edge.first, value);
        }
    }

    std::size_t size() const noexcept { return fields_.size(); }
    const std::vector<double> &fields() const noexcept { return fields_; }
    const Couplings &couplings() const noexcept { return couplings_; }

    /// (neighbor, J) pairs of qubit q.
    const std::vector<std::pair<std::size_t, double>> &neighbors(std::size_t q) const { return adjacency_.at(q); }

    friend bool operator==(const IsingModel &a, const IsingModel &b) {
        return a.fields_ == b.fields_ && a.couplings_ == b.couplings_;
    }

   private:
    std::vector<double> fields_;
    Couplings couplings_;
    std::vector<std::vector<std::pair<std::size_t, double>>> adjacency_;
};

/// Uniform model: every site gets `field`, every topology edge gets `coupling`.
inline IsingModel build_model(std::size_t n, double field, double coupling, Topology topology) {
    IsingModel::Couplings couplings;
    for (const auto &edge : edge_set(topology, n)) {
        couplings.emplace(edge, coupling);
    }
    return IsingModel(std::vector<double>(n, field), std::move(couplings));
}

inline double energy(const IsingModel &model, const SpinConfig &config) {
    if (config.size() != model.size()) {
        throw DimensionMismatch("configuration has " + std::to_string(config.size()) + " spins, model has " +
                                std::to_string(model.size()));
    }
    double e = 0.0;
    for (const auto &[edge, j] : model.couplings()) {
        e += j * config.spin(edge.first) * config.spin(edge.second);
    }
    for (std::size_t i = 0; i < model.size(); ++i) {
        e += model.fields()[i] * config.spin(i);
    }
    return e;
}

/// energy(flip(config, i)) - energy(config), in O(degree(i)).
inline double delta_energy(const IsingModel &model, const SpinConfig &config, std::size_t i) {
    if (config.size() != model.size()) {
        throw DimensionMismatch("configuration has " + std::to_string(config.size()) + " spins, model has " +
                                std::to_string(model.size()));
    }
    if (i >= model.size()) {
        throw IndexError("qubit " + std::to_string(i) + " out of range for " + std::to_string(model.size()) +
                         " qubits");
    }
    double local = model.fields()[i];
    for (const auto &[j, coupling] : model.neighbors(i)) {
        local += coupling * config.spin(j);
    }
    return -2.0 * config.spin(i) * local;
}

struct GroundStateResult {
    double energy = 0.0;
    /// Complete degenerate set, ordered lexicographically.
    std::set<SpinConfig> minimizers;
    /// Lexicographically smallest member of `minimizers`.
    SpinConfig representative;
};

inline constexpr std::size_t kMaxEnumerationQubits = 24;

namespace detail {

struct EnumerationPartial {
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::uint64_t> candidates;
};

// Walks Gray codes [lo, hi), updating the energy incrementally and keeping every
// configuration within `slack` of the running minimum. The running energy is
// recomputed from scratch periodically so rounding drift stays far below slack.
inline EnumerationPartial enumerate_range(const IsingModel &model, std::uint64_t lo, std::uint64_t hi,
                                          double slack) {
    EnumerationPartial out;
    if (lo >= hi) {
        return out;
    }
    const std::size_t n = model.size();
    std::vector<int> spins(n);
    const auto full_energy = [&]() {
        double e = 0.0;
        for (const auto &[edge, j] : model.couplings()) {
            e += j * spins[edge.first] * spins[edge.second];
        }
        for (std::size_t i = 0; i < n; ++i) {
            e += model.fields()[i] * spins[i];
        }
        return e;
    };
    const auto load = [&](std::uint64_t config) {
        for (std::size_t q = 0; q < n; ++q) {
            spins[q] = ((config >> q) & 1U) != 0 ? -1 : 1;
        }
    };

    std::uint64_t config = lo ^ (lo >> 1);
    load(config);
    double e = full_energy();
    for (std::uint64_t g = lo;;) {
        if (e < out.best - slack) {
            out.best = e;
            out.candidates.clear();
            out.candidates.push_back(config);
        } else {
            if (e < out.best) out.best = e;
            if (e <= out.best + slack) out.candidates.push_back(config);
        }
        ++g;
        if (g == hi) break;
        const auto q = static_cast<std::size_t>(std::countr_zero(g));
        double local = model.fields()[q];
        for (const auto &[j, coupling] : model.neighbors(q)) {
            local += coupling * spins[j];
        }
        e += -2.0 * spins[q] * local;
        spins[q] = -spins[q];
        config ^= std::uint64_t{1} << q;
        if ((g & 0x3FFU) == 0) {
            e = full_energy();
        }
    }
    return out;
}

}  // namespace detail

/// Exhaustive minimum over all 2^n configurations. `workers` > 1 splits the
/// enumeration across threads; the merged result equals the sequential one.
inline GroundStateResult exact_ground(const IsingModel &model, unsigned workers = 1) {
    const std::size_t n = model.size();
    if (n > kMaxEnumerationQubits) {
        throw TooLarge("exact enumeration supports at most " + std::to_string(kMaxEnumerationQubits) +
                       " qubits, got " + std::to_string(n));
    }
    double scale = 1.0;
    for (const auto &[edge, j] : model.couplings()) scale += std::abs(j);
    for (double h : model.fields()) scale += std::abs(h);
    const double slack = 1e-9 * scale;

    const std::uint64_t total = std::uint64_t{1} << n;
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));
    std::vector<detail::EnumerationPartial> partials(workers);
    if (workers == 1) {
        partials[0] = detail::enumerate_range(model, 0, total, slack);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = total * w / workers;
            const std::uint64_t hi = total * (w + 1) / workers;
            threads.emplace_back([&, w, lo, hi] { partials[w] = detail::enumerate_range(model, lo, hi, slack); });
        }
        for (auto &t : threads) t.join();
    }

    double best = std::numeric_limits<double>::infinity();
    for (const auto &p : partials) best = std::min(best, p.best);

    // Candidates were selected with slack (some are stale once a worker's minimum
    // dropped); settle the minimum with the canonical energy function so every
    // minimizer evaluates exactly to `energy`.
    std::vector<std::pair<SpinConfig, double>> exact;
    for (const auto &p : partials) {
        for (std::uint64_t c : p.candidates) {
            SpinConfig config = SpinConfig::from_index(c, n);
            exact.emplace_back(config, energy(model, config));
        }
    }
    GroundStateResult result;
    result.energy = std::numeric_limits<double>::infinity();
    for (const auto &[config, e] : exact) result.energy = std::min(result.energy, e);
    for (auto &[config, e] : exact) {
        if (e == result.energy) result.minimizers.insert(std::move(config));
    }
    result.representative = *result.minimizers.begin();
    return result;
}

}  // namespace isingforge
