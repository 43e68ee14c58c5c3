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

// Test-only reference computations. Nothing here calls into the library's
// energy or enumeration code, so tests can check the library against them.

#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

/// Textbook Ising energy of a bit string (qubit 0 first, '0' = spin +1).
inline double ising_energy(const std::vector<double> &h, const std::map<std::pair<std::size_t, std::size_t>, double> &j,
                           const std::string &bits) {
    auto spin = [&](std::size_t q) { return bits[q] == '0' ? 1.0 : -1.0; };
    double e = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) e += h[i] * spin(i);
    for (const auto &[edge, value] : j) e += value * spin(edge.first) * spin(edge.second);
    return e;
}

inline std::string bits_of(std::size_t index, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t q = 0; q < n; ++q) {
        if ((index >> q) & 1U) s[q] = '1';
    }
    return s;
}

struct Ground {
    double energy = std::numeric_limits<double>::infinity();
    std::set<std::string> minimizers;
    /// Smallest energy strictly above the minimum.
    double first_excited = std::numeric_limits<double>::infinity();
};

/// Brute force over all 2^n bit strings.
inline Ground brute_force(const std::vector<double> &h,
                          const std::map<std::pair<std::size_t, std::size_t>, double> &j) {
    const std::size_t n = h.size();
    std::vector<std::pair<double, std::string>> all;
    for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) {
        const auto bits = bits_of(k, n);
        all.emplace_back(ising_energy(h, j, bits), bits);
    }
    Ground g;
    for (const auto &[e, b] : all) g.energy = std::min(g.energy, e);
    for (const auto &[e, b] : all) {
        if (e == g.energy) {
            g.minimizers.insert(b);
        } else {
            g.first_excited = std::min(g.first_excited, e);
        }
    }
    return g;
}

/// Uniform model couplings written out by hand, not via edge_set.
inline std::map<std::pair<std::size_t, std::size_t>, double> couplings_4(const std::string &topology, double value) {
    if (topology == "linear") return {{{0, 1}, value}, {{1, 2}, value}, {{2, 3}, value}};
    if (topology == "circular") return {{{0, 1}, value}, {{1, 2}, value}, {{2, 3}, value}, {{0, 3}, value}};
    return {{{0, 1}, value}, {{0, 2}, value}, {{0, 3}, value}, {{1, 2}, value}, {{1, 3}, value}, {{2, 3}, value}};
}

}  // namespace oracle
