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

/// \file statevector.hpp
/// \brief Dense statevector simulation for RY/CZ/CX circuits.
///
/// Amplitude index k holds qubit q in bit (k >> q) & 1, i.e. qubit 0 is the
/// least-significant bit. With the bit string rendering of SpinConfig this
/// means index 10 (0b1010) is the configuration "0101".

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isingforge/error.hpp"
#include "isingforge/ising.hpp"
#include "isingforge/model_ir.hpp"
#include "isingforge/random.hpp"

namespace isingforge {

inline constexpr std::size_t kMaxStateQubits = 20;

struct Gate {
    enum class Kind { RY, CZ, CX };

    Kind kind = Kind::RY;
    /// Rotated qubit for RY, control for CZ/CX.
    std::size_t qubit = 0;
    /// Target for CZ/CX; unused for RY.
    std::size_t target = 0;
    /// Radians; RY only.
    double angle = 0.0;

    static Gate ry(std::size_t q, double theta) { return {Kind::RY, q, 0, theta}; }
    static Gate cz(std::size_t a, std::size_t b) { return {Kind::CZ, a, b, 0.0}; }
    static Gate cx(std::size_t control, std::size_t target) { return {Kind::CX, control, target, 0.0}; }

    friend bool operator==(const Gate &, const Gate &) = default;
};

class Circuit {
   public:
    explicit Circuit(std::size_t n) : n_(n) {}

    std::size_t size() const noexcept { return n_; }
    const std::vector<Gate> &gates() const noexcept { return gates_; }

    Circuit &add(const Gate &gate) {
        if (gate.qubit >= n_ || (gate.kind != Gate::Kind::RY && gate.target >= n_)) {
            throw IndexError("gate qubit out of range for " + std::to_string(n_) + "-qubit circuit");
        }
        if (gate.kind != Gate::Kind::RY && gate.qubit == gate.target) {
            throw InvalidArgument("two-qubit gate needs distinct qubits");
        }
        gates_.push_back(gate);
        return *this;
    }

    /// Reversed gate order with negated rotation angles.
    Circuit inverse() const {
        Circuit out(n_);
        for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
            Gate g = *it;
            if (g.kind == Gate::Kind::RY) g.angle = -g.angle;
            out.gates_.push_back(g);
        }
        return out;
    }

   private:
    std::size_t n_;
    std::vector<Gate> gates_;
};

class StateVector {
   public:
    using Amplitude = std::complex<double>;

    /// |0...0> on n qubits.
    explicit StateVector(std::size_t n) : n_(n) {
        if (n == 0) throw InvalidSize("a state needs at least one qubit");
        if (n > kMaxStateQubits) {
            throw TooLarge("statevector supports at most " + std::to_string(kMaxStateQubits) + " qubits, got " +
                           std::to_string(n));
        }
        amplitudes_.assign(std::size_t{1} << n, Amplitude{0.0, 0.0});
        amplitudes_[0] = 1.0;
    }

    /// Computational basis state for `config`.
    static StateVector basis(const SpinConfig &config) {
        StateVector s(config.size());
        s.amplitudes_[0] = 0.0;
        s.amplitudes_[config.index()] = 1.0;
        return s;
    }

    std::size_t size() const noexcept { return n_; }
    std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }

    double norm() const {
        double sum = 0.0;
        for (const auto &a : amplitudes_) sum += std::norm(a);
        return std::sqrt(sum);
    }

    void apply(const Gate &gate) {
        if (gate.qubit >= n_ || (gate.kind != Gate::Kind::RY && gate.target >= n_)) {
            throw IndexError("gate qubit out of range for " + std::to_string(n_) + "-qubit state");
        }
        switch (gate.kind) {
            case Gate::Kind::RY:
                apply_ry(gate.qubit, gate.angle);
                break;
            case Gate::Kind::CZ:
                if (gate.qubit == gate.target) throw InvalidArgument("CZ needs distinct qubits");
                apply_cz(gate.qubit, gate.target);
                break;
            case Gate::Kind::CX:
                if (gate.qubit == gate.target) throw InvalidArgument("CX needs distinct qubits");
                apply_cx(gate.qubit, gate.target);
                break;
        }
    }

    void apply(const Circuit &circuit) {
        if (circuit.size() != n_) {
            throw DimensionMismatch("circuit has " + std::to_string(circuit.size()) + " qubits, state has " +
                                    std::to_string(n_));
        }
        for (const auto &g : circuit.gates()) apply(g);
    }

   private:
    void apply_ry(std::size_t q, double theta) {
        const double c = std::cos(theta / 2);
        const double s = std::sin(theta / 2);
        const std::size_t mask = std::size_t{1} << q;
        for (std::size_t k = 0; k < amplitudes_.size(); ++k) {
            if ((k & mask) != 0) continue;
            const Amplitude a0 = amplitudes_[k];
            const Amplitude a1 = amplitudes_[k | mask];
            amplitudes_[k] = c * a0 - s * a1;
            amplitudes_[k | mask] = s * a0 + c * a1;
        }
    }

    void apply_cz(std::size_t a, std::size_t b) {
        const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
        for (std::size_t k = 0; k < amplitudes_.size(); ++k) {
            if ((k & mask) == mask) amplitudes_[k] = -amplitudes_[k];
        }
    }

    void apply_cx(std::size_t control, std::size_t target) {
        const std::size_t cmask = std::size_t{1} << control;
        const std::size_t tmask = std::size_t{1} << target;
        for (std::size_t k = 0; k < amplitudes_.size(); ++k) {
            if ((k & cmask) != 0 && (k & tmask) == 0) std::swap(amplitudes_[k], amplitudes_[k | tmask]);
        }
    }

    std::size_t n_;
    std::vector<Amplitude> amplitudes_;
};

inline StateVector init_zero(std::size_t n) { return StateVector(n); }

inline StateVector apply_gate(StateVector state, const Gate &gate) {
    state.apply(gate);
    return state;
}

inline StateVector apply_circuit(StateVector state, const Circuit &circuit) {
    state.apply(circuit);
    return state;
}

inline std::vector<double> probabilities(const StateVector &state) {
    std::vector<double> p;
    p.reserve(state.amplitudes().size());
    for (const auto &a : state.amplitudes()) p.push_back(std::norm(a));
    return p;
}

/// Classical energy of every basis state, indexed like the amplitudes.
inline std::vector<double> diagonal(const IsingModel &model) {
    const std::size_t n = model.size();
    if (n > kMaxStateQubits) throw TooLarge("diagonal supports at most 20 qubits");
    std::vector<double> out(std::size_t{1} << n);
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = energy(model, SpinConfig::from_index(k, n));
    }
    return out;
}

/// sum_k |a_k|^2 * diag[k].
inline double expectation(const StateVector &state, std::span<const double> diag) {
    if (diag.size() != state.amplitudes().size()) throw DimensionMismatch("diagonal length differs from state");
    double sum = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t k = 0; k < amps.size(); ++k) sum += std::norm(amps[k]) * diag[k];
    return sum;
}

/// <psi|H|psi> for the diagonal Ising Hamiltonian, as the probability-weighted
/// classical energy.
inline double expectation_diagonal(const StateVector &state, const IsingModel &model) {
    if (state.size() != model.size()) {
        throw DimensionMismatch("state has " + std::to_string(state.size()) + " qubits, model has " +
                                std::to_string(model.size()));
    }
    return expectation(state, diagonal(model));
}

/// <psi| Z_{support} |psi> from amplitude parities.
inline double pauli_z_expectation(const StateVector &state, std::span<const std::size_t> support) {
    std::size_t mask = 0;
    for (auto q : support) {
        if (q >= state.size()) throw IndexError("Pauli support out of range");
        mask |= std::size_t{1} << q;
    }
    double sum = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t k = 0; k < amps.size(); ++k) {
        const double p = std::norm(amps[k]);
        sum += (std::popcount(k & mask) & 1) != 0 ? -p : p;
    }
    return sum;
}

/// Term-by-term Pauli-Z route to the same expectation; independent of the
/// classical energy function.
inline double expectation_terms(const StateVector &state, std::span<const PauliZTerm> terms) {
    double sum = 0.0;
    for (const auto &term : terms) sum += term.coefficient * pauli_z_expectation(state, term.support);
    return sum;
}

inline double expectation_terms(const StateVector &state, const IsingModel &model) {
    if (state.size() != model.size()) throw DimensionMismatch("state and model sizes differ");
    std::vector<PauliZTerm> terms;
    for (const auto &[edge, j] : model.couplings()) terms.push_back({j, {edge.first, edge.second}});
    for (std::size_t i = 0; i < model.size(); ++i) terms.push_back({model.fields()[i], {i}});
    return expectation_terms(state, terms);
}

/// Multinomial readout of `shots` measurements in the computational basis.
inline std::map<SpinConfig, std::uint64_t> sample(const StateVector &state, std::uint64_t shots,
                                                  std::uint64_t seed) {
    if (shots == 0) throw InvalidArgument("shots must be positive");
    const auto p = probabilities(state);
    std::vector<double> cumulative(p.size());
    std::partial_sum(p.begin(), p.end(), cumulative.begin());
    Rng rng(seed);
    std::map<std::size_t, std::uint64_t> by_index;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = uniform01(rng) * cumulative.back();
        auto k = static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), u) -
                                          cumulative.begin());
        // Zero-probability outcomes repeat their predecessor's cumulative value,
        // so upper_bound never lands on them; only rounding at the top end
        // can run past the last outcome.
        if (k == p.size()) {
            k = p.size() - 1;
            while (k > 0 && p[k] == 0.0) --k;
        }
        ++by_index[k];
    }
    std::map<SpinConfig, std::uint64_t> counts;
    for (const auto &[k, c] : by_index) counts.emplace(SpinConfig::from_index(k, state.size()), c);
    return counts;
}

}  // namespace isingforge
