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

/// \file vqe.hpp
/// \brief Variational ground-state search on the statevector simulator.
///
/// The ansatz is a hardware-efficient RY+CZ circuit: an RY layer, then L
/// repetitions of (CZ on every edge of the entangling pattern, RY layer).
/// Cost is the exact expectation of the diagonal Ising Hamiltonian; gradients
/// use the RY parameter-shift rule; optimization is seeded multi-restart
/// gradient descent.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <utility>
#include <vector>

#include "isingforge/error.hpp"
#include "isingforge/ising.hpp"
#include "isingforge/model_ir.hpp"
#include "isingforge/random.hpp"
#include "isingforge/statevector.hpp"
#include "isingforge/text.hpp"

namespace isingforge {

struct AnsatzSpec {
    std::size_t n = 0;
    /// Entangling layers. 0 leaves a single RY layer (no entanglers).
    std::size_t layers = 2;
    Topology pattern = Topology::Linear;

    std::size_t parameter_count() const noexcept { return n * (layers + 1); }
};

/// Rotation angles in radians; parameter l*n + q drives qubit q in RY layer l.
using ParameterVector = std::vector<double>;

struct TraceRow {
    std::size_t iteration = 0;
    double energy = 0.0;
    double gradient_norm = 0.0;

    friend bool operator==(const TraceRow &, const TraceRow &) = default;
};

using VqeTrace = std::vector<TraceRow>;

struct VqeResult {
    double energy = 0.0;
    ParameterVector parameters;
    /// Trace of the winning restart.
    VqeTrace trace;
    bool converged = false;
    std::size_t best_restart = 0;
    /// Final energy of every restart, in restart order.
    std::vector<double> restart_energies;
};

/// Consecutive small energy changes required to declare convergence.
inline constexpr std::size_t kConvergenceWindow = 25;
inline constexpr double kGradientNormStop = 1e-6;

inline AnsatzSpec ansatz_for(const GatePsm &psm) { return {psm.qubits, psm.layers, psm.entangle_pattern}; }

inline Circuit build_ansatz(const AnsatzSpec &spec, const ParameterVector &params) {
    if (params.size() != spec.parameter_count()) {
        throw DimensionMismatch("ansatz expects " + std::to_string(spec.parameter_count()) + " parameters, got " +
                                std::to_string(params.size()));
    }
    Circuit circuit(spec.n);
    for (std::size_t q = 0; q < spec.n; ++q) circuit.add(Gate::ry(q, params[q]));
    if (spec.layers == 0) return circuit;
    const auto edges = edge_set(spec.pattern, spec.n);
    for (std::size_t layer = 1; layer <= spec.layers; ++layer) {
        for (const auto &[a, b] : edges) circuit.add(Gate::cz(a, b));
        for (std::size_t q = 0; q < spec.n; ++q) circuit.add(Gate::ry(q, params[layer * spec.n + q]));
    }
    return circuit;
}

inline StateVector ansatz_state(const AnsatzSpec &spec, const ParameterVector &params) {
    return apply_circuit(init_zero(spec.n), build_ansatz(spec, params));
}

/// Cost function bound to one (ansatz, model) pair; caches the Hamiltonian
/// diagonal so repeated evaluations only simulate the circuit.
class VqeObjective {
   public:
    VqeObjective(AnsatzSpec spec, const IsingModel &model) : spec_(spec), diagonal_(diagonal(model)) {
        if (model.size() != spec.n) {
            throw DimensionMismatch("ansatz has " + std::to_string(spec.n) + " qubits, model has " +
                                    std::to_string(model.size()));
        }
    }

    const AnsatzSpec &spec() const noexcept { return spec_; }

    double energy(const ParameterVector &params) const {
        return expectation(ansatz_state(spec_, params), diagonal_);
    }

    /// dE/dtheta_k = (E(theta_k + pi/2) - E(theta_k - pi/2)) / 2.
    std::vector<double> gradient(const ParameterVector &params) const {
        if (params.size() != spec_.parameter_count()) {
            throw DimensionMismatch("ansatz expects " + std::to_string(spec_.parameter_count()) +
                                    " parameters, got " + std::to_string(params.size()));
        }
        constexpr double shift = std::numbers::pi / 2;
        std::vector<double> grad(params.size());
        ParameterVector shifted = params;
        for (std::size_t k = 0; k < params.size(); ++k) {
            shifted[k] = params[k] + shift;
            const double plus = energy(shifted);
            shifted[k] = params[k] - shift;
            const double minus = energy(shifted);
            shifted[k] = params[k];
            grad[k] = (plus - minus) / 2;
        }
        return grad;
    }

   private:
    AnsatzSpec spec_;
    std::vector<double> diagonal_;
};

inline double energy_of(const AnsatzSpec &spec, const IsingModel &model, const ParameterVector &params) {
    return VqeObjective(spec, model).energy(params);
}

inline std::vector<double> gradient(const AnsatzSpec &spec, const IsingModel &model, const ParameterVector &params) {
    return VqeObjective(spec, model).gradient(params);
}

namespace detail {

struct RestartOutcome {
    double energy = 0.0;
    ParameterVector parameters;
    VqeTrace trace;
    bool converged = false;
};

inline RestartOutcome descend(const VqeObjective &objective, const OptimizerConfig &opt, std::uint64_t seed) {
    Rng rng(seed);
    ParameterVector theta(objective.spec().parameter_count());
    for (auto &t : theta) t = uniform(rng, -std::numbers::pi, std::numbers::pi);

    RestartOutcome out;
    std::size_t quiet = 0;
    for (std::size_t it = 0; it < opt.max_iters; ++it) {
        const double e = objective.energy(theta);
        const auto grad = objective.gradient(theta);
        double norm2 = 0.0;
        for (double g : grad) norm2 += g * g;
        const double grad_norm = std::sqrt(norm2);

        if (!out.trace.empty() && std::abs(e - out.trace.back().energy) < opt.tolerance) {
            ++quiet;
        } else {
            quiet = 0;
        }
        out.trace.push_back({it, e, grad_norm});
        if (quiet >= kConvergenceWindow || grad_norm < kGradientNormStop) {
            out.converged = true;
            break;
        }
        if (it + 1 == opt.max_iters) break;
        for (std::size_t k = 0; k < theta.size(); ++k) theta[k] -= opt.learning_rate * grad[k];
    }
    out.energy = out.trace.back().energy;
    out.parameters = std::move(theta);
    return out;
}

}  // namespace detail

/// Runs `restarts` seeded descents (restart r uses seed + r) and keeps the
/// lowest final energy, ties going to the earlier restart.
inline VqeResult minimize(const AnsatzSpec &spec, const IsingModel &model, const OptimizerConfig &optimizer) {
    if (optimizer.restarts < 1 || optimizer.max_iters < 1) {
        throw InvalidArgument("optimizer needs at least one restart and one iteration");
    }
    const VqeObjective objective(spec, model);
    VqeResult result;
    for (std::uint64_t r = 0; r < optimizer.restarts; ++r) {
        auto outcome = detail::descend(objective, optimizer, optimizer.seed + r);
        result.restart_energies.push_back(outcome.energy);
        if (r == 0 || outcome.energy < result.energy) {
            result.energy = outcome.energy;
            result.parameters = std::move(outcome.parameters);
            result.trace = std::move(outcome.trace);
            result.converged = outcome.converged;
            result.best_restart = static_cast<std::size_t>(r);
        }
    }
    return result;
}

/// Most probable basis state (lowest index on ties) and its probability.
inline std::pair<SpinConfig, double> dominant_config(const StateVector &state) {
    const auto p = probabilities(state);
    std::size_t best = 0;
    for (std::size_t k = 1; k < p.size(); ++k) {
        if (p[k] > p[best]) best = k;
    }
    return {SpinConfig::from_index(best, state.size()), p[best]};
}

inline std::pair<SpinConfig, double> dominant_config(const AnsatzSpec &spec, const IsingModel &model,
                                                     const VqeResult &result) {
    if (model.size() != spec.n) throw DimensionMismatch("ansatz and model sizes differ");
    return dominant_config(ansatz_state(spec, result.parameters));
}

inline void write_trace_csv(std::ostream &os, const VqeTrace &trace) {
    os << "iteration,energy,gradient_norm\n";
    for (const auto &row : trace) {
        os << row.iteration << ',' << text::format_real(row.energy) << ',' << text::format_real(row.gradient_norm)
           << '\n';
    }
}

}  // namespace isingforge
