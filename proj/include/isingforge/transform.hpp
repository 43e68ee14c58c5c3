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

/// \file transform.hpp
/// \brief Model-to-model transformations between the PIM and both PSMs.
///
/// Lowering (PIM -> PSM) fills in solver defaults; lifting (PSM -> PIM)
/// requires exactly uniform constants and a recognizable topology. There is
/// no direct gate <-> annealer path: go through the PIM.

#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "isingforge/error.hpp"
#include "isingforge/ising.hpp"
#include "isingforge/model_ir.hpp"

namespace isingforge {

inline AnnealerPsm pim_to_annealer(const Pim &pim) {
    validate(pim).throw_if_failed();
    AnnealerPsm psm;
    psm.qubits = pim.qubits;
    for (std::size_t i = 0; i < pim.qubits; ++i) psm.h.emplace(i, pim.field_const);
    for (const auto &edge : edge_set(pim.entanglement, pim.qubits)) psm.j.emplace(edge, pim.coupler_const);
    psm.reads = 100;
    psm.sweeps = 1000;
    psm.t_initial = 10.0;
    psm.t_final = 0.01;
    return psm;
}

inline GatePsm pim_to_gate(const Pim &pim) {
    validate(pim).throw_if_failed();
    GatePsm psm;
    psm.qubits = pim.qubits;
    psm.layers = 2;
    psm.entangle_pattern = pim.entanglement;
    for (const auto &[i, j] : edge_set(pim.entanglement, pim.qubits)) {
        psm.hamiltonian.push_back({pim.coupler_const, {i, j}});
    }
    for (std::size_t i = 0; i < pim.qubits; ++i) {
        psm.hamiltonian.push_back({pim.field_const, {i}});
    }
    psm.optimizer = OptimizerConfig{};
    return psm;
}

inline Pim annealer_to_pim(const AnnealerPsm &psm) {
    validate(psm).throw_if_failed();
    if (psm.qubits < 2) throw NotRepresentable("PIM requires at least 2 qubits");
    if (!detail::all_equal(psm.h)) throw NotRepresentable("PIM requires uniform constants (h differs)");
    if (psm.j.empty()) throw UnknownTopology({});
    if (!detail::all_equal(psm.j)) throw NotRepresentable("PIM requires uniform constants (j differs)");

    std::set<Edge> edges;
    for (const auto &[edge, value] : psm.j) edges.insert(edge);
    Pim pim;
    pim.qubits = psm.qubits;
    pim.field_const = psm.h.begin()->second;
    pim.coupler_const = psm.j.begin()->second;
    pim.entanglement = infer_topology(edges, psm.qubits);
    pim.target = Platform::Annealer;
    return pim;
}

inline Pim gate_to_pim(const GatePsm &psm) {
    validate(psm).throw_if_failed();
    std::map<std::size_t, double> fields;
    std::map<Edge, double> couplings;
    for (const auto &term : psm.hamiltonian) {
        if (term.support.size() == 1) {
            fields.emplace(term.support[0], term.coefficient);
        } else {
            couplings.emplace(Edge{term.support[0], term.support[1]}, term.coefficient);
        }
    }
    for (std::size_t i = 0; i < psm.qubits; ++i) {
        if (!fields.contains(i)) throw MissingFieldTerm(i);
    }
    if (!detail::all_equal(fields)) throw NotRepresentable("PIM requires uniform constants (Z coefficients differ)");
    if (couplings.empty()) throw UnknownTopology({});
    if (!detail::all_equal(couplings)) {
        throw NotRepresentable("PIM requires uniform constants (ZZ coefficients differ)");
    }

    std::set<Edge> edges;
    for (const auto &[edge, value] : couplings) edges.insert(edge);
    Pim pim;
    pim.qubits = psm.qubits;
    pim.field_const = fields.begin()->second;
    pim.coupler_const = couplings.begin()->second;
    pim.entanglement = infer_topology(edges, psm.qubits);
    pim.target = Platform::Gate;
    return pim;
}

// Classical problems described by each model.

inline IsingModel to_model(const Pim &pim) {
    validate(pim).throw_if_failed();
    return build_model(pim.qubits, pim.field_const, pim.coupler_const, pim.entanglement);
}

inline IsingModel to_model(const AnnealerPsm &psm) {
    validate(psm).throw_if_failed();
    std::vector<double> fields(psm.qubits, 0.0);
    for (const auto &[i, value] : psm.h) fields[i] = value;
    return IsingModel(std::move(fields), IsingModel::Couplings(psm.j.begin(), psm.j.end()));
}

/// Qubits without a Z term get a zero field.
inline IsingModel to_model(const GatePsm &psm) {
    validate(psm).throw_if_failed();
    std::vector<double> fields(psm.qubits, 0.0);
    IsingModel::Couplings couplings;
    for (const auto &term : psm.hamiltonian) {
        if (term.support.size() == 1) {
            fields[term.support[0]] = term.coefficient;
        } else {
            couplings.emplace(Edge{term.support[0], term.support[1]}, term.coefficient);
        }
    }
    return IsingModel(std::move(fields), std::move(couplings));
}

}  // namespace isingforge
