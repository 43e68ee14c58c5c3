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

/// \file codegen.hpp
/// \brief Model-to-code generation: Python SDK scripts from each PSM.
///
/// Output is a pure function of the PSM. The first line is a banner that
/// identifies the generator and template version. Model constants sit
/// between `# --- declarations ---` markers, one entry per line.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "isingforge/ising.hpp"
#include "isingforge/model_ir.hpp"
#include "isingforge/text.hpp"

namespace isingforge {

inline constexpr std::string_view kGateBanner = "# generated-by: isingforge gate v1";
inline constexpr std::string_view kAnnealerBanner = "# generated-by: isingforge annealer v1";
inline constexpr std::string_view kDeclarationsBegin = "# --- declarations ---";
inline constexpr std::string_view kDeclarationsEnd = "# --- end declarations ---";

namespace detail {

inline std::string py_index_list(const std::vector<std::size_t> &support) {
    std::string out = "[";
    for (std::size_t k = 0; k < support.size(); ++k) {
        if (k != 0) out += ", ";
        out += std::to_string(support[k]);
    }
    return out + "]";
}

}  // namespace detail

/// Qiskit script: builds the Z/ZZ operator and the RY+CZ ansatz, then runs
/// the same parameter-shift gradient descent as `minimize`.
inline std::string emit_gate_code(const GatePsm &psm) {
    validate(psm).throw_if_failed();
    const auto terms = psm.sorted_terms();
    const auto edges = edge_set(psm.entangle_pattern, psm.qubits);
    const auto &opt = psm.optimizer;

    std::string out;
    out += std::string(kGateBanner) + "\n";
    out += "# Variational ground-state search: " + std::to_string(psm.qubits) + " qubits, " +
           std::string(to_string(psm.entangle_pattern)) + " entangler, " + std::to_string(psm.layers) +
           " layers.\n";
    out += "import numpy as np\n";
    out += "from qiskit import QuantumCircuit\n";
    out += "from qiskit.circuit import ParameterVector\n";
    out += "from qiskit.quantum_info import SparsePauliOp, Statevector\n";
    out += "\n";
    out += "NUM_QUBITS = " + std::to_string(psm.qubits) + "\n";
    out += "LAYERS = " + std::to_string(psm.layers) + "\n";
    out += "LEARNING_RATE = " + text::format_real(opt.learning_rate) + "\n";
    out += "MAX_ITERS = " + std::to_string(opt.max_iters) + "\n";
    out += "TOLERANCE = " + text::format_real(opt.tolerance) + "\n";
    out += "RESTARTS = " + std::to_string(opt.restarts) + "\n";
    out += "SEED = " + std::to_string(opt.seed) + "\n";
    out += "CONVERGENCE_WINDOW = 25\n";
    out += "\n";
    out += std::string(kDeclarationsBegin) + "\n";
    out += "TERMS = [\n";
    for (const auto &term : terms) {
        if (term.support.size() != 2) continue;
        out += "    (\"ZZ\", " + detail::py_index_list(term.support) + ", " + text::format_real(term.coefficient) +
               "),\n";
    }
    for (const auto &term : terms) {
        if (term.support.size() != 1) continue;
        out += "    (\"Z\", " + detail::py_index_list(term.support) + ", " + text::format_real(term.coefficient) +
               "),\n";
    }
    out += "]\n";
    out += std::string(kDeclarationsEnd) + "\n";
    out += "ENTANGLERS = [";
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (k != 0) out += ", ";
        out += "(" + std::to_string(edges[k].first) + ", " + std::to_string(edges[k].second) + ")";
    }
    out += "]\n";
    out += R"PY(
HAMILTONIAN = SparsePauliOp.from_sparse_list(TERMS, num_qubits=NUM_QUBITS)


def build_ansatz():
    theta = ParameterVector("theta", NUM_QUBITS * (LAYERS + 1))
    circuit = QuantumCircuit(NUM_QUBITS)
    for q in range(NUM_QUBITS):
        circuit.ry(theta[q], q)
    for layer in range(1, LAYERS + 1):
        for a, b in ENTANGLERS:
            circuit.cz(a, b)
        for q in range(NUM_QUBITS):
            circuit.ry(theta[layer * NUM_QUBITS + q], q)
    return circuit


ANSATZ = build_ansatz()


def energy(values):
    state = Statevector(ANSATZ.assign_parameters(values))
    return float(np.real(state.expectation_value(HAMILTONIAN)))


def gradient(values):
    grad = np.zeros_like(values)
    for k in range(len(values)):
        shifted = values.copy()
        shifted[k] += np.pi / 2
        plus = energy(shifted)
        shifted[k] -= np.pi
        minus = energy(shifted)
        grad[k] = (plus - minus) / 2
    return grad


def descend(seed):
    rng = np.random.default_rng(seed)
    values = rng.uniform(-np.pi, np.pi, ANSATZ.num_parameters)
    previous = None
    quiet = 0
    current = None
    for _ in range(MAX_ITERS):
        current = energy(values)
        grad = gradient(values)
        if previous is not None and abs(current - previous) < TOLERANCE:
            quiet += 1
        else:
            quiet = 0
        previous = current
        if quiet >= CONVERGENCE_WINDOW or np.linalg.norm(grad) < 1e-6:
            break
        values = values - LEARNING_RATE * grad
    return current


def main():
    best = min(descend(SEED + r) for r in range(RESTARTS))
    print(f"energy={best}")


if __name__ == "__main__":
    main()
)PY";
    return out;
}

/// D-Wave Ocean script: declares h and J, samples `reads` times through an
/// embedding composite (or the classical sampler with --simulate) and prints
/// the lowest-energy sample.
inline std::string emit_annealer_code(const AnnealerPsm &psm) {
    validate(psm).throw_if_failed();

    std::string out;
    out += std::string(kAnnealerBanner) + "\n";
    out += "# Ising sampling on a quantum annealer: " + std::to_string(psm.qubits) + " qubits, " +
           std::to_string(psm.j.size()) + " couplers.\n";
    out += "# Pass --simulate to use the classical simulated-annealing sampler instead.\n";
    out += "import sys\n";
    out += "\n";
    out += std::string(kDeclarationsBegin) + "\n";
    out += "h = {\n";
    for (const auto &[i, value] : psm.h) {
        out += "    " + std::to_string(i) + ": " + text::format_real(value) + ",\n";
    }
    out += "}\n";
    out += "J = {\n";
    for (const auto &[edge, value] : psm.j) {
        const auto a = std::to_string(edge.first);
        const auto b = std::to_string(edge.second);
        out += "    (" + a + ", " + b + "): " + text::format_real(value) + ",  # " + a + "-" + b + "\n";
    }
    out += "}\n";
    out += "reads = " + std::to_string(psm.reads) + "\n";
    out += std::string(kDeclarationsEnd) + "\n";
    out += "\n";
    out += "NUM_QUBITS = " + std::to_string(psm.qubits) + "\n";
    out += "SWEEPS = " + std::to_string(psm.sweeps) + "\n";
    out += "T_INITIAL = " + text::format_real(psm.t_initial) + "\n";
    out += "T_FINAL = " + text::format_real(psm.t_final) + "\n";
    out += R"PY(

def make_sampler():
    if "--simulate" in sys.argv[1:]:
        from dwave.samplers import SimulatedAnnealingSampler

        return SimulatedAnnealingSampler(), {
            "num_sweeps": SWEEPS,
            "beta_range": (1.0 / T_INITIAL, 1.0 / T_FINAL),
            "beta_schedule_type": "geometric",
        }
    from dwave.system import DWaveSampler, EmbeddingComposite

    return EmbeddingComposite(DWaveSampler()), {}


def main():
    sampler, options = make_sampler()
    sampleset = sampler.sample_ising(h, J, num_reads=reads, **options)
    best = sampleset.first
    config = "".join("0" if best.sample[q] == 1 else "1" for q in range(NUM_QUBITS))
    print(f"config={config}")
    print(f"energy={best.energy}")


if __name__ == "__main__":
    main()
)PY";
    return out;
}

/// Lines strictly between the declaration markers of generated text.
inline std::vector<std::string> declaration_lines(std::string_view code) {
    std::vector<std::string> lines;
    bool inside = false;
    for (auto line : text::split(code, '\n')) {
        if (line == kDeclarationsBegin) {
            inside = true;
        } else if (line == kDeclarationsEnd) {
            inside = false;
        } else if (inside) {
            lines.emplace_back(line);
        }
    }
    return lines;
}

}  // namespace isingforge
