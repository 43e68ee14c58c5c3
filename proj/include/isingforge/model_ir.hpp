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

/// \file model_ir.hpp
/// \brief Platform-independent model (PIM), the gate-based and annealer
/// platform-specific models (PSMs), their text documents and validation.
///
/// All three documents share one line grammar: `key: value`, LF line
/// endings, `#` comments, blank lines ignored, lowercase keys. Canonical
/// output uses a fixed key order and `text::format_real` for reals, so
/// serialize(parse(serialize(x))) is byte-stable.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isingforge/error.hpp"
#include "isingforge/ising.hpp"
#include "isingforge/text.hpp"

namespace isingforge {

enum class Platform { Gate, Annealer };

inline std::string_view to_string(Platform p) { return p == Platform::Gate ? "gate" : "annealer"; }

inline std::optional<Platform> platform_from_string(std::string_view s) {
    if (s == "gate") return Platform::Gate;
    if (s == "annealer") return Platform::Annealer;
    return std::nullopt;
}

/// Uniform-constant description of the problem. `target` is routing
/// metadata and does not take part in equality.
struct Pim {
    std::size_t qubits = 0;
    double field_const = 0.0;
    double coupler_const = 0.0;
    Topology entanglement = Topology::Linear;
    std::optional<Platform> target;

    friend bool operator==(const Pim &a, const Pim &b) {
        return a.qubits == b.qubits && a.field_const == b.field_const && a.coupler_const == b.coupler_const &&
               a.entanglement == b.entanglement;
    }
};

struct AnnealerPsm {
    std::size_t qubits = 0;
    std::map<std::size_t, double> h;
    std::map<Edge, double> j;
    std::uint64_t reads = 100;
    std::uint64_t sweeps = 1000;
    double t_initial = 10.0;
    double t_final = 0.01;

    friend bool operator==(const AnnealerPsm &, const AnnealerPsm &) = default;
};

/// Z (one qubit) or ZZ (two qubits) Pauli string with a coefficient.
/// `support` is kept in ascending order.
struct PauliZTerm {
    double coefficient = 0.0;
    std::vector<std::size_t> support;

    friend bool operator==(const PauliZTerm &, const PauliZTerm &) = default;
};

/// "z0*z1" style label of a support.
inline std::string support_label(const std::vector<std::size_t> &support) {
    std::string out;
    for (std::size_t k = 0; k < support.size(); ++k) {
        if (k != 0) out += "*";
        out += "z" + std::to_string(support[k]);
    }
    return out;
}

struct OptimizerConfig {
    double learning_rate = 0.1;
    std::uint64_t max_iters = 2000;
    double tolerance = 1e-8;
    std::uint64_t restarts = 5;
    std::uint64_t seed = 42;

    friend bool operator==(const OptimizerConfig &, const OptimizerConfig &) = default;
};

struct GatePsm {
    std::size_t qubits = 0;
    std::size_t layers = 2;
    Topology entangle_pattern = Topology::Linear;
    std::vector<PauliZTerm> hamiltonian;
    OptimizerConfig optimizer;

    /// Terms in lexicographic support order, the order used on disk.
    std::vector<PauliZTerm> sorted_terms() const {
        auto terms = hamiltonian;
        std::stable_sort(terms.begin(), terms.end(),
                         [](const PauliZTerm &a, const PauliZTerm &b) { return a.support < b.support; });
        return terms;
    }

    /// The Hamiltonian is a sum, so term order does not matter.
    friend bool operator==(const GatePsm &a, const GatePsm &b) {
        return a.qubits == b.qubits && a.layers == b.layers && a.entangle_pattern == b.entangle_pattern &&
               a.optimizer == b.optimizer && a.sorted_terms() == b.sorted_terms();
    }
};

enum class Severity { Error, Warning };

struct Issue {
    Severity severity = Severity::Error;
    std::string field;
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Issue> issues;

    void error(std::string field, std::string message) {
        ok = false;
        issues.push_back({Severity::Error, std::move(field), std::move(message)});
    }
    void warn(std::string field, std::string message) {
        issues.push_back({Severity::Warning, std::move(field), std::move(message)});
    }

    /// Throws the first error as a ValidationError; no-op when ok.
    void throw_if_failed() const {
        for (const auto &issue : issues) {
            if (issue.severity == Severity::Error) throw ValidationError(issue.field, issue.message);
        }
    }
};

// ---------------------------------------------------------------------------
// Topology inference
// ---------------------------------------------------------------------------

/// First topology, in the order Linear, Circular, Full, whose edge set equals
/// `edges` exactly. The order decides the n=2 and n=3 coincidences.
inline Topology infer_topology(const std::set<Edge> &edges, std::size_t n) {
    for (Topology t : {Topology::Linear, Topology::Circular, Topology::Full}) {
        if (n < min_qubits(t)) continue;
        const auto expected = edge_set(t, n);
        if (std::set<Edge>(expected.begin(), expected.end()) == edges) return t;
    }
    throw UnknownTopology(std::vector<Edge>(edges.begin(), edges.end()));
}

/// The topology `infer_topology` reports for edge_set(t, n): differs from `t`
/// only where edge sets coincide (Full at n=2 is Linear, Full at n=3 is Circular).
inline Topology canonical_topology(Topology t, std::size_t n) {
    const auto edges = edge_set(t, n);
    return infer_topology({edges.begin(), edges.end()}, n);
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace detail {

inline void check_finite(ValidationReport &report, const std::string &field, double value) {
    if (!std::isfinite(value)) report.error(field, "must be finite");
}

inline bool all_equal(const auto &map) {
    if (map.empty()) return true;
    const double first = map.begin()->second;
    return std::all_of(map.begin(), map.end(), [&](const auto &kv) { return kv.second == first; });
}

}  // namespace detail

inline ValidationReport validate(const Pim &pim) {
    ValidationReport report;
    if (pim.qubits < 2) {
        report.error("qubits", "must be at least 2");
    } else if (pim.entanglement == Topology::Circular && pim.qubits < 3) {
        report.error("entanglement", "circular requires qubits >= 3");
    }
    detail::check_finite(report, "field", pim.field_const);
    detail::check_finite(report, "coupling", pim.coupler_const);
    return report;
}

inline ValidationReport validate(const AnnealerPsm &psm) {
    ValidationReport report;
    if (psm.qubits < 1) report.error("qubits", "must be at least 1");
    for (std::size_t i = 0; i < psm.qubits; ++i) {
        if (!psm.h.contains(i)) report.error("h", "missing entry for qubit " + std::to_string(i));
    }
    for (const auto &[i, value] : psm.h) {
        if (i >= psm.qubits) report.error("h", "qubit " + std::to_string(i) + " out of range");
        detail::check_finite(report, "h[" + std::to_string(i) + "]", value);
    }
    for (const auto &[edge, value] : psm.j) {
        const std::string key = std::to_string(edge.first) + "-" + std::to_string(edge.second);
        if (edge.first >= edge.second) report.error("j", "coupling " + key + " must satisfy i < j");
        if (edge.second >= psm.qubits || edge.first >= psm.qubits) {
            report.error("j", "coupling " + key + " out of range");
        }
        detail::check_finite(report, "j[" + key + "]", value);
    }
    if (psm.reads < 1) report.error("reads", "must be at least 1");
    if (psm.sweeps < 2) report.error("sweeps", "must be at least 2");
    if (!(psm.t_initial > 0.0) || !std::isfinite(psm.t_initial)) report.error("t_initial", "must be positive");
    if (!(psm.t_final > 0.0) || !std::isfinite(psm.t_final)) report.error("t_final", "must be positive");
    if (!(psm.t_final < psm.t_initial)) report.error("schedule", "t_final must be below t_initial");
    if (report.ok && (!detail::all_equal(psm.h) || !detail::all_equal(psm.j) || psm.j.empty())) {
        report.warn("model", "not representable as a PIM (non-uniform or missing constants)");
    }
    return report;
}

inline ValidationReport validate(const GatePsm &psm) {
    ValidationReport report;
    if (psm.qubits < min_qubits(psm.entangle_pattern)) {
        report.error("pattern", std::string(to_string(psm.entangle_pattern)) + " requires qubits >= " +
                                    std::to_string(min_qubits(psm.entangle_pattern)));
    }
    if (psm.layers < 1) report.error("layers", "must be at least 1");
    std::set<std::vector<std::size_t>> seen;
    std::set<std::size_t> fielded;
    for (const auto &term : psm.hamiltonian) {
        const std::string label = support_label(term.support);
        if (term.support.empty() || term.support.size() > 2) {
            report.error("hamiltonian", "term support must have 1 or 2 qubits, got " + label);
            continue;
        }
        if (!std::is_sorted(term.support.begin(), term.support.end())) {
            report.error("hamiltonian", "support " + label + " is not in ascending order");
        }
        if (term.support.size() == 2 && term.support[0] == term.support[1]) {
            report.error("hamiltonian", "support " + label + " repeats a qubit");
        }
        for (auto q : term.support) {
            if (q >= psm.qubits) report.error("hamiltonian", "support " + label + " out of range");
        }
        if (!seen.insert(term.support).second) report.error("hamiltonian", "duplicate support " + label);
        if (term.support.size() == 1) fielded.insert(term.support[0]);
        detail::check_finite(report, "hamiltonian[" + label + "]", term.coefficient);
    }
    const auto &opt = psm.optimizer;
    if (!(opt.learning_rate > 0.0) || !std::isfinite(opt.learning_rate)) {
        report.error("learning_rate", "must be positive");
    }
    if (opt.max_iters < 1) report.error("max_iters", "must be at least 1");
    if (!(opt.tolerance > 0.0) || !std::isfinite(opt.tolerance)) report.error("tolerance", "must be positive");
    if (opt.restarts < 1) report.error("restarts", "must be at least 1");
    if (report.ok && fielded.size() != psm.qubits) {
        report.warn("hamiltonian", "some qubits have no Z term; not representable as a PIM");
    }
    return report;
}

// ---------------------------------------------------------------------------
// Documents
// ---------------------------------------------------------------------------

namespace detail {

struct Entry {
    std::size_t line = 0;
    std::string key;
    std::string value;
};

/// Splits a document into entries, checks `kind` and `version`, rejects keys
/// outside `allowed` and duplicates of any key except `repeatable`.
class Document {
   public:
    Document(std::string_view text, std::string_view kind, std::initializer_list<std::string_view> allowed,
             std::string_view repeatable = {}) {
        std::size_t line_no = 0;
        for (auto raw : text::split(text, '\n')) {
            ++line_no;
            auto line = text::trim(raw);
            if (line.empty() || line.front() == '#') continue;
            if (const auto hash = line.find('#'); hash != std::string_view::npos) {
                line = text::trim(line.substr(0, hash));
            }
            const auto colon = line.find(':');
            if (colon == std::string_view::npos) throw SyntaxError(line_no, "expected 'key: value'");
            const auto key = text::trim(line.substr(0, colon));
            const auto value = text::trim(line.substr(colon + 1));
            if (key.empty() || !std::all_of(key.begin(), key.end(), [](char c) {
                    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
                })) {
                throw SyntaxError(line_no, "invalid key '" + std::string(key) + "'");
            }
            const bool known = key == "kind" || key == "version" ||
                               std::find(allowed.begin(), allowed.end(), key) != allowed.end();
            if (!known) throw SyntaxError(line_no, "unknown key '" + std::string(key) + "'");
            Entry entry{line_no, std::string(key), std::string(value)};
            if (!repeatable.empty() && key == repeatable) {
                repeated_.push_back(std::move(entry));
                continue;
            }
            if (entries_.contains(entry.key)) throw SyntaxError(line_no, "duplicate key '" + entry.key + "'");
            entries_.emplace(entry.key, std::move(entry));
        }

        const auto &k = require("kind");
        if (k.value != kind) {
            throw SyntaxError(k.line, "expected kind '" + std::string(kind) + "', found '" + k.value + "'");
        }
        const auto version = uint_field("version");
        if (version != 1) throw ValidationError("version", "unsupported version " + std::to_string(version));
    }

    const Entry &require(const std::string &key) const {
        const auto it = entries_.find(key);
        if (it == entries_.end()) throw ValidationError(key, "missing");
        return it->second;
    }

    const Entry *find(const std::string &key) const {
        const auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second;
    }

    const std::vector<Entry> &repeated() const noexcept { return repeated_; }

    std::uint64_t uint_field(const std::string &key) const {
        const auto &e = require(key);
        const auto v = text::parse_uint(e.value);
        if (!v) throw SyntaxError(e.line, "expected unsigned integer for '" + key + "', found '" + e.value + "'");
        return *v;
    }

    double real_field(const std::string &key) const {
        const auto &e = require(key);
        const auto v = text::parse_real(e.value);
        if (!v) throw SyntaxError(e.line, "expected real for '" + key + "', found '" + e.value + "'");
        return *v;
    }

    Topology topology_field(const std::string &key) const {
        const auto &e = require(key);
        const auto t = topology_from_string(e.value);
        if (!t) throw SyntaxError(e.line, "unknown " + key + " '" + e.value + "' (full|linear|circular)");
        return *t;
    }

   private:
    std::map<std::string, Entry> entries_;
    std::vector<Entry> repeated_;
};

inline std::size_t parse_index(std::string_view s, std::size_t line, std::string_view what) {
    const auto v = text::parse_uint(text::trim(s));
    if (!v) throw SyntaxError(line, "invalid " + std::string(what) + " index '" + std::string(s) + "'");
    return static_cast<std::size_t>(*v);
}

inline double parse_value(std::string_view s, std::size_t line) {
    const auto v = text::parse_real(text::trim(s));
    if (!v) throw SyntaxError(line, "invalid real '" + std::string(s) + "'");
    return *v;
}

}  // namespace detail

/// Reads the PIM document without range checks (syntax and presence only).
inline Pim read_pim(std::string_view text) {
    const detail::Document doc(text, "pim", {"qubits", "field", "coupling", "entanglement", "target"});
    Pim pim;
    pim.qubits = static_cast<std::size_t>(doc.uint_field("qubits"));
    pim.field_const = doc.real_field("field");
    pim.coupler_const = doc.real_field("coupling");
    pim.entanglement = doc.topology_field("entanglement");
    if (const auto *t = doc.find("target")) {
        pim.target = platform_from_string(t->value);
        if (!pim.target) throw SyntaxError(t->line, "unknown target '" + t->value + "' (gate|annealer)");
    }
    return pim;
}

inline Pim parse_pim(std::string_view text) {
    Pim pim = read_pim(text);
    validate(pim).throw_if_failed();
    return pim;
}

inline std::string serialize_pim(const Pim &pim) {
    std::string out;
    out += "kind: pim\n";
    out += "version: 1\n";
    out += "qubits: " + std::to_string(pim.qubits) + "\n";
    out += "field: " + text::format_real(pim.field_const) + "\n";
    out += "coupling: " + text::format_real(pim.coupler_const) + "\n";
    out += "entanglement: " + std::string(to_string(pim.entanglement)) + "\n";
    if (pim.target) out += "target: " + std::string(to_string(*pim.target)) + "\n";
    return out;
}

inline AnnealerPsm read_annealer_psm(std::string_view text) {
    const detail::Document doc(text, "psm-annealer",
                               {"qubits", "h", "j", "reads", "sweeps", "t_initial", "t_final"});
    AnnealerPsm psm;
    psm.qubits = static_cast<std::size_t>(doc.uint_field("qubits"));

    const auto &h = doc.require("h");
    if (!h.value.empty()) {
        for (auto item : text::split(h.value, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string_view::npos) throw SyntaxError(h.line, "expected '<i>=<real>' in h");
            const auto i = detail::parse_index(item.substr(0, eq), h.line, "qubit");
            if (!psm.h.emplace(i, detail::parse_value(item.substr(eq + 1), h.line)).second) {
                throw ValidationError("h", "duplicate qubit " + std::to_string(i));
            }
        }
    }
    const auto &j = doc.require("j");
    if (!j.value.empty()) {
        for (auto item : text::split(j.value, ',')) {
            const auto eq = item.find('=');
            const auto dash = item.find('-');
            if (eq == std::string_view::npos || dash == std::string_view::npos || dash > eq) {
                throw SyntaxError(j.line, "expected '<i>-<j>=<real>' in j");
            }
            const Edge edge{detail::parse_index(item.substr(0, dash), j.line, "qubit"),
                            detail::parse_index(item.substr(dash + 1, eq - dash - 1), j.line, "qubit")};
            if (!psm.j.emplace(edge, detail::parse_value(item.substr(eq + 1), j.line)).second) {
                throw ValidationError("j", "duplicate coupling " + std::to_string(edge.first) + "-" +
                                               std::to_string(edge.second));
            }
        }
    }
    psm.reads = doc.uint_field("reads");
    psm.sweeps = doc.uint_field("sweeps");
    psm.t_initial = doc.real_field("t_initial");
    psm.t_final = doc.real_field("t_final");
    return psm;
}

inline AnnealerPsm parse_annealer_psm(std::string_view text) {
    AnnealerPsm psm = read_annealer_psm(text);
    validate(psm).throw_if_failed();
    return psm;
}

inline std::string serialize_annealer_psm(const AnnealerPsm &psm) {
    std::string out;
    out += "kind: psm-annealer\n";
    out += "version: 1\n";
    out += "qubits: " + std::to_string(psm.qubits) + "\n";
    out += "h:";
    const char *sep = " ";
    for (const auto &[i, value] : psm.h) {
        out += sep + std::to_string(i) + "=" + text::format_real(value);
        sep = ",";
    }
    out += "\nj:";
    sep = " ";
    for (const auto &[edge, value] : psm.j) {
        out += sep + std::to_string(edge.first) + "-" + std::to_string(edge.second) + "=" + text::format_real(value);
        sep = ",";
    }
    out += "\n";
    out += "reads: " + std::to_string(psm.reads) + "\n";
    out += "sweeps: " + std::to_string(psm.sweeps) + "\n";
    out += "t_initial: " + text::format_real(psm.t_initial) + "\n";
    out += "t_final: " + text::format_real(psm.t_final) + "\n";
    return out;
}

inline GatePsm read_gate_psm(std::string_view text) {
    const detail::Document doc(text, "psm-gate",
                               {"qubits", "layers", "pattern", "term", "learning_rate", "max_iters", "tolerance",
                                "restarts", "seed"},
                               "term");
    GatePsm psm;
    psm.qubits = static_cast<std::size_t>(doc.uint_field("qubits"));
    psm.layers = static_cast<std::size_t>(doc.uint_field("layers"));
    psm.entangle_pattern = doc.topology_field("pattern");
    for (const auto &entry : doc.repeated()) {
        const auto eq = entry.value.find('=');
        if (eq == std::string::npos) throw SyntaxError(entry.line, "expected 'z<i>[*z<j>] = <real>'");
        const std::string_view lhs = text::trim(std::string_view(entry.value).substr(0, eq));
        PauliZTerm term;
        for (auto factor : text::split(lhs, '*')) {
            factor = text::trim(factor);
            if (factor.size() < 2 || factor.front() != 'z') {
                throw SyntaxError(entry.line, "expected Pauli factor 'z<i>', found '" + std::string(factor) + "'");
            }
            term.support.push_back(detail::parse_index(factor.substr(1), entry.line, "qubit"));
        }
        if (term.support.size() > 2) throw SyntaxError(entry.line, "terms have at most two Pauli factors");
        std::sort(term.support.begin(), term.support.end());
        term.coefficient = detail::parse_value(std::string_view(entry.value).substr(eq + 1), entry.line);
        psm.hamiltonian.push_back(std::move(term));
    }
    psm.optimizer.learning_rate = doc.real_field("learning_rate");
    psm.optimizer.max_iters = doc.uint_field("max_iters");
    psm.optimizer.tolerance = doc.real_field("tolerance");
    psm.optimizer.restarts = doc.uint_field("restarts");
    psm.optimizer.seed = doc.uint_field("seed");
    return psm;
}

inline GatePsm parse_gate_psm(std::string_view text) {
    GatePsm psm = read_gate_psm(text);
    validate(psm).throw_if_failed();
    return psm;
}

inline std::string serialize_gate_psm(const GatePsm &psm) {
    std::string out;
    out += "kind: psm-gate\n";
    out += "version: 1\n";
    out += "qubits: " + std::to_string(psm.qubits) + "\n";
    out += "layers: " + std::to_string(psm.layers) + "\n";
    out += "pattern: " + std::string(to_string(psm.entangle_pattern)) + "\n";
    for (const auto &term : psm.sorted_terms()) {
        out += "term: " + support_label(term.support) + " = " + text::format_real(term.coefficient) + "\n";
    }
    out += "learning_rate: " + text::format_real(psm.optimizer.learning_rate) + "\n";
    out += "max_iters: " + std::to_string(psm.optimizer.max_iters) + "\n";
    out += "tolerance: " + text::format_real(psm.optimizer.tolerance) + "\n";
    out += "restarts: " + std::to_string(psm.optimizer.restarts) + "\n";
    out += "seed: " + std::to_string(psm.optimizer.seed) + "\n";
    return out;
}

enum class DocumentKind { Pim, AnnealerPsm, GatePsm };

/// Kind named by the document's `kind:` line, if any.
inline std::optional<DocumentKind> detect_kind(std::string_view text) {
    for (auto raw : text::split(text, '\n')) {
        const auto line = text::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (!line.starts_with("kind")) continue;
        const auto colon = line.find(':');
        if (colon == std::string_view::npos || text::trim(line.substr(0, colon)) != "kind") continue;
        auto value = text::trim(line.substr(colon + 1));
        if (const auto hash = value.find('#'); hash != std::string_view::npos) value = text::trim(value.substr(0, hash));
        if (value == "pim") return DocumentKind::Pim;
        if (value == "psm-annealer") return DocumentKind::AnnealerPsm;
        if (value == "psm-gate") return DocumentKind::GatePsm;
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace isingforge
