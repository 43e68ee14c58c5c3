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

/// \file cli.hpp
/// \brief The `isingforge` command line: validate, transform, solve, codegen
/// and inspect model documents.
///
/// stdout carries `key=value` lines (or a generated document when no `-o`
/// is given); diagnostics go to stderr. Exit codes: 0 success, 1 validation
/// or semantic error, 2 I/O or syntax error, 3 VQE did not converge,
/// 64 usage error.

#pragma once

#include <cstdint>
#include <fstream>
#include <iterator>
#include <optional>
#include <ranges>
#include <set>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "isingforge/isingforge.hpp"

namespace isingforge::cli {

enum ExitCode : int {
    kOk = 0,
    kSemanticError = 1,
    kInputError = 2,
    kNotConverged = 3,
    kUsage = 64,
};

class IoError : public Error {
   public:
    using Error::Error;
};

using Document = std::variant<Pim, AnnealerPsm, GatePsm>;

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_output(const std::string &path, const std::string &content, std::ostream &out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << content)) throw IoError("cannot write '" + path + "'");
}

inline DocumentKind kind_of(const std::string &text) {
    const auto kind = detect_kind(text);
    if (!kind) throw SyntaxError(0, "missing or unknown 'kind' (pim, psm-annealer, psm-gate)");
    return *kind;
}

/// Parses and validates; throws on the first problem.
inline Document load(const std::string &path) {
    const auto text = read_file(path);
    switch (kind_of(text)) {
        case DocumentKind::Pim:
            return parse_pim(text);
        case DocumentKind::AnnealerPsm:
            return parse_annealer_psm(text);
        case DocumentKind::GatePsm:
            return parse_gate_psm(text);
    }
    throw SyntaxError(0, "unreachable");
}

inline std::string_view kind_name(const Document &doc) {
    switch (doc.index()) {
        case 0:
            return "pim";
        case 1:
            return "psm-annealer";
        default:
            return "psm-gate";
    }
}

inline Pim lift(const Document &doc) {
    return std::visit(
        [](const auto &d) -> Pim {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Pim>) {
                return d;
            } else if constexpr (std::is_same_v<T, AnnealerPsm>) {
                return annealer_to_pim(d);
            } else {
                return gate_to_pim(d);
            }
        },
        doc);
}

inline IsingModel model_of(const Document &doc) {
    return std::visit([](const auto &d) { return to_model(d); }, doc);
}

inline int report_error(const std::exception &e, std::ostream &err) {
    if (dynamic_cast<const SyntaxError *>(&e) != nullptr || dynamic_cast<const IoError *>(&e) != nullptr) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    err << "error: " << e.what() << "\n";
    return kSemanticError;
}

struct Options {
    std::string file;
    std::string output;
    std::string to;
    std::string backend;
    std::string target;
    std::optional<std::uint64_t> seed;
    std::string trace_path;
    std::string samples_path;
};

inline int cmd_validate(const Options &opt, std::ostream &out, std::ostream &err) {
    const auto text = read_file(opt.file);
    const auto kind = kind_of(text);
    ValidationReport report;
    std::string_view name;
    try {
        switch (kind) {
            case DocumentKind::Pim:
                name = "pim";
                report = validate(read_pim(text));
                break;
            case DocumentKind::AnnealerPsm:
                name = "psm-annealer";
                report = validate(read_annealer_psm(text));
                break;
            case DocumentKind::GatePsm:
                name = "psm-gate";
                report = validate(read_gate_psm(text));
                break;
        }
    } catch (const ValidationError &e) {
        report.error(e.field(), e.message());
    }
    std::size_t errors = 0;
    std::size_t warnings = 0;
    for (const auto &issue : report.issues) {
        const bool is_error = issue.severity == Severity::Error;
        (is_error ? errors : warnings) += 1;
        err << (is_error ? "error " : "warning ") << issue.field << ": " << issue.message << "\n";
    }
    out << "kind=" << name << "\n";
    out << "ok=" << (report.ok ? "true" : "false") << "\n";
    out << "errors=" << errors << "\n";
    out << "warnings=" << warnings << "\n";
    return report.ok ? kOk : kSemanticError;
}

inline int cmd_transform(const Options &opt, std::ostream &out, std::ostream &err) {
    const auto doc = load(opt.file);
    const bool identity = (opt.to == "pim" && doc.index() == 0) || (opt.to == "annealer" && doc.index() == 1) ||
                          (opt.to == "gate" && doc.index() == 2);
    if (identity) {
        err << "notice: input is already a " << kind_name(doc) << " document; nothing to transform\n";
        return kSemanticError;
    }
    std::string result;
    if (opt.to == "pim") {
        result = serialize_pim(lift(doc));
    } else if (opt.to == "gate") {
        result = serialize_gate_psm(pim_to_gate(lift(doc)));
    } else {
        result = serialize_annealer_psm(pim_to_annealer(lift(doc)));
    }
    write_output(opt.output, result, out);
    return kOk;
}

inline int cmd_solve(const Options &opt, std::ostream &out, std::ostream &err) {
    if (!opt.trace_path.empty() && opt.backend != "vqe") {
        err << "error: --trace requires --backend vqe\n";
        return kUsage;
    }
    if (!opt.samples_path.empty() && opt.backend != "anneal") {
        err << "error: --samples requires --backend anneal\n";
        return kUsage;
    }
    const auto doc = load(opt.file);

    if (opt.backend == "exact") {
        const auto ground = exact_ground(model_of(doc));
        out << "energy=" << text::format_minimal(ground.energy) << "\n";
        out << "config=" << ground.representative.str() << "\n";
        out << "degenerate=" << ground.minimizers.size() << "\n";
        return kOk;
    }

    if (opt.backend == "vqe") {
        GatePsm psm;
        if (const auto *pim = std::get_if<Pim>(&doc)) {
            psm = pim_to_gate(*pim);
        } else if (const auto *gate = std::get_if<GatePsm>(&doc)) {
            psm = *gate;
        } else {
            err << "error: the vqe backend needs a PIM or a gate PSM, got " << kind_name(doc) << "\n";
            return kSemanticError;
        }
        if (opt.seed) psm.optimizer.seed = *opt.seed;
        const auto spec = ansatz_for(psm);
        const auto model = to_model(psm);
        const auto result = minimize(spec, model, psm.optimizer);
        const auto [config, probability] = dominant_config(spec, model, result);
        if (!opt.trace_path.empty()) {
            std::ostringstream csv;
            write_trace_csv(csv, result.trace);
            write_output(opt.trace_path, csv.str(), out);
        }
        out << "energy=" << text::format_minimal(result.energy) << "\n";
        out << "config=" << config.str() << "\n";
        out << "probability=" << text::format_minimal(probability) << "\n";
        out << "converged=" << (result.converged ? "true" : "false") << "\n";
        out << "iterations=" << result.trace.size() << "\n";
        out << "restart=" << result.best_restart << "\n";
        if (!result.converged) {
            err << "warning: optimizer hit max_iters without converging\n";
            return kNotConverged;
        }
        return kOk;
    }

    AnnealerPsm psm;
    if (const auto *pim = std::get_if<Pim>(&doc)) {
        psm = pim_to_annealer(*pim);
    } else if (const auto *annealer = std::get_if<AnnealerPsm>(&doc)) {
        psm = *annealer;
    } else {
        err << "error: the anneal backend needs a PIM or an annealer PSM, got " << kind_name(doc) << "\n";
        return kSemanticError;
    }
    const auto samples = anneal(to_model(psm), schedule_for(psm), psm.reads, opt.seed.value_or(0));
    const auto &top = samples.records.front();
    if (!opt.samples_path.empty()) {
        std::ostringstream csv;
        write_samples_csv(csv, samples);
        write_output(opt.samples_path, csv.str(), out);
    }
    out << "energy=" << text::format_minimal(top.energy) << "\n";
    out << "config=" << top.config.str() << "\n";
    out << "occurrences=" << top.occurrences << "\n";
    out << "reads=" << samples.total_reads() << "\n";
    return kOk;
}

inline int cmd_codegen(const Options &opt, std::ostream &out, std::ostream &) {
    const auto doc = load(opt.file);
    std::string code;
    if (opt.target == "gate") {
        const auto *gate = std::get_if<GatePsm>(&doc);
        code = emit_gate_code(gate != nullptr ? *gate : pim_to_gate(lift(doc)));
    } else {
        const auto *annealer = std::get_if<AnnealerPsm>(&doc);
        code = emit_annealer_code(annealer != nullptr ? *annealer : pim_to_annealer(lift(doc)));
    }
    write_output(opt.output, code, out);
    return kOk;
}

inline int cmd_inspect(const Options &opt, std::ostream &out, std::ostream &) {
    const auto doc = load(opt.file);
    const auto model = model_of(doc);
    out << "kind=" << kind_name(doc) << "\n";
    out << "qubits=" << model.size() << "\n";

    std::set<Edge> edges;
    for (const auto &[edge, j] : model.couplings()) edges.insert(edge);
    std::string topology = "unknown";
    if (const auto *pim = std::get_if<Pim>(&doc)) {
        topology = to_string(pim->entanglement);
    } else if (model.size() >= 2) {
        try {
            topology = to_string(infer_topology(edges, model.size()));
        } catch (const UnknownTopology &) {
        }
    }
    out << "topology=" << topology << "\n";
    if (const auto *gate = std::get_if<GatePsm>(&doc)) {
        out << "pattern=" << to_string(gate->entangle_pattern) << "\n";
        out << "layers=" << gate->layers << "\n";
    }

    out << "edges=";
    const char *sep = "";
    for (const auto &[i, j] : model.couplings() | std::views::keys) {
        out << sep << i << "-" << j;
        sep = ",";
    }
    out << "\n";

    std::vector<PauliZTerm> terms;
    if (const auto *gate = std::get_if<GatePsm>(&doc)) {
        terms = gate->sorted_terms();
    } else {
        for (const auto &[edge, j] : model.couplings()) terms.push_back({j, {edge.first, edge.second}});
        for (std::size_t i = 0; i < model.size(); ++i) terms.push_back({model.fields()[i], {i}});
        std::stable_sort(terms.begin(), terms.end(),
                         [](const PauliZTerm &a, const PauliZTerm &b) { return a.support < b.support; });
    }
    for (const auto &term : terms) {
        out << "term." << support_label(term.support) << "=" << text::format_minimal(term.coefficient) << "\n";
    }
    return kOk;
}

/// Process entry. `args` excludes the program name.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Ising ground-state toolchain: model validation, transformation, solving and code generation",
                 "isingforge"};
    app.require_subcommand(1);
    Options opt;

    auto *validate_cmd = app.add_subcommand("validate", "Parse and validate a .pim/.apsm/.gpsm document");
    validate_cmd->add_option("file", opt.file, "Model document")->required();

    auto *transform_cmd = app.add_subcommand("transform", "Model-to-model transformation");
    transform_cmd->add_option("--to", opt.to, "Target model")
        ->required()
        ->check(CLI::IsMember({"pim", "gate", "annealer"}));
    transform_cmd->add_option("file", opt.file, "Model document")->required();
    transform_cmd->add_option("-o,--output", opt.output, "Output file (default stdout)");

    auto *solve_cmd = app.add_subcommand("solve", "Compute the ground-state energy");
    solve_cmd->add_option("--backend", opt.backend, "Solver backend")
        ->required()
        ->check(CLI::IsMember({"exact", "vqe", "anneal"}));
    solve_cmd->add_option("file", opt.file, "Model document")->required();
    solve_cmd->add_option("--seed", opt.seed, "Override the solver seed");
    solve_cmd->add_option("--trace", opt.trace_path, "Write the VQE trace as CSV");
    solve_cmd->add_option("--samples", opt.samples_path, "Write the annealer sample set as CSV");

    auto *codegen_cmd = app.add_subcommand("codegen", "Emit a platform SDK script");
    codegen_cmd->add_option("--target", opt.target, "Target platform")
        ->required()
        ->check(CLI::IsMember({"gate", "annealer"}));
    codegen_cmd->add_option("file", opt.file, "Model document")->required();
    codegen_cmd->add_option("-o,--output", opt.output, "Output file (default stdout)");

    auto *inspect_cmd = app.add_subcommand("inspect", "Print qubits, topology, edges and terms");
    inspect_cmd->add_option("file", opt.file, "Model document")->required();

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("isingforge");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(opt, out, err);
        if (transform_cmd->parsed()) return cmd_transform(opt, out, err);
        if (solve_cmd->parsed()) return cmd_solve(opt, out, err);
        if (codegen_cmd->parsed()) return cmd_codegen(opt, out, err);
        return cmd_inspect(opt, out, err);
    } catch (const std::exception &e) {
        return report_error(e, err);
    }
}

}  // namespace isingforge::cli
