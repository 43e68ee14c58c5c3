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

#include <catch_amalgamated.hpp>

#include <fstream>
#include <regex>
#include <sstream>

#include "isingforge/codegen.hpp"
#include "isingforge/transform.hpp"

using namespace isingforge;

namespace {

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Pim pim_of(Topology t) { return Pim{4, 1.0, 1.0, t, std::nullopt}; }

std::size_t count_matching(const std::vector<std::string> &lines, const std::regex &re) {
    std::size_t k = 0;
    for (const auto &l : lines) k += std::regex_match(l, re);
    return k;
}

// Every h and J entry appears exactly once in the declarations with its value verbatim.
void check_annealer_faithful(const AnnealerPsm &psm) {
    const auto decl = declaration_lines(emit_annealer_code(psm));
    const std::regex h_line(R"(    (\d+): (\S+),)");
    const std::regex j_line(R"(    \((\d+), (\d+)\): (\S+),  # (\d+)-(\d+))");
    std::map<std::size_t, std::string> seen_h;
    std::map<Edge, std::string> seen_j;
    for (const auto &line : decl) {
        std::smatch m;
        if (std::regex_match(line, m, h_line)) {
            CHECK(seen_h.emplace(std::stoul(m[1]), m[2]).second);
        } else if (std::regex_match(line, m, j_line)) {
            CHECK(m[1] == m[4]);
            CHECK(m[2] == m[5]);
            CHECK(seen_j.emplace(Edge{std::stoul(m[1]), std::stoul(m[2])}, m[3]).second);
        }
    }
    CHECK(seen_h.size() == psm.h.size());
    CHECK(seen_j.size() == psm.j.size());
    for (const auto &[i, v] : psm.h) CHECK(seen_h[i] == text::format_real(v));
    for (const auto &[e, v] : psm.j) CHECK(seen_j[e] == text::format_real(v));
    CHECK(count_matching(decl, std::regex("reads = " + std::to_string(psm.reads))) == 1);
}

void check_gate_faithful(const GatePsm &psm) {
    const auto decl = declaration_lines(emit_gate_code(psm));
    const std::regex term_line(R"d(    \("(Z+)", \[([0-9, ]+)\], (\S+)\),)d");
    std::map<std::string, std::string> seen;
    for (const auto &line : decl) {
        std::smatch m;
        if (!std::regex_match(line, m, term_line)) continue;
        const std::string indices = m[2].str();
        std::string label;
        for (auto idx : text::split(indices, ',')) {
            if (!label.empty()) label += '*';
            label += "z" + std::string(text::trim(idx));
        }
        CHECK(static_cast<std::ptrdiff_t>(m[1].str().size()) == std::count(label.begin(), label.end(), 'z'));
        CHECK(seen.emplace(label, m[3]).second);
    }
    CHECK(seen.size() == psm.hamiltonian.size());
    for (const auto &t : psm.hamiltonian) CHECK(seen[support_label(t.support)] == text::format_real(t.coefficient));
}

}  // namespace

TEST_CASE("generated code matches the frozen goldens", "[codegen]") {
    for (Topology t : kAllTopologies) {
        const std::string stem = std::string(ISINGFORGE_GOLDEN_DIR) + "/" + std::string(to_string(t)) + "4";
        INFO(stem);
        CHECK(emit_gate_code(pim_to_gate(pim_of(t))) == slurp(stem + ".gate.py"));
        CHECK(emit_annealer_code(pim_to_annealer(pim_of(t))) == slurp(stem + ".annealer.py"));
    }
}

TEST_CASE("generation is deterministic", "[codegen]") {
    const auto gate = pim_to_gate(pim_of(Topology::Full));
    const auto annealer = pim_to_annealer(pim_of(Topology::Full));
    CHECK(emit_gate_code(gate) == emit_gate_code(gate));
    CHECK(emit_annealer_code(annealer) == emit_annealer_code(annealer));
}

TEST_CASE("banners", "[codegen]") {
    const auto gate = emit_gate_code(pim_to_gate(pim_of(Topology::Linear)));
    const auto annealer = emit_annealer_code(pim_to_annealer(pim_of(Topology::Linear)));
    CHECK(gate.substr(0, gate.find('\n')) == kGateBanner);
    CHECK(annealer.substr(0, annealer.find('\n')) == kAnnealerBanner);
}

TEST_CASE("term and coupler listings", "[codegen]") {
    const auto circular = declaration_lines(emit_gate_code(pim_to_gate(pim_of(Topology::Circular))));
    CHECK(count_matching(circular, std::regex(R"(    \("ZZ", .*)")) == 4);
    CHECK(count_matching(circular, std::regex(R"(    \("Z", .*)")) == 4);

    const auto linear = emit_annealer_code(pim_to_annealer(pim_of(Topology::Linear)));
    for (const char *edge : {"# 0-1", "# 1-2", "# 2-3"}) CHECK(linear.find(edge) != std::string::npos);
    CHECK(linear.find("# 0-3") == std::string::npos);
    CHECK(linear.find("reads = 100") != std::string::npos);
}

TEST_CASE("static faithfulness", "[codegen][property]") {
    for (Topology t : kAllTopologies) {
        check_gate_faithful(pim_to_gate(pim_of(t)));
        check_annealer_faithful(pim_to_annealer(pim_of(t)));
    }
    // Irregular constants and sizes.
    AnnealerPsm a;
    a.qubits = 5;
    a.h = {{0, -0.5}, {1, 1.25}, {2, 0.0}, {3, 2.0}, {4, -1.75}};
    a.j = {{{0, 4}, 0.125}, {{1, 3}, -2.0}, {{2, 3}, 1.5}};
    a.reads = 17;
    check_annealer_faithful(a);

    GatePsm g;
    g.qubits = 3;
    g.layers = 1;
    g.entangle_pattern = Topology::Full;
    g.hamiltonian = {{0.75, {0}}, {-1.5, {1}}, {0.3, {2}}, {2.0, {0, 2}}, {-0.25, {1, 2}}};
    check_gate_faithful(g);
}

TEST_CASE("invalid psms are rejected", "[codegen]") {
    AnnealerPsm a;
    a.qubits = 2;
    a.h = {{0, 1.0}, {1, 1.0}};
    a.t_final = 20.0;
    CHECK_THROWS_AS(emit_annealer_code(a), ValidationError);
}
