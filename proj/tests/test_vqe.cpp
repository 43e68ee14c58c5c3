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

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "isingforge/vqe.hpp"
#include "oracle.hpp"

using namespace isingforge;
using Catch::Matchers::WithinAbs;

namespace {

struct Case {
    const char *name;
    Topology topology;
};

constexpr Case kCases[] = {{"linear", Topology::Linear}, {"circular", Topology::Circular}, {"full", Topology::Full}};

std::size_t count_kind(const Circuit &c, Gate::Kind kind) {
    std::size_t k = 0;
    for (const auto &g : c.gates()) k += g.kind == kind;
    return k;
}

ParameterVector random_parameters(std::mt19937_64 &rng, std::size_t count) {
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    ParameterVector p(count);
    for (auto &x : p) x = angle(rng);
    return p;
}

}  // namespace

TEST_CASE("ansatz structure", "[vqe]") {
    const AnsatzSpec spec{4, 2, Topology::Circular};
    CHECK(spec.parameter_count() == 12);
    const auto c = build_ansatz(spec, ParameterVector(12, 0.0));
    CHECK(count_kind(c, Gate::Kind::RY) == 12);
    CHECK(count_kind(c, Gate::Kind::CZ) == 8);

    const auto small = build_ansatz({2, 1, Topology::Linear}, {0.1, 0.2, 0.3, 0.4});
    REQUIRE(small.gates().size() == 5);
    CHECK(small.gates()[0] == Gate::ry(0, 0.1));
    CHECK(small.gates()[1] == Gate::ry(1, 0.2));
    CHECK(small.gates()[2] == Gate::cz(0, 1));
    CHECK(small.gates()[3] == Gate::ry(0, 0.3));
    CHECK(small.gates()[4] == Gate::ry(1, 0.4));

    CHECK(build_ansatz({3, 0, Topology::Full}, {1, 2, 3}).gates().size() == 3);
    CHECK_THROWS_AS(build_ansatz(spec, ParameterVector(11, 0.0)), DimensionMismatch);
}

TEST_CASE("energy examples", "[vqe]") {
    // All-zero angles leave |0000>, whose linear-4 energy is 3 + 4.
    const auto linear = build_model(4, 1, 1, Topology::Linear);
    CHECK(energy_of({4, 2, Topology::Linear}, linear, ParameterVector(12, 0.0)) == 7.0);

    // One qubit, h = 1, no entanglers: E(theta) = cos(theta).
    const IsingModel toy({1.0}, {});
    const AnsatzSpec one{1, 0, Topology::Linear};
    for (double theta : {0.0, 0.3, 1.0, std::numbers::pi / 2, 2.5, std::numbers::pi}) {
        CHECK_THAT(energy_of(one, toy, {theta}), WithinAbs(std::cos(theta), 1e-14));
    }
    CHECK_THAT(gradient(one, toy, {std::numbers::pi / 2})[0], WithinAbs(-1.0, 1e-14));
    CHECK_THROWS_AS(energy_of({3, 1, Topology::Linear}, linear, ParameterVector(6, 0.0)), DimensionMismatch);
}

TEST_CASE("parameter-shift gradient matches finite differences", "[vqe][property]") {
    std::mt19937_64 rng(2024);
    for (const auto &c : kCases) {
        const AnsatzSpec spec{4, 2, c.topology};
        const auto model = build_model(4, 1, 1, c.topology);
        const VqeObjective objective(spec, model);
        for (int point = 0; point < 5; ++point) {
            const auto theta = random_parameters(rng, spec.parameter_count());
            const auto grad = objective.gradient(theta);
            constexpr double step = 1e-5;
            for (std::size_t k = 0; k < theta.size(); ++k) {
                auto plus = theta;
                auto minus = theta;
                plus[k] += step;
                minus[k] -= step;
                const double fd = (objective.energy(plus) - objective.energy(minus)) / (2 * step);
                CHECK_THAT(grad[k], WithinAbs(fd, 1e-6));
            }
        }
    }
}

TEST_CASE("variational bound", "[vqe][property]") {
    std::mt19937_64 rng(99);
    for (const auto &c : kCases) {
        const auto ground = oracle::brute_force({1, 1, 1, 1}, oracle::couplings_4(c.name, 1.0));
        const AnsatzSpec spec{4, 2, c.topology};
        const auto model = build_model(4, 1, 1, c.topology);
        for (int trial = 0; trial < 200; ++trial) {
            CHECK(energy_of(spec, model, random_parameters(rng, 12)) >= ground.energy - 1e-12);
        }
    }
}

TEST_CASE("minimize reaches the exact ground energy", "[vqe]") {
    for (const auto &c : kCases) {
        INFO(c.name);
        const auto ground = oracle::brute_force({1, 1, 1, 1}, oracle::couplings_4(c.name, 1.0));
        const AnsatzSpec spec{4, 2, c.topology};
        const auto model = build_model(4, 1, 1, c.topology);
        const auto result = minimize(spec, model, OptimizerConfig{});

        CHECK(std::abs(result.energy - ground.energy) <= 1e-3);
        CHECK(result.converged);
        CHECK(result.restart_energies.size() == 5);
        CHECK(result.trace.size() <= 2000);
        CHECK(result.trace.back().energy <= result.trace.front().energy);
        CHECK(result.energy == result.restart_energies[result.best_restart]);
        for (std::size_t r = 0; r < result.best_restart; ++r) CHECK(result.restart_energies[r] > result.energy);
        for (double e : result.restart_energies) CHECK(e >= result.energy);
        CHECK_THAT(energy_of(spec, model, result.parameters), WithinAbs(result.energy, 1e-9));

        const auto [config, p] = dominant_config(spec, model, result);
        CHECK(ground.minimizers.count(config.str()) == 1);

        // Mass on the ground set is at least 1 - (E - E0) / gap.
        const auto probs = probabilities(ansatz_state(spec, result.parameters));
        double mass = 0.0;
        for (std::size_t k = 0; k < probs.size(); ++k) {
            if (ground.minimizers.count(oracle::bits_of(k, 4))) mass += probs[k];
        }
        const double gap = ground.first_excited - ground.energy;
        CHECK(mass >= 1.0 - (result.energy - ground.energy) / gap - 1e-9);
    }
}

TEST_CASE("minimize is deterministic", "[vqe]") {
    const AnsatzSpec spec{3, 1, Topology::Linear};
    const auto model = build_model(3, 0.5, -1, Topology::Linear);
    OptimizerConfig opt;
    opt.restarts = 2;
    const auto a = minimize(spec, model, opt);
    const auto b = minimize(spec, model, opt);
    CHECK(a.energy == b.energy);
    CHECK(a.parameters == b.parameters);
    CHECK(a.trace == b.trace);
    opt.seed = 7;
    CHECK(minimize(spec, model, opt).parameters != a.parameters);

    opt.restarts = 0;
    CHECK_THROWS_AS(minimize(spec, model, opt), InvalidArgument);
}

TEST_CASE("iteration cap reports non-convergence", "[vqe]") {
    OptimizerConfig opt;
    opt.max_iters = 3;
    opt.restarts = 1;
    const auto r = minimize({4, 2, Topology::Full}, build_model(4, 1, 1, Topology::Full), opt);
    CHECK_FALSE(r.converged);
    CHECK(r.trace.size() == 3);
}

TEST_CASE("dominant_config", "[vqe]") {
    const auto [config, p] = dominant_config(StateVector::basis(SpinConfig::parse("1")));
    CHECK(config.str() == "1");
    CHECK(p == 1.0);
    // Ties go to the lowest index.
    const auto half = apply_gate(init_zero(1), Gate::ry(0, std::numbers::pi / 2));
    CHECK(dominant_config(half).first.str() == "0");
}

TEST_CASE("trace csv", "[vqe]") {
    std::ostringstream os;
    write_trace_csv(os, {{0, 1.5, 0.25}, {1, -2.0, 0.0}});
    CHECK(os.str() == "iteration,energy,gradient_norm\n0,1.5,0.25\n1,-2.0,0.0\n");
}
