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
#include <sstream>

#include "isingforge/anneal.hpp"
#include "oracle.hpp"

using namespace isingforge;

namespace {

struct Case {
    const char *name;
    Topology topology;
};

constexpr Case kCases[] = {{"linear", Topology::Linear}, {"circular", Topology::Circular}, {"full", Topology::Full}};

}  // namespace

TEST_CASE("schedule", "[anneal]") {
    const AnnealSchedule s;
    CHECK(s.temperature(0) == 10.0);
    CHECK(std::abs(s.temperature(999) - 0.01) < 1e-15);
    for (std::uint64_t k = 1; k < 1000; ++k) CHECK(s.temperature(k) < s.temperature(k - 1));
    CHECK_THROWS_AS((AnnealSchedule{1, 10, 0.01}.check()), InvalidArgument);
    CHECK_THROWS_AS((AnnealSchedule{10, 1, 2}.check()), InvalidArgument);
    CHECK_THROWS_AS((AnnealSchedule{10, 1, 0}.check()), InvalidArgument);

    AnnealerPsm psm;
    psm.sweeps = 50;
    psm.t_initial = 3;
    psm.t_final = 0.5;
    const auto from = schedule_for(psm);
    CHECK(from.sweeps == 50);
    CHECK(from.t_initial == 3.0);
    CHECK(from.t_final == 0.5);
}

TEST_CASE("anneal examples", "[anneal]") {
    const auto circular = build_model(4, 1, 1, Topology::Circular);
    const auto samples = anneal(circular, AnnealSchedule{}, 100, 0);
    CHECK(samples.total_reads() == 100);
    CHECK(best(samples).second == -4.0);
    const auto winner = best(samples).first.str();
    CHECK((winner == "0101" || winner == "1010"));

    const IsingModel single({1.0}, {});
    const auto [config, e] = best(anneal(single, AnnealSchedule{}, 10, 3));
    CHECK(config.str() == "1");
    CHECK(e == -1.0);
}

TEST_CASE("every seed reaches the ground energy", "[anneal]") {
    for (const auto &c : kCases) {
        const auto ground = oracle::brute_force({1, 1, 1, 1}, oracle::couplings_4(c.name, 1.0));
        const auto model = build_model(4, 1, 1, c.topology);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            INFO(c.name << " seed " << seed);
            const auto [config, e] = best(anneal(model, AnnealSchedule{}, 100, seed));
            CHECK(e == ground.energy);
            CHECK(ground.minimizers.count(config.str()) == 1);
        }
    }
}

TEST_CASE("sample sets are ordered and energies are exact", "[anneal]") {
    const auto model = build_model(6, 0.25, 1, Topology::Full);
    const auto samples = anneal(model, AnnealSchedule{20, 5, 1}, 200, 11);
    REQUIRE(samples.records.size() > 1);
    std::map<std::pair<std::size_t, std::size_t>, double> j;
    for (const auto &e : edge_set(Topology::Full, 6)) j[e] = 1.0;
    for (std::size_t k = 0; k < samples.records.size(); ++k) {
        const auto &r = samples.records[k];
        CHECK(r.energy == oracle::ising_energy(std::vector<double>(6, 0.25), j, r.config.str()));
        CHECK(r.occurrences > 0);
        if (k > 0) {
            const auto &prev = samples.records[k - 1];
            CHECK((prev.energy < r.energy || (prev.energy == r.energy && prev.config < r.config)));
        }
    }
    CHECK(samples.total_reads() == 200);
}

TEST_CASE("anneal is deterministic and thread-independent", "[anneal]") {
    const auto model = build_model(5, -0.5, 1, Topology::Circular);
    const AnnealSchedule s{100, 4, 0.05};
    const auto a = anneal(model, s, 37, 5);
    CHECK(a == anneal(model, s, 37, 5));
    CHECK(a == anneal(model, s, 37, 5, 4));
    CHECK(a == anneal(model, s, 37, 5, 100));
}

TEST_CASE("acceptance probability", "[anneal]") {
    CHECK(acceptance_probability(-1.0, 0.01) == 1.0);
    CHECK(acceptance_probability(0.0, 0.01) == 1.0);
    CHECK(acceptance_probability(2.0, 0.01) < 1e-80);
    CHECK(std::abs(acceptance_probability(2.0, 1e6) - 1.0) < 1e-5);
    CHECK(std::abs(acceptance_probability(1.0, 1.0) - std::exp(-1.0)) < 1e-15);
}

TEST_CASE("anneal error paths", "[anneal]") {
    const auto model = build_model(3, 1, 1, Topology::Linear);
    CHECK_THROWS_AS(anneal(model, AnnealSchedule{}, 0, 1), InvalidArgument);
    CHECK_THROWS_AS(anneal(model, AnnealSchedule{0, 10, 0.01}, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(best(SampleSet{}), EmptySampleSet);
}

TEST_CASE("samples csv", "[anneal]") {
    SampleSet s;
    s.records.push_back({SpinConfig::parse("0101"), -4.0, 60});
    s.records.push_back({SpinConfig::parse("1010"), -4.0, 40});
    std::ostringstream os;
    write_samples_csv(os, s);
    CHECK(os.str() == "config,energy,occurrences\n0101,-4.0,60\n1010,-4.0,40\n");
}
