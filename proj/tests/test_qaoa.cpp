// Copyright 2025 qopt-kit developers
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <cmath>
#include <complex>

#include "catch2/catch_amalgamated.hpp"
#include "qopt/encodings.hpp"
#include "qopt/instances.hpp"
#include "qopt/qaoa.hpp"

using namespace qopt;

static EncodingRecord two_var_mis() {
    Graph g(2);
    g.add_edge(0, 1);
    return encode_mis(g, 3.0);
}

TEST_CASE("statevector norm stays 1 through every layer") {
    const auto g = gen_maxcut(6, 0.5, 12);
    const auto rec = encode_maxcut(g);
    QaoaStatevector sv(rec.qubo);
    CHECK(std::abs(sv.norm() - 1.0) < 1e-10);
    for (int layer = 0; layer < 4; ++layer) {
        sv.apply_cost_layer(0.3 + 0.1 * layer);
        CHECK(std::abs(sv.norm() - 1.0) < 1e-10);
        sv.apply_mixer_layer(0.5 - 0.1 * layer);
        CHECK(std::abs(sv.norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("cost layer phases match the objective on all basis states (n=3)") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    const auto rec = encode_mis(g, 4.0);
    QaoaStatevector sv(rec.qubo);
    const double gamma = 0.37;
    sv.apply_cost_layer(gamma);
    double scale = 1.0;
    for (std::uint32_t b = 0; b < 8; ++b)
        scale = std::max(scale, std::abs(sv.energies()[b]));
    for (std::uint32_t b = 0; b < 8; ++b) {
        Bits x(3);
        for (int i = 0; i < 3; ++i) x[static_cast<std::size_t>(i)] = (b >> i) & 1;
        const double e = rec.qubo.energy(x);
        CHECK(sv.energies()[b] == e);
        const auto amp = sv.amplitudes()[b];
        const double expected_phase = -gamma * e / scale;
        const double got_phase = std::arg(amp);
        // compare as complex units to avoid branch-cut issues
        const std::complex<double> diff(std::cos(expected_phase) - std::cos(got_phase),
                                        std::sin(expected_phase) - std::sin(got_phase));
        CHECK(std::abs(diff) < 1e-12);
    }
}

TEST_CASE("exact expectation equals the amplitude-weighted objective sum") {
    const auto g = gen_maxcut(8, 0.5, 3);
    const auto rec = encode_maxcut(g);
    QaoaStatevector sv(rec.qubo);
    sv.prepare({0.4, 0.8, 0.7, 0.2}); // p=2
    double manual = 0.0;
    for (std::size_t b = 0; b < sv.amplitudes().size(); ++b)
        manual += std::norm(sv.amplitudes()[b]) * sv.energies()[b];
    CHECK(std::abs(sv.expectation() - manual) < 1e-12);
    // and against a fresh dense evaluation of each basis energy
    for (std::size_t b = 0; b < sv.amplitudes().size(); ++b) {
        Bits x(8);
        for (int i = 0; i < 8; ++i) x[static_cast<std::size_t>(i)] = (b >> i) & 1;
        CHECK(sv.energies()[b] == rec.qubo.energy(x));
    }
}

TEST_CASE("two-variable MIS lands on an optimum") {
    const auto rec = two_var_mis();
    const auto [set, trace] = qaoa_simulate(rec.qubo, {.depth = 1, .budget = 200, .shots = 500, .seed = 4});
    const auto& best = set.best();
    const bool optimal = (best.bits == Bits{1, 0}) || (best.bits == Bits{0, 1});
    CHECK(optimal);
    CHECK(trace.final_params.size() == 2);
    CHECK_FALSE(trace.iterations.empty());
}

TEST_CASE("optimizer incumbent never loses to the initial parameters") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto g = gen_maxcut(7, 0.6, 50 + seed);
        const auto rec = encode_maxcut(g);
        const auto [set, trace] =
            qaoa_simulate(rec.qubo, {.depth = 2, .budget = 60, .shots = 100, .seed = seed});
        QaoaStatevector sv(rec.qubo);
        sv.prepare(trace.iterations.front().params);
        const double initial = sv.expectation();
        sv.prepare(trace.final_params);
        CHECK(sv.expectation() <= initial + 1e-12);
    }
}

TEST_CASE("qaoa guards") {
    const Qubo q(21);
    CHECK_THROWS_WITH(qaoa_simulate(q, {}), Catch::Matchers::ContainsSubstring("21"));
    const Qubo small(2);
    CHECK_THROWS_AS(qaoa_simulate(small, {.depth = 0}), std::invalid_argument);
    CHECK_THROWS_AS(qaoa_simulate(small, {.depth = 1, .budget = 0}), std::invalid_argument);
}

TEST_CASE("qaoa sampling is deterministic in the seed") {
    const auto rec = two_var_mis();
    const QaoaParams p{.depth = 1, .budget = 40, .shots = 200, .seed = 9};
    const auto [a, ta] = qaoa_simulate(rec.qubo, p);
    const auto [b, tb] = qaoa_simulate(rec.qubo, p);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].bits == b.records[i].bits);
        CHECK(a.records[i].count == b.records[i].count);
    }
    CHECK(ta.final_params == tb.final_params);
}
