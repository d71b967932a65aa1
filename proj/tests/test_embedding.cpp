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

#include <set>

#include "catch2/catch_amalgamated.hpp"
#include "qopt/clique_embedding.hpp"
#include "qopt/embedding.hpp"
#include "qopt/instances.hpp"
#include "qopt/qubit_cost.hpp"

using namespace qopt;

static Graph complete_graph(int k) {
    Graph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    return g;
}

TEST_CASE("chimera clique embeddings validate for k = 1..20") {
    for (int k = 1; k <= 20; ++k) {
        const auto [topo, emb] = embed_clique_chimera(k);
        CHECK(topo.param() == (k + 3) / 4);
        const auto report = validate_embedding(complete_graph(k), topo, emb);
        INFO("k = " << k);
        CHECK(report.valid);
    }
}

TEST_CASE("chimera K_20 geometry: each quadruple touches five cells") {
    const auto [topo, emb] = embed_clique_chimera(20);
    CHECK(topo.param() == 5);
    for (int g = 0; g < 5; ++g) {
        std::set<std::pair<int, int>> cells;
        for (int t = 0; t < 4; ++t)
            for (int q : emb.chains[static_cast<std::size_t>(4 * g + t)]) {
                const auto& c = topo.coord(q);
                cells.insert({c[0], c[1]});
            }
        CHECK(cells.size() == 5);
    }
}

TEST_CASE("chimera k=4 uses one cell with chains of size <= 2") {
    const auto [topo, emb] = embed_clique_chimera(4);
    CHECK(topo.node_count() == 8);
    for (const auto& chain : emb.chains) {
        CHECK(chain.size() >= 1);
        CHECK(chain.size() <= 2);
    }
    CHECK(validate_embedding(complete_graph(4), topo, emb).valid);
}

TEST_CASE("pegasus clique embeddings validate and respect N_QA for k <= 14") {
    for (int k = 1; k <= 14; ++k) {
        const auto [topo, emb] = embed_clique_pegasus(k);
        const auto report = validate_embedding(complete_graph(k), topo, emb);
        INFO("k = " << k << " (M = " << topo.param() << ")");
        CHECK(report.valid);
        CHECK(report.physical_qubits <= n_qa(k));
        CHECK(report.physical_qubits <= 24 * topo.param() * (topo.param() - 1));
    }
}

TEST_CASE("pegasus k=2 is a trivial two-chain embedding") {
    const auto [topo, emb] = embed_clique_pegasus(2);
    REQUIRE(emb.chains.size() == 2);
    CHECK(emb.physical_qubits() == 2);
    CHECK(validate_embedding(complete_graph(2), topo, emb).valid);
}

TEST_CASE("pegasus clique embeddings extend beyond the boundary table") {
    for (int k : {16, 20, 28, 40}) {
        const auto [topo, emb] = embed_clique_pegasus(k);
        const auto report = validate_embedding(complete_graph(k), topo, emb);
        INFO("k = " << k << " (M = " << topo.param() << ")");
        CHECK(report.valid);
        CHECK(report.physical_qubits <= n_qa(k));
    }
}

TEST_CASE("identity embedding of a subgraph validates with unit chains") {
    auto topo = build_chimera(2);
    // problem graph = one K_{4,4} cell, valid as-is with 8 unit chains
    Graph cell(8);
    for (int a = 0; a < 4; ++a)
        for (int b = 4; b < 8; ++b) cell.add_edge(a, b);
    MinorEmbedding emb;
    for (int q = 0; q < 8; ++q) emb.chains.push_back({q});
    const auto report = validate_embedding(cell, topo, emb);
    CHECK(report.valid);
    CHECK(report.physical_qubits == 8);
}

TEST_CASE("split chains are reported as connectivity violations") {
    const auto topo = build_chimera(2);
    // qubits 0 and 8 sit in different cells with no coupler between them
    Graph problem(1);
    MinorEmbedding emb;
    emb.chains.push_back({0, 8});
    const auto report = validate_embedding(problem, topo, emb);
    CHECK_FALSE(report.valid);
    REQUIRE_FALSE(report.violations.empty());
    CHECK(report.violations.front().type == EmbeddingViolation::Type::disconnected);
}

TEST_CASE("overlaps and missing couplers are reported") {
    const auto topo = build_chimera(1);
    Graph problem(2);
    problem.add_edge(0, 1);
    MinorEmbedding overlap;
    overlap.chains = {{0}, {0}};
    const auto rep1 = validate_embedding(problem, topo, overlap);
    CHECK_FALSE(rep1.valid);
    bool has_overlap = false;
    for (const auto& v : rep1.violations)
        if (v.type == EmbeddingViolation::Type::overlap) has_overlap = true;
    CHECK(has_overlap);

    MinorEmbedding disjoint_but_uncoupled;
    disjoint_but_uncoupled.chains = {{0}, {1}}; // same side of the cell: no coupler
    const auto rep2 = validate_embedding(problem, topo, disjoint_but_uncoupled);
    CHECK_FALSE(rep2.valid);
    bool missing = false;
    for (const auto& v : rep2.violations)
        if (v.type == EmbeddingViolation::Type::missing_edge) missing = true;
    CHECK(missing);
}

TEST_CASE("validation respects removed qubits") {
    auto topo = build_chimera(1);
    Graph problem(2);
    problem.add_edge(0, 1);
    MinorEmbedding emb;
    emb.chains = {{0}, {4}};
    CHECK(validate_embedding(problem, topo, emb).valid);
    topo.remove_node(4);
    const auto report = validate_embedding(problem, topo, emb);
    CHECK_FALSE(report.valid);
    bool bad = false;
    for (const auto& v : report.violations)
        if (v.type == EmbeddingViolation::Type::bad_node) bad = true;
    CHECK(bad);
}

TEST_CASE("chain-break resolution: majority, ties to zero") {
    MinorEmbedding emb;
    emb.chains = {{0, 1, 2}, {3, 4}, {5}};

    // unanimous chains reproduce their values with zero break fraction
    const auto clean = resolve_chain_breaks(emb, {1, 1, 1, 0, 0, 1});
    CHECK(clean.logical == Bits{1, 0, 1});
    CHECK(clean.break_fraction == 0.0);

    // (1,1,0) resolves to 1 and counts as broken
    const auto maj = resolve_chain_breaks(emb, {1, 1, 0, 0, 0, 0});
    CHECK(maj.logical == Bits{1, 0, 0});
    CHECK(maj.break_fraction == 1.0 / 3.0);

    // (1,0) ties resolve to 0 and count as broken
    const auto tie = resolve_chain_breaks(emb, {0, 0, 0, 1, 0, 0});
    CHECK(tie.logical == Bits{0, 0, 0});
    CHECK(tie.break_fraction == 1.0 / 3.0);

    // idempotent on unanimous inputs
    const auto again = resolve_chain_breaks(emb, {1, 1, 1, 0, 0, 1});
    CHECK(again.logical == clean.logical);
}

TEST_CASE("chain-break resolution rejects out-of-range physical indices") {
    MinorEmbedding emb;
    emb.chains = {{0, 9}};
    CHECK_THROWS_WITH(resolve_chain_breaks(emb, {1, 0, 0}),
                      Catch::Matchers::ContainsSubstring("9"));
}

TEST_CASE("tie rule verified by unit enumeration of two-qubit chains") {
    MinorEmbedding emb;
    emb.chains = {{0, 1}};
    CHECK(resolve_chain_breaks(emb, {0, 0}).logical == Bits{0});
    CHECK(resolve_chain_breaks(emb, {1, 0}).logical == Bits{0});
    CHECK(resolve_chain_breaks(emb, {0, 1}).logical == Bits{0});
    CHECK(resolve_chain_breaks(emb, {1, 1}).logical == Bits{1});
}

TEST_CASE("qubit cost estimators") {
    CHECK(n_qa(10) == 48);
    CHECK(n_qa(1) == 1);
    CHECK(n_qa(2) == 2);
    CHECK(n_qa(81) == 1344);
    CHECK(qubit_cost(SourceClass::udmis, Backend::neutral_atom, 10) == 10);
    CHECK(qubit_cost(SourceClass::maxcut, Backend::neutral_atom, 10) == 400);
    CHECK(qubit_cost(SourceClass::maxcut, Backend::annealer_pegasus, 10) == 48);
    CHECK(qubit_cost(SourceClass::tsp_qap, Backend::annealer_pegasus, 81) == 1344);
    CHECK(qubit_cost(SourceClass::tsp_qap, Backend::gate_based, 81) == 81);
    CHECK_THROWS_AS(qubit_cost(SourceClass::maxcut, Backend::gate_based, 0),
                    std::invalid_argument);
}

TEST_CASE("N_QA upper bound from the clique lemma") {
    for (long long n = 1; n <= 10000; ++n) {
        if (n <= 2) continue; // clamped region
        CHECK(n_qa(n) <= (n + 21) * (n + 9) / 6);
    }
}
