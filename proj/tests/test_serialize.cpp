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

#include "catch2/catch_amalgamated.hpp"
#include "qopt/anneal.hpp"
#include "qopt/clique_embedding.hpp"
#include "qopt/rng.hpp"
#include "qopt/serialize.hpp"

using namespace qopt;

TEST_CASE("instance documents round-trip losslessly") {
    InstanceDoc ud;
    ud.klass = "udmis";
    ud.seed = 321;
    ud.params = {{"n", 20}, {"radius", 1.42}};
    ud.udmis = gen_udmis(20, 1.42, 321);
    const auto ud2 = instance_from_json(instance_to_json(ud));
    CHECK(ud2.udmis->points == ud.udmis->points);
    CHECK(ud2.udmis->radius == ud.udmis->radius);
    CHECK(ud2.udmis->graph.edge_count() == ud.udmis->graph.edge_count());
    CHECK(ud2.seed == 321);

    InstanceDoc mc;
    mc.klass = "maxcut";
    mc.seed = 5;
    mc.params = {{"n", 12}, {"p", 0.5}};
    mc.maxcut = gen_maxcut(12, 0.5, 5);
    const auto mc2 = instance_from_json(instance_to_json(mc));
    REQUIRE(mc2.maxcut.has_value());
    REQUIRE(mc2.maxcut->edge_count() == mc.maxcut->edge_count());
    for (std::size_t i = 0; i < mc.maxcut->edges().size(); ++i)
        CHECK(mc2.maxcut->edges()[i].weight == mc.maxcut->edges()[i].weight);

    InstanceDoc tsp;
    tsp.klass = "tsp";
    tsp.tsp = TspInstance(3, {0, 1.5, 2, 1.5, 0, 3, 2, 3, 0});
    const auto tsp2 = instance_from_json(instance_to_json(tsp));
    CHECK(tsp2.tsp->matrix() == tsp.tsp->matrix());
}

TEST_CASE("encoding records round-trip with bit-identical energies") {
    const auto g = gen_maxcut(8, 0.6, 7);
    const auto rec = encode_maxcut(g);
    const auto rec2 = record_from_json(record_to_json(rec));
    CHECK(rec2.source == rec.source);
    CHECK(rec2.qubo.size() == rec.qubo.size());
    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        Bits x(8);
        for (auto& b : x) b = static_cast<std::uint8_t>(rng.next_u64() & 1);
        CHECK(rec2.qubo.energy(x) == rec.qubo.energy(x));
        CHECK(decode(rec2, x).feasible == decode(rec, x).feasible);
    }
}

TEST_CASE("tsp encoding records keep decode context") {
    const TspInstance t(4, {0, 2, 9, 4, 2, 0, 3, 6, 9, 3, 0, 1, 4, 6, 1, 0});
    for (const auto& rec : {encode_tsp_qap(t), encode_tsp_mtz(t), encode_tsp_dfj(t)}) {
        const auto rec2 = record_from_json(record_to_json(rec));
        CHECK(rec2.qubo.size() == rec.qubo.size());
        CHECK(rec2.qubo.offset() == rec.qubo.offset());
        CHECK(rec2.tsp.matrix() == rec.tsp.matrix());
        CHECK(rec2.roles.size() == rec.roles.size());
        if (rec.source == SourceClass::tsp_dfj) CHECK(rec2.dfj_subsets == rec.dfj_subsets);
        Rng rng(9);
        Bits x(static_cast<std::size_t>(rec.qubo.size()));
        for (auto& b : x) b = static_cast<std::uint8_t>(rng.next_u64() & 1);
        CHECK(rec2.qubo.energy(x) == rec.qubo.energy(x));
    }
}

TEST_CASE("embeddings round-trip through the JSON schema") {
    const auto [topo, emb] = embed_clique_pegasus(8);
    const auto j = embedding_to_json(topo, emb);
    const auto [topo2, emb2] = embedding_from_json(j);
    CHECK(topo2.param() == topo.param());
    CHECK(emb2.chains == emb.chains);

    Graph complete(8);
    for (int i = 0; i < 8; ++i)
        for (int jn = i + 1; jn < 8; ++jn) complete.add_edge(i, jn);
    CHECK(validate_embedding(complete, topo2, emb2).valid);
}

TEST_CASE("topology removed-node list round-trips") {
    auto topo = build_chimera(2);
    topo.remove_node(3);
    topo.remove_node(17);
    const auto topo2 = topology_from_json(topology_to_json(topo));
    CHECK(topo2.is_removed(3));
    CHECK(topo2.is_removed(17));
    CHECK(topo2.node_count() == topo.node_count());
}

TEST_CASE("sample sets round-trip and render as CSV") {
    Graph g(3);
    g.add_edge(0, 1, 2.5);
    g.add_edge(1, 2, 1.5);
    const auto rec = encode_maxcut(g);
    const auto set = simulated_anneal(rec.qubo, {.shots = 40, .sweeps = 10, .seed = 2},
                                      [](const Bits&) { return true; });
    const auto set2 = sample_set_from_json(sample_set_to_json(set));
    REQUIRE(set2.records.size() == set.records.size());
    for (std::size_t i = 0; i < set.records.size(); ++i) {
        CHECK(set2.records[i].bits == set.records[i].bits);
        CHECK(set2.records[i].energy == set.records[i].energy);
        CHECK(set2.records[i].count == set.records[i].count);
    }
    const auto csv = histogram_to_csv(set);
    CHECK(csv.rfind("bitstring,count,energy,feasible\n", 0) == 0);
    // one line per distinct bitstring plus header
    std::size_t lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == set.records.size() + 1);
}

TEST_CASE("validation reports serialize violations with coordinates") {
    const auto topo = build_chimera(1);
    Graph problem(2);
    problem.add_edge(0, 1);
    MinorEmbedding emb;
    emb.chains = {{0}, {1}};
    const auto rep = validate_embedding(problem, topo, emb);
    const auto j = validation_report_to_json(rep);
    CHECK_FALSE(j.at("valid").get<bool>());
    CHECK(j.at("violations").size() >= 1);
}

TEST_CASE("bitstring helpers reject garbage") {
    CHECK(bits_from_string("0101") == Bits{0, 1, 0, 1});
    CHECK(bits_to_string({1, 0, 1}) == "101");
    CHECK_THROWS_AS(bits_from_string("01x1"), std::invalid_argument);
}
