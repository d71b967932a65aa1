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

#ifndef QOPT_SERIALIZE_HPP
#define QOPT_SERIALIZE_HPP

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qopt/embedding.hpp"
#include "qopt/encodings.hpp"
#include "qopt/instances.hpp"
#include "qopt/metrics.hpp"
#include "qopt/sample_set.hpp"
#include "qopt/topology.hpp"

namespace qopt {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// instances: {"class", "seed", "params", "points"/"edges"/"matrix"}
// ---------------------------------------------------------------------------

struct InstanceDoc {
    std::string klass; // "udmis" | "maxcut" | "tsp"
    std::uint64_t seed = 0;
    json params = json::object();
    std::optional<UnitDiskInstance> udmis;
    std::optional<Graph> maxcut;
    std::optional<TspInstance> tsp;

    int qubo_class_nodes() const {
        if (udmis) return udmis->graph.node_count();
        if (maxcut) return maxcut->node_count();
        if (tsp) return tsp->node_count();
        return 0;
    }
};

inline json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.weight});
    return {{"nodes", g.node_count()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
    Graph g(j.at("nodes").get<int>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0), e.at(1), e.at(2));
    return g;
}

inline json instance_to_json(const InstanceDoc& doc) {
    json j{{"class", doc.klass}, {"seed", doc.seed}, {"params", doc.params}};
    if (doc.udmis) {
        json pts = json::array();
        for (const auto& p : doc.udmis->points) pts.push_back({p.first, p.second});
        j["points"] = pts;
        j["radius"] = doc.udmis->radius;
    } else if (doc.maxcut) {
        j["edges"] = graph_to_json(*doc.maxcut).at("edges");
        j["nodes"] = doc.maxcut->node_count();
    } else if (doc.tsp) {
        json rows = json::array();
        const int n = doc.tsp->node_count();
        for (int i = 0; i < n; ++i) {
            json row = json::array();
            for (int k = 0; k < n; ++k) row.push_back(doc.tsp->at(i, k));
            rows.push_back(row);
        }
        j["matrix"] = rows;
    }
    return j;
}

inline InstanceDoc instance_from_json(const json& j) {
    InstanceDoc doc;
    doc.klass = j.at("class").get<std::string>();
    doc.seed = j.value("seed", 0ULL);
    doc.params = j.value("params", json::object());
    if (doc.klass == "udmis") {
        UnitDiskInstance inst;
        inst.radius = j.at("radius").get<double>();
        for (const auto& p : j.at("points"))
            inst.points.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
        inst.graph = detail::unit_disk_graph(inst.points, inst.radius);
        doc.udmis = std::move(inst);
    } else if (doc.klass == "maxcut") {
        Graph g(j.at("nodes").get<int>());
        for (const auto& e : j.at("edges")) g.add_edge(e.at(0), e.at(1), e.at(2));
        doc.maxcut = std::move(g);
    } else if (doc.klass == "tsp") {
        const auto& rows = j.at("matrix");
        const int n = static_cast<int>(rows.size());
        std::vector<double> dist;
        dist.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (const auto& row : rows)
            for (const auto& v : row) dist.push_back(v.get<double>());
        doc.tsp = TspInstance(n, std::move(dist));
    } else {
        throw std::invalid_argument("instance_from_json: unknown class '" + doc.klass + "'");
    }
    return doc;
}

// ---------------------------------------------------------------------------
// QUBO + encoding record:
// {"n", "entries": [[i, j, value], ...] (i <= j), "offset", "meta": {...}}
// ---------------------------------------------------------------------------

inline SourceClass source_class_from_string(const std::string& s) {
    if (s == "udmis") return SourceClass::udmis;
    if (s == "maxcut") return SourceClass::maxcut;
    if (s == "tsp_qap") return SourceClass::tsp_qap;
    if (s == "tsp_mtz") return SourceClass::tsp_mtz;
    if (s == "tsp_dfj") return SourceClass::tsp_dfj;
    throw std::invalid_argument("unknown source class '" + s + "'");
}

namespace detail {

inline int role_kind_code(VarRole::Kind k) { return static_cast<int>(k); }

inline VarRole::Kind role_kind_from_code(int c) {
    if (c < 0 || c > static_cast<int>(VarRole::Kind::slack_bit))
        throw std::invalid_argument("bad variable-role code");
    return static_cast<VarRole::Kind>(c);
}

} // namespace detail

inline json record_to_json(const EncodingRecord& rec) {
    json entries = json::array();
    for (const auto& [i, j, v] : rec.qubo.entries()) entries.push_back({i, j, v});
    json roles = json::array();
    for (const auto& r : rec.roles)
        roles.push_back({detail::role_kind_code(r.kind), r.a, r.b, r.r});
    json meta{{"class", to_string(rec.source)},
              {"m", rec.m},
              {"m2", rec.m2},
              {"nodes", rec.nodes},
              {"roles", roles}};
    if (!rec.warning.empty()) meta["warning"] = rec.warning;
    switch (rec.source) {
        case SourceClass::udmis:
        case SourceClass::maxcut: meta["graph"] = graph_to_json(rec.graph); break;
        default: {
            json rows = json::array();
            const int n = rec.tsp.node_count();
            for (int i = 0; i < n; ++i) {
                json row = json::array();
                for (int k = 0; k < n; ++k) row.push_back(rec.tsp.at(i, k));
                rows.push_back(row);
            }
            meta["matrix"] = rows;
            if (rec.source == SourceClass::tsp_dfj) meta["dfj_subsets"] = rec.dfj_subsets;
        }
    }
    return {{"n", rec.qubo.size()},
            {"offset", rec.qubo.offset()},
            {"entries", entries},
            {"meta", meta}};
}

inline EncodingRecord record_from_json(const json& j) {
    EncodingRecord rec;
    const auto& meta = j.at("meta");
    rec.source = source_class_from_string(meta.at("class").get<std::string>());
    rec.m = meta.at("m").get<double>();
    rec.m2 = meta.at("m2").get<double>();
    rec.nodes = meta.at("nodes").get<int>();
    rec.warning = meta.value("warning", "");

    rec.qubo = Qubo(j.at("n").get<int>());
    rec.qubo.add_offset(j.value("offset", 0.0));
    for (const auto& e : j.at("entries")) {
        const int a = e.at(0).get<int>();
        const int b = e.at(1).get<int>();
        const double v = e.at(2).get<double>();
        if (a == b)
            rec.qubo.add_diagonal(a, v);
        else
            rec.qubo.add_coupling(a, b, v);
    }
    for (const auto& r : meta.at("roles")) {
        VarRole role;
        role.kind = detail::role_kind_from_code(r.at(0).get<int>());
        role.a = r.at(1).get<int>();
        role.b = r.at(2).get<int>();
        role.r = r.at(3).get<int>();
        rec.roles.push_back(role);
    }
    if (meta.contains("graph")) rec.graph = graph_from_json(meta.at("graph"));
    if (meta.contains("matrix")) {
        const auto& rows = meta.at("matrix");
        const int n = static_cast<int>(rows.size());
        std::vector<double> dist;
        for (const auto& row : rows)
            for (const auto& v : row) dist.push_back(v.get<double>());
        rec.tsp = TspInstance(n, std::move(dist));
    }
    if (meta.contains("dfj_subsets"))
        rec.dfj_subsets = meta.at("dfj_subsets").get<std::vector<std::vector<int>>>();
    return rec;
}

// ---------------------------------------------------------------------------
// topology / embedding / validation report
// ---------------------------------------------------------------------------

inline json topology_to_json(const TopologyGraph& t) {
    json removed = json::array();
    for (int id = 0; id < t.site_count(); ++id)
        if (t.is_removed(id)) removed.push_back(id);
    return {{"kind", t.kind() == TopologyGraph::Kind::chimera ? "chimera" : "pegasus"},
            {"param", t.param()},
            {"removed", removed}};
}

inline TopologyGraph topology_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    TopologyGraph t;
    if (kind == "chimera")
        t = build_chimera(j.at("param").get<int>());
    else if (kind == "pegasus")
        t = build_pegasus(j.at("param").get<int>());
    else
        throw std::invalid_argument("unknown topology kind '" + kind + "'");
    for (const auto& id : j.value("removed", json::array())) t.remove_node(id.get<int>());
    return t;
}

inline json embedding_to_json(const TopologyGraph& topo, const MinorEmbedding& emb) {
    json chains = json::object();
    for (std::size_t i = 0; i < emb.chains.size(); ++i)
        chains[std::to_string(i)] = emb.chains[i];
    return {{"topology", topology_to_json(topo)}, {"chains", chains}};
}

inline std::pair<TopologyGraph, MinorEmbedding> embedding_from_json(const json& j) {
    TopologyGraph topo = topology_from_json(j.at("topology"));
    const auto& chains = j.at("chains");
    MinorEmbedding emb;
    emb.chains.resize(chains.size());
    for (const auto& [key, value] : chains.items()) {
        const std::size_t idx = std::stoul(key);
        if (idx >= emb.chains.size()) emb.chains.resize(idx + 1);
        emb.chains[idx] = value.get<std::vector<int>>();
    }
    return {std::move(topo), std::move(emb)};
}

inline json validation_report_to_json(const ValidationReport& rep) {
    json violations = json::array();
    for (const auto& v : rep.violations) {
        const char* type = "";
        switch (v.type) {
            case EmbeddingViolation::Type::empty_chain: type = "empty_chain"; break;
            case EmbeddingViolation::Type::bad_node: type = "bad_node"; break;
            case EmbeddingViolation::Type::overlap: type = "overlap"; break;
            case EmbeddingViolation::Type::disconnected: type = "disconnected"; break;
            case EmbeddingViolation::Type::missing_edge: type = "missing_edge"; break;
        }
        violations.push_back({{"type", type}, {"a", v.a}, {"b", v.b}, {"detail", v.detail}});
    }
    return {{"valid", rep.valid},
            {"physical_qubits", rep.physical_qubits},
            {"violations", violations}};
}

// ---------------------------------------------------------------------------
// sample sets and histograms
// ---------------------------------------------------------------------------

inline std::string bits_to_string(const Bits& b) {
    std::string s;
    s.reserve(b.size());
    for (auto v : b) s.push_back(v ? '1' : '0');
    return s;
}

inline Bits bits_from_string(const std::string& s) {
    Bits b;
    b.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("bad bitstring character");
        b.push_back(c == '1');
    }
    return b;
}

inline json sample_set_to_json(const SampleSet& s) {
    json records = json::array();
    for (const auto& r : s.records)
        records.push_back({{"bits", bits_to_string(r.bits)},
                           {"energy", r.energy},
                           {"count", r.count},
                           {"feasible", r.feasible}});
    return {{"solver", s.solver},
            {"shots", s.shots},
            {"wallclock_s", s.wallclock_s},
            {"records", records}};
}

inline SampleSet sample_set_from_json(const json& j) {
    SampleSet s;
    s.solver = j.at("solver").get<std::string>();
    s.shots = j.at("shots").get<long long>();
    s.wallclock_s = j.at("wallclock_s").get<double>();
    for (const auto& r : j.at("records")) {
        SampleRecord rec;
        rec.bits = bits_from_string(r.at("bits").get<std::string>());
        rec.energy = r.at("energy").get<double>();
        rec.count = r.at("count").get<long long>();
        rec.feasible = r.at("feasible").get<bool>();
        s.records.push_back(std::move(rec));
    }
    return s;
}

inline std::string histogram_to_csv(const SampleSet& s) {
    std::ostringstream out;
    out << "bitstring,count,energy,feasible\n";
    out.precision(17);
    for (const auto& r : histogram(s))
        out << bits_to_string(r.bits) << ',' << r.count << ',' << r.energy << ','
            << (r.feasible ? 1 : 0) << '\n';
    return out.str();
}

inline std::string buckets_to_csv(const std::vector<BucketRow>& rows) {
    std::ostringstream out;
    out << "class,approach,total,within_25,share_25,within_10,share_10,within_5,share_5,"
           "no_worse,share_no_worse,excluded_missing_baseline\n";
    for (const auto& r : rows)
        out << r.problem_class << ',' << r.approach << ',' << r.total << ',' << r.within_25 << ','
            << r.share(r.within_25) << ',' << r.within_10 << ',' << r.share(r.within_10) << ','
            << r.within_5 << ',' << r.share(r.within_5) << ',' << r.no_worse << ','
            << r.share(r.no_worse) << ',' << r.excluded_missing_baseline << '\n';
    return out.str();
}

inline std::string time_split_to_csv(const std::vector<TimeSplitRow>& rows) {
    std::ostringstream out;
    out << "instance,embed_s,solve_s,embed_share\n";
    out.precision(17);
    for (const auto& r : rows)
        out << r.instance_id << ',' << r.embed_s << ',' << r.solve_s << ',' << r.share() << '\n';
    return out.str();
}

} // namespace qopt

#endif // QOPT_SERIALIZE_HPP
