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

#ifndef QOPT_EMBEDDING_HPP
#define QOPT_EMBEDDING_HPP

#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qopt/graph.hpp"
#include "qopt/qubo.hpp"
#include "qopt/topology.hpp"

namespace qopt {

// Logical variable -> disjoint connected chain of physical qubits.
struct MinorEmbedding {
    std::vector<std::vector<int>> chains;

    int physical_qubits() const {
        int total = 0;
        for (const auto& c : chains) total += static_cast<int>(c.size());
        return total;
    }
};

struct EmbeddingViolation {
    enum class Type { empty_chain, bad_node, overlap, disconnected, missing_edge };
    Type type;
    int a = -1; // chain / logical index
    int b = -1; // second chain for overlap / missing_edge
    std::string detail;
};

struct ValidationReport {
    bool valid = true;
    std::vector<EmbeddingViolation> violations;
    int physical_qubits = 0;
};

namespace detail {

inline std::string coord_str(const TopologyGraph& topo, int id) {
    const auto& c = topo.coord(id);
    return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) +
           "," + std::to_string(c[3]) + ")#" + std::to_string(id);
}

} // namespace detail

// Checks chain disjointness, chain connectivity inside the topology
// (removed qubits excluded), and coupler coverage of every problem edge.
// Violations are reported as data, with coordinates.
inline ValidationReport validate_embedding(const Graph& problem, const TopologyGraph& topo,
                                           const MinorEmbedding& emb) {
    ValidationReport rep;
    const auto fail = [&rep](EmbeddingViolation v) {
        rep.valid = false;
        rep.violations.push_back(std::move(v));
    };

    const int n = problem.node_count();
    if (static_cast<int>(emb.chains.size()) < n) {
        for (int i = static_cast<int>(emb.chains.size()); i < n; ++i)
            fail({EmbeddingViolation::Type::empty_chain, i, -1, "no chain for logical node"});
    }
    const int covered = std::min(n, static_cast<int>(emb.chains.size()));

    std::vector<int> owner(static_cast<std::size_t>(topo.site_count()), -1);
    for (int i = 0; i < covered; ++i) {
        const auto& chain = emb.chains[static_cast<std::size_t>(i)];
        if (chain.empty()) {
            fail({EmbeddingViolation::Type::empty_chain, i, -1, "empty chain"});
            continue;
        }
        bool usable = true;
        for (int q : chain) {
            if (q < 0 || q >= topo.site_count() || topo.is_removed(q)) {
                fail({EmbeddingViolation::Type::bad_node, i, -1,
                      q >= 0 && q < topo.site_count()
                          ? "chain uses removed qubit " + detail::coord_str(topo, q)
                          : "chain uses invalid qubit id " + std::to_string(q)});
                usable = false;
                continue;
            }
            if (owner[static_cast<std::size_t>(q)] >= 0 &&
                owner[static_cast<std::size_t>(q)] != i) {
                fail({EmbeddingViolation::Type::overlap, owner[static_cast<std::size_t>(q)], i,
                      "chains share qubit " + detail::coord_str(topo, q)});
            } else {
                owner[static_cast<std::size_t>(q)] = i;
            }
        }
        if (!usable) continue;

        // BFS inside the chain
        std::set<int> members(chain.begin(), chain.end());
        std::set<int> seen;
        std::queue<int> bfs;
        bfs.push(chain.front());
        seen.insert(chain.front());
        while (!bfs.empty()) {
            const int q = bfs.front();
            bfs.pop();
            for (int nb : topo.neighbors(q)) {
                if (topo.is_removed(nb)) continue;
                if (members.count(nb) && !seen.count(nb)) {
                    seen.insert(nb);
                    bfs.push(nb);
                }
            }
        }
        if (seen.size() != members.size())
            fail({EmbeddingViolation::Type::disconnected, i, -1,
                  "chain splits into >= 2 components (" + std::to_string(seen.size()) + " of " +
                      std::to_string(members.size()) + " reachable from " +
                      detail::coord_str(topo, chain.front()) + ")"});
    }

    for (const auto& e : problem.edges()) {
        if (e.u >= covered || e.v >= covered) continue;
        bool linked = false;
        for (int q : emb.chains[static_cast<std::size_t>(e.u)]) {
            if (q < 0 || q >= topo.site_count() || topo.is_removed(q)) continue;
            for (int nb : topo.neighbors(q)) {
                if (topo.is_removed(nb)) continue;
                if (owner[static_cast<std::size_t>(nb)] == e.v) {
                    linked = true;
                    break;
                }
            }
            if (linked) break;
        }
        if (!linked)
            fail({EmbeddingViolation::Type::missing_edge, e.u, e.v,
                  "no coupler between chains of problem edge {" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + "}"});
    }

    for (int i = 0; i < covered; ++i)
        rep.physical_qubits += static_cast<int>(emb.chains[static_cast<std::size_t>(i)].size());
    return rep;
}

// Clique embedding of K_k into chimera(ceil(k/4)). Logical variables are
// grouped into quadruples; the chain of variable 4g+t is an L of row-g
// horizontal qubits (columns 0..g) and column-g vertical qubits (rows
// g..n-1), all with intra-cell index t. Every pair of quadruples meets
// in exactly one cell.
inline std::pair<TopologyGraph, MinorEmbedding> embed_clique_chimera(int k) {
    if (k < 1) throw std::invalid_argument("embed_clique_chimera: k must be >= 1");
    const int n = (k + 3) / 4;
    TopologyGraph topo = build_chimera(n);
    const auto id = [n](int r, int c, int u, int kk) { return ((r * n + c) * 2 + u) * 4 + kk; };

    MinorEmbedding emb;
    emb.chains.resize(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v) {
        const int g = v / 4;
        const int t = v % 4;
        auto& chain = emb.chains[static_cast<std::size_t>(v)];
        for (int c = 0; c <= g; ++c) chain.push_back(id(g, c, 1, t));
        for (int r = g; r < n; ++r) chain.push_back(id(r, g, 0, t));
    }
    return {std::move(topo), std::move(emb)};
}

// Majority-vote resolution of physical samples to logical bits.
// Ties (even chains split half/half) resolve to 0. Also reports the
// share of chains with non-unanimous values.
struct ChainResolution {
    Bits logical;
    double break_fraction = 0.0;
};

inline ChainResolution resolve_chain_breaks(const MinorEmbedding& emb, const Bits& physical) {
    ChainResolution out;
    out.logical.resize(emb.chains.size(), 0);
    int broken = 0;
    for (std::size_t i = 0; i < emb.chains.size(); ++i) {
        const auto& chain = emb.chains[i];
        if (chain.empty()) throw std::invalid_argument("resolve_chain_breaks: empty chain");
        int ones = 0;
        for (int q : chain) {
            if (q < 0 || static_cast<std::size_t>(q) >= physical.size())
                throw std::invalid_argument(
                    "resolve_chain_breaks: chain references physical index " + std::to_string(q) +
                    " outside the sample of length " + std::to_string(physical.size()));
            ones += physical[static_cast<std::size_t>(q)] ? 1 : 0;
        }
        const int size = static_cast<int>(chain.size());
        out.logical[i] = (2 * ones > size) ? 1 : 0; // tie -> 0
        if (ones != 0 && ones != size) ++broken;
    }
    if (!emb.chains.empty())
        out.break_fraction = static_cast<double>(broken) / static_cast<double>(emb.chains.size());
    return out;
}

} // namespace qopt

#endif // QOPT_EMBEDDING_HPP
