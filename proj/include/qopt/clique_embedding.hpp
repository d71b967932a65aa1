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

#ifndef QOPT_CLIQUE_EMBEDDING_HPP
#define QOPT_CLIQUE_EMBEDDING_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "qopt/embedding.hpp"
#include "qopt/qubit_cost.hpp"
#include "qopt/topology.hpp"

namespace qopt {

namespace detail {

// Verified clique pattern for the P_2 boundary case, as (column, row)
// wire pairs: chain i occupies vertical wire x_i and horizontal wire
// y_i, joined by their internal coupler. Every prefix of the list is a
// clique embedding. Ten chains are the ceiling here: P_2 has
// elimination width 9, so its largest clique minor is K_10 and the
// K_{12M-10} formula does not extend down to M = 2.
inline constexpr int kPegasusP2Pairs[10][2] = {
    {11, 9}, {9, 6}, {13, 10}, {12, 11}, {10, 16},
    {8, 7},  {7, 12}, {17, 15}, {6, 13}, {16, 14},
};

inline int pegasus_node_id(int m, int u, int w, int k, int z) {
    return ((u * m + w) * 12 + k) * (m - 1) + z;
}

// L-shaped clique chains on the Pegasus wire grid, anchored on the
// diagonal band starting at wire offset c: chain i pairs vertical wire
// t = c+i (covering rows t .. c+k-1) with horizontal wire t (covering
// columns c .. t). Chains meet pairwise at the band crossings; segment
// lengths stay near k/12 + 1.
inline MinorEmbedding pegasus_l_scheme(int m, int k, int c) {
    MinorEmbedding emb;
    emb.chains.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const int t = c + i;
        if (t >= 12 * m) return {}; // off the fabric
        auto& chain = emb.chains[static_cast<std::size_t>(i)];

        const int wv = t / 12, kv = t % 12;
        const int a = kPegasusOffsets[0][kv];
        const int z1 = floor_div(t - a, 12);
        const int z2 = floor_div(c + k - 1 - a, 12);
        if (z1 < 0 || z2 > m - 2 || z1 > z2) return {};
        for (int z = z1; z <= z2; ++z) chain.push_back(pegasus_node_id(m, 0, wv, kv, z));

        const int b = kPegasusOffsets[1][kv];
        const int z1h = floor_div(c - b, 12);
        const int z2h = floor_div(t - b, 12);
        if (z1h < 0 || z2h > m - 2 || z1h > z2h) return {};
        for (int z = z1h; z <= z2h; ++z) chain.push_back(pegasus_node_id(m, 1, wv, kv, z));
    }
    return emb;
}

} // namespace detail

// Clique embedding of K_k into a Pegasus graph. For k <= 10 the P_2
// pattern table applies directly. Larger cliques use the L-scheme,
// which needs k <= 12M - 20; the target size is raised above the
// K_{12M-10} estimate's M when the boundary construction cannot
// deliver it (P_2 tops out at K_10, see above). The result is always
// run through validate_embedding and kept within the N_QA(k) budget;
// sizes that fail either check raise an unsupported-size error instead
// of returning a silently invalid embedding.
inline std::pair<TopologyGraph, MinorEmbedding> embed_clique_pegasus(int k) {
    if (k < 1) throw std::invalid_argument("embed_clique_pegasus: k must be >= 1");

    const auto finish = [k](TopologyGraph topo,
                            MinorEmbedding emb) -> std::pair<TopologyGraph, MinorEmbedding> {
        Graph complete(k);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) complete.add_edge(i, j);
        const auto report = validate_embedding(complete, topo, emb);
        if (!report.valid || report.physical_qubits > n_qa(k))
            throw std::runtime_error(
                "embed_clique_pegasus: unsupported size k = " + std::to_string(k) +
                " (construction failed validation or the N_QA budget at the boundary)");
        return {std::move(topo), std::move(emb)};
    };

    if (k <= 10) {
        MinorEmbedding emb;
        emb.chains.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            const int x = detail::kPegasusP2Pairs[i][0];
            const int y = detail::kPegasusP2Pairs[i][1];
            auto& chain = emb.chains[static_cast<std::size_t>(i)];
            if (k <= 2) {
                // singleton chains keep the trivial cases within N qubits;
                // for k=2 the vertical and horizontal wire of the first
                // table pair cross, so the two one-qubit chains are coupled
                const int x0 = detail::kPegasusP2Pairs[0][0];
                const int y0 = detail::kPegasusP2Pairs[0][1];
                if (i == 0)
                    chain.push_back(detail::pegasus_node_id(2, 0, x0 / 12, x0 % 12, 0));
                else
                    chain.push_back(detail::pegasus_node_id(2, 1, y0 / 12, y0 % 12, 0));
            } else {
                chain.push_back(detail::pegasus_node_id(2, 0, x / 12, x % 12, 0));
                chain.push_back(detail::pegasus_node_id(2, 1, y / 12, y % 12, 0));
            }
        }
        return finish(build_pegasus(2), std::move(emb));
    }

    const int m = (k + 20 + 11) / 12; // smallest M with k <= 12M - 20
    for (int c : {10, 6, 2, 0, 4, 8}) {
        MinorEmbedding emb = detail::pegasus_l_scheme(m, k, c);
        if (emb.chains.empty()) continue;
        bool filled = true;
        for (const auto& chain : emb.chains)
            if (chain.empty()) filled = false;
        if (!filled) continue;
        Graph complete(k);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) complete.add_edge(i, j);
        TopologyGraph topo = build_pegasus(m);
        const auto report = validate_embedding(complete, topo, emb);
        if (report.valid && report.physical_qubits <= n_qa(k))
            return {std::move(topo), std::move(emb)};
    }
    throw std::runtime_error("embed_clique_pegasus: unsupported size k = " + std::to_string(k) +
                             " (boundary composition failed)");
}

} // namespace qopt

#endif // QOPT_CLIQUE_EMBEDDING_HPP
