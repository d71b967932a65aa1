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

#ifndef QOPT_GRAPH_HPP
#define QOPT_GRAPH_HPP

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qopt {

// Weighted undirected simple graph. Edges are stored once with u < v.
class Graph {
public:
    struct Edge {
        int u;
        int v;
        double weight;
    };

    Graph() = default;
    explicit Graph(int node_count) : node_count_(node_count) {
        if (node_count < 0) throw std::invalid_argument("Graph: negative node count");
    }

    int node_count() const { return node_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    void add_edge(int u, int v, double weight = 1.0) {
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= node_count_) throw std::invalid_argument("Graph: node index out of range");
        if (weight < 0.0) throw std::invalid_argument("Graph: negative edge weight");
        if (!edge_keys_.insert({u, v}).second) throw std::invalid_argument("Graph: duplicate edge");
        edges_.push_back({u, v, weight});
    }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return edge_keys_.count({u, v}) > 0;
    }

    std::vector<std::vector<std::pair<int, double>>> adjacency() const {
        std::vector<std::vector<std::pair<int, double>>> adj(node_count_);
        for (const auto& e : edges_) {
            adj[e.u].push_back({e.v, e.weight});
            adj[e.v].push_back({e.u, e.weight});
        }
        return adj;
    }

    int max_degree() const {
        std::vector<int> deg(node_count_, 0);
        for (const auto& e : edges_) {
            ++deg[e.u];
            ++deg[e.v];
        }
        return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
    }

private:
    int node_count_ = 0;
    std::vector<Edge> edges_;
    std::set<std::pair<int, int>> edge_keys_;
};

} // namespace qopt

#endif // QOPT_GRAPH_HPP
