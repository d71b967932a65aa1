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

#ifndef QOPT_INSTANCES_HPP
#define QOPT_INSTANCES_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qopt/graph.hpp"
#include "qopt/rng.hpp"

namespace qopt {

// Unit disk graph over integer grid points: edge {i,j} iff the Euclidean
// distance between points i and j is at most the radius.
struct UnitDiskInstance {
    std::vector<std::pair<int, int>> points;
    double radius = 0.0;
    Graph graph;
};

// Complete graph with a symmetric, zero-diagonal distance matrix.
class TspInstance {
public:
    TspInstance() = default;
    TspInstance(int n, std::vector<double> dist) : n_(n), dist_(std::move(dist)) {
        if (n < 3) throw std::invalid_argument("TspInstance: need at least 3 nodes");
        if (dist_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
            throw std::invalid_argument("TspInstance: matrix size mismatch");
        for (int i = 0; i < n; ++i) {
            if (at(i, i) != 0.0) throw std::invalid_argument("TspInstance: nonzero diagonal");
            for (int j = i + 1; j < n; ++j) {
                if (at(i, j) != at(j, i))
                    throw std::invalid_argument("TspInstance: asymmetric distances");
                if (at(i, j) < 0.0)
                    throw std::invalid_argument("TspInstance: negative distance");
            }
        }
    }

    int node_count() const { return n_; }
    double at(int i, int j) const {
        return dist_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                     static_cast<std::size_t>(j)];
    }
    const std::vector<double>& matrix() const { return dist_; }

    double max_distance() const {
        double m = 0.0;
        for (double d : dist_) m = std::max(m, d);
        return m;
    }

private:
    int n_ = 0;
    std::vector<double> dist_;
};

namespace detail {

// Exact unit-disk adjacency test: squared integer distance against the
// squared radius. Both operands are exact doubles, so the comparison is
// reproducible bit-for-bit across platforms.
inline bool within_radius(const std::pair<int, int>& a, const std::pair<int, int>& b,
                          double radius) {
    const long long dx = a.first - b.first;
    const long long dy = a.second - b.second;
    const long long d2 = dx * dx + dy * dy;
    return static_cast<double>(d2) <= radius * radius;
}

inline Graph unit_disk_graph(const std::vector<std::pair<int, int>>& points, double radius) {
    Graph g(static_cast<int>(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (within_radius(points[i], points[j], radius))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

} // namespace detail

// Random unit disk instance on the integer grid [0,W] x [0,W] with
// W = ceil(sqrt(n)) + 1. Starting from the full grid, nodes are deleted
// one at a time, the candidate chosen uniformly at random, until n remain.
inline UnitDiskInstance gen_udmis(int n, double radius, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_udmis: n must be >= 1");
    if (!(radius > 0.0)) throw std::invalid_argument("gen_udmis: radius must be positive");

    const int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)))) + 1;
    std::vector<std::pair<int, int>> grid;
    for (int x = 0; x <= side; ++x)
        for (int y = 0; y <= side; ++y) grid.push_back({x, y});
    if (static_cast<int>(grid.size()) < n)
        throw std::invalid_argument("gen_udmis: n exceeds grid capacity");

    Rng rng(seed);
    while (static_cast<int>(grid.size()) > n) {
        const std::size_t victim = rng.below(grid.size());
        grid[victim] = grid.back();
        grid.pop_back();
    }

    UnitDiskInstance inst;
    inst.points = grid;
    inst.radius = radius;
    inst.graph = detail::unit_disk_graph(grid, radius);
    return inst;
}

// Erdos-Renyi G(n,p) with random edge weights. Per instance, the weight
// cap C_max is drawn uniformly from [1,10]; each edge weight is then
// uniform in (0, C_max].
inline Graph gen_maxcut(int n, double p, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen_maxcut: n must be >= 2");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_maxcut: p must be in [0,1]");

    Rng rng(seed);
    const double c_max = rng.uniform(1.0, 10.0);
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng.unit() < p) {
                const double w = c_max * (1.0 - rng.unit()); // (0, c_max]
                g.add_edge(i, j, w);
            }
        }
    }
    return g;
}

// Uniformly random k-subset of the base nodes; distances restricted to
// the subset (complete subgraph, weights preserved).
inline TspInstance subsample_tsp(const TspInstance& base, int k, std::uint64_t seed) {
    const int n = base.node_count();
    if (k < 3 || k > n) throw std::invalid_argument("subsample_tsp: k out of range [3, node_count]");

    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    Rng rng(seed);
    // partial Fisher-Yates: first k entries form the sample, in draw order
    for (int i = 0; i < k; ++i) {
        const std::size_t j = static_cast<std::size_t>(i) +
                              rng.below(static_cast<std::uint64_t>(n - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }

    std::vector<double> dist(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0.0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            dist[static_cast<std::size_t>(a) * static_cast<std::size_t>(k) +
                 static_cast<std::size_t>(b)] =
                base.at(pool[static_cast<std::size_t>(a)], pool[static_cast<std::size_t>(b)]);
    return TspInstance(k, std::move(dist));
}

} // namespace qopt

#endif // QOPT_INSTANCES_HPP
