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

#ifndef QOPT_TOPOLOGY_HPP
#define QOPT_TOPOLOGY_HPP

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace qopt {

// Coordinate of a hardware qubit.
//   chimera: (row, col, u, k)  u in {0,1} (vertical/horizontal), k in 0..3
//   pegasus: (u, w, k, z)      u in {0,1}, k in 0..11, z in 0..M-2
using TopoCoord = std::array<int, 4>;

class TopologyGraph {
public:
    enum class Kind { chimera, pegasus };

    Kind kind() const { return kind_; }
    int param() const { return param_; } // chimera grid n / pegasus size M

    int site_count() const { return static_cast<int>(coords_.size()); }
    int node_count() const { return site_count() - removed_count_; }
    std::size_t edge_count() const { return edge_count_; }

    const TopoCoord& coord(int id) const { return coords_[static_cast<std::size_t>(id)]; }
    const std::vector<int>& neighbors(int id) const { return adj_[static_cast<std::size_t>(id)]; }

    bool is_removed(int id) const { return removed_[static_cast<std::size_t>(id)]; }

    // Marks a broken qubit. Validation and degree queries skip it.
    void remove_node(int id) {
        if (id < 0 || id >= site_count()) throw std::out_of_range("TopologyGraph: bad node id");
        if (!removed_[static_cast<std::size_t>(id)]) {
            removed_[static_cast<std::size_t>(id)] = true;
            ++removed_count_;
        }
    }

    bool adjacent(int a, int b) const {
        if (is_removed(a) || is_removed(b)) return false;
        const auto& na = adj_[static_cast<std::size_t>(a)];
        return std::find(na.begin(), na.end(), b) != na.end();
    }

    int degree(int id) const {
        if (is_removed(id)) return 0;
        int d = 0;
        for (int nb : adj_[static_cast<std::size_t>(id)])
            if (!is_removed(nb)) ++d;
        return d;
    }

    int max_degree() const {
        int m = 0;
        for (int id = 0; id < site_count(); ++id)
            if (!is_removed(id)) m = std::max(m, degree(id));
        return m;
    }

    friend TopologyGraph build_chimera(int n);
    friend TopologyGraph build_pegasus(int m);

private:
    void add_edge(int a, int b) {
        adj_[static_cast<std::size_t>(a)].push_back(b);
        adj_[static_cast<std::size_t>(b)].push_back(a);
        ++edge_count_;
    }

    Kind kind_ = Kind::chimera;
    int param_ = 0;
    std::vector<TopoCoord> coords_;
    std::vector<std::vector<int>> adj_;
    std::vector<bool> removed_;
    int removed_count_ = 0;
    std::size_t edge_count_ = 0;
};

// n x n grid of K_{4,4} cells. Vertical qubits (u=0) couple to the
// vertically adjacent cell, horizontal (u=1) to the horizontal one;
// inner nodes have degree 6.
inline TopologyGraph build_chimera(int n) {
    if (n < 1) throw std::invalid_argument("build_chimera: n must be >= 1");
    TopologyGraph t;
    t.kind_ = TopologyGraph::Kind::chimera;
    t.param_ = n;

    const auto id = [n](int r, int c, int u, int k) { return ((r * n + c) * 2 + u) * 4 + k; };
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            for (int u = 0; u < 2; ++u)
                for (int k = 0; k < 4; ++k) t.coords_.push_back({r, c, u, k});
    t.adj_.resize(t.coords_.size());
    t.removed_.assign(t.coords_.size(), false);

    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            for (int k = 0; k < 4; ++k) {
                for (int k2 = 0; k2 < 4; ++k2) t.add_edge(id(r, c, 0, k), id(r, c, 1, k2));
                if (r + 1 < n) t.add_edge(id(r, c, 0, k), id(r + 1, c, 0, k));
                if (c + 1 < n) t.add_edge(id(r, c, 1, k), id(r, c + 1, 1, k));
            }
        }
    }
    return t;
}

namespace detail {

// Track offsets of the standard Pegasus coordinate system
// (Boothby et al.; offsets_index 0).
inline constexpr int kPegasusOffsets[2][12] = {
    {2, 2, 2, 2, 10, 10, 10, 10, 6, 6, 6, 6},
    {6, 6, 6, 6, 2, 2, 2, 2, 10, 10, 10, 10},
};

inline int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace detail

// Pegasus P_M: 24M(M-1) qubits (u, w, k, z). A vertical qubit (u=0)
// occupies column x = 12w+k and spans rows [12z+s, 12z+s+11] with s the
// track offset; horizontal qubits are transposed. Couplers: external
// along z, odd between track pairs (2j, 2j+1), internal wherever a
// vertical and a horizontal segment cross. Maximum degree 15.
inline TopologyGraph build_pegasus(int m) {
    if (m < 2) throw std::invalid_argument("build_pegasus: M must be >= 2 (M=1 has no qubits)");
    TopologyGraph t;
    t.kind_ = TopologyGraph::Kind::pegasus;
    t.param_ = m;

    const int zdim = m - 1;
    const auto id = [m, zdim](int u, int w, int k, int z) {
        return ((u * m + w) * 12 + k) * zdim + z;
    };
    for (int u = 0; u < 2; ++u)
        for (int w = 0; w < m; ++w)
            for (int k = 0; k < 12; ++k)
                for (int z = 0; z < zdim; ++z) t.coords_.push_back({u, w, k, z});
    t.adj_.resize(t.coords_.size());
    t.removed_.assign(t.coords_.size(), false);

    for (int u = 0; u < 2; ++u) {
        for (int w = 0; w < m; ++w) {
            for (int k = 0; k < 12; ++k) {
                for (int z = 0; z < zdim; ++z) {
                    if (z + 1 < zdim) t.add_edge(id(u, w, k, z), id(u, w, k, z + 1)); // external
                    if (k % 2 == 0) t.add_edge(id(u, w, k, z), id(u, w, k + 1, z));   // odd
                }
            }
        }
    }
    // internal couplers: vertical (0,w,k,z) crosses 12 consecutive rows
    for (int w = 0; w < m; ++w) {
        for (int k = 0; k < 12; ++k) {
            const int x = 12 * w + k;
            for (int z = 0; z < zdim; ++z) {
                const int ylo = 12 * z + detail::kPegasusOffsets[0][k];
                for (int y = ylo; y < ylo + 12; ++y) {
                    const int w2 = y / 12;
                    const int k2 = y % 12;
                    if (w2 >= m) continue;
                    const int b = detail::kPegasusOffsets[1][k2];
                    const int z2 = detail::floor_div(x - b, 12);
                    if (z2 < 0 || z2 >= zdim) continue;
                    t.add_edge(id(0, w, k, z), id(1, w2, k2, z2));
                }
            }
        }
    }
    return t;
}

} // namespace qopt

#endif // QOPT_TOPOLOGY_HPP
