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

#ifndef QOPT_ENCODINGS_HPP
#define QOPT_ENCODINGS_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qopt/graph.hpp"
#include "qopt/instances.hpp"
#include "qopt/qubo.hpp"

namespace qopt {

enum class SourceClass { udmis, maxcut, tsp_qap, tsp_mtz, tsp_dfj };

inline const char* to_string(SourceClass c) {
    switch (c) {
        case SourceClass::udmis: return "udmis";
        case SourceClass::maxcut: return "maxcut";
        case SourceClass::tsp_qap: return "tsp_qap";
        case SourceClass::tsp_mtz: return "tsp_mtz";
        case SourceClass::tsp_dfj: return "tsp_dfj";
    }
    return "?";
}

// Semantic role of one QUBO variable. Indices are 1-based problem node
// labels where the formulations use them that way (TSP), 0-based graph
// node indices otherwise.
struct VarRole {
    enum class Kind {
        node,       // MIS/MaxCut node indicator, a = node
        edge,      // DFJ undirected edge var, (a,b) = endpoints, a < b
        arc,       // MTZ directed arc var, a -> b
        assign,    // QAP y_{a,k}: node a visited at step b
        order_bit, // MTZ u-binarization bit r of node a
        slack_bit  // slack bit r of constraint a (MTZ ordered-pair id / DFJ subset id)
    };
    Kind kind = Kind::node;
    int a = -1;
    int b = -1;
    int r = -1;
};

struct EncodingRecord {
    SourceClass source = SourceClass::udmis;
    Qubo qubo;
    double m = 0.0;   // penalty coefficient (degree penalties for MTZ)
    double m2 = 0.0;  // MTZ ordering-constraint penalty
    std::vector<VarRole> roles;
    std::string warning; // set when a penalty override may break soundness

    // decode context
    Graph graph;                                // udmis / maxcut
    TspInstance tsp;                            // tsp_*
    std::vector<std::vector<int>> dfj_subsets;  // 0-based node lists, aligned with slack ids
    int nodes = 0;
};

struct DecodedSolution {
    bool feasible = false;
    std::optional<double> original_objective; // absent iff infeasible
    double qubo_objective = 0.0;
    std::vector<int> node_set;  // udmis
    Bits partition;             // maxcut
    std::vector<int> tour;      // tsp, 0-based nodes, starts at node 0
};

namespace detail {

// coeff * x_a * x_b added to E(x); handles the symmetric-matrix factor 2.
inline void add_product(Qubo& q, int a, int b, double coeff) {
    if (a == b)
        q.add_diagonal(a, coeff);
    else
        q.add_coupling(a, b, coeff / 2.0);
}

// weight * (sum_t lambda_t x_t + c0)^2 added to E(x), constant included.
inline void add_squared_penalty(Qubo& q, double weight,
                                const std::vector<std::pair<int, double>>& terms, double c0) {
    q.add_offset(weight * c0 * c0);
    for (std::size_t s = 0; s < terms.size(); ++s) {
        const auto& [vs, ls] = terms[s];
        q.add_diagonal(vs, weight * (ls * ls + 2.0 * c0 * ls));
        for (std::size_t t = s + 1; t < terms.size(); ++t) {
            const auto& [vt, lt] = terms[t];
            add_product(q, vs, vt, 2.0 * weight * ls * lt);
        }
    }
}

inline int floor_log2(int v) {
    int l = 0;
    while ((1 << (l + 1)) <= v) ++l;
    return l;
}

} // namespace detail

// ---------------------------------------------------------------------------
// MIS / MaxCut
// ---------------------------------------------------------------------------

// Q_ii = -1, Q_ij = M/2 on edges; minimizing x^T Q x maximizes the
// independent-set size. Default M = |V| + 1.
inline EncodingRecord encode_mis(const Graph& g, std::optional<double> m_opt = std::nullopt) {
    const int n = g.node_count();
    const double m = m_opt.value_or(static_cast<double>(n) + 1.0);

    EncodingRecord rec;
    rec.source = SourceClass::udmis;
    rec.graph = g;
    rec.nodes = n;
    rec.m = m;
    if (m <= 1.0)
        rec.warning = "penalty M <= 1 may not dominate: QUBO optima can be infeasible";
    else if (m < static_cast<double>(n) + 1.0 && m_opt.has_value())
        rec.warning = "penalty M below the sound default |V|+1";

    rec.qubo = Qubo(n);
    for (int i = 0; i < n; ++i) rec.qubo.add_diagonal(i, -1.0);
    for (const auto& e : g.edges()) rec.qubo.add_coupling(e.u, e.v, m / 2.0);
    rec.roles.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rec.roles[static_cast<std::size_t>(i)] = {VarRole::Kind::node, i, -1, -1};
    return rec;
}

// Q_ii = -sum of incident weights, Q_ij = w_ij on edges. Unconstrained:
// cut_weight(x) = -(x^T Q x).
inline EncodingRecord encode_maxcut(const Graph& g) {
    const int n = g.node_count();
    EncodingRecord rec;
    rec.source = SourceClass::maxcut;
    rec.graph = g;
    rec.nodes = n;

    rec.qubo = Qubo(n);
    for (const auto& e : g.edges()) {
        rec.qubo.add_diagonal(e.u, -e.weight);
        rec.qubo.add_diagonal(e.v, -e.weight);
        rec.qubo.add_coupling(e.u, e.v, e.weight);
    }
    rec.roles.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rec.roles[static_cast<std::size_t>(i)] = {VarRole::Kind::node, i, -1, -1};
    return rec;
}

// ---------------------------------------------------------------------------
// TSP variable counts
// ---------------------------------------------------------------------------

enum class TspFormulation { qap, mtz, dfj };

inline const char* to_string(TspFormulation f) {
    switch (f) {
        case TspFormulation::qap: return "qap";
        case TspFormulation::mtz: return "mtz";
        case TspFormulation::dfj: return "dfj";
    }
    return "?";
}

struct VarCount {
    long long total = 0;      // variables in the constructed QUBO
    long long core = 0;       // tour variables (assignments / arcs / edges)
    long long order_bits = 0; // MTZ u-binarization bits
    long long slack_bits = 0; // inequality slack bits
    // MTZ only: auxiliary count (order + slack bits) as stated by the
    // closed-form (N-1)((N-1)*floor(log2(N-2)) + 2N - 3). The arc
    // variables are reported separately in `core`; `total` includes them.
    long long mtz_aux = 0;
};

namespace detail {

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace detail

inline VarCount count_vars(TspFormulation f, int n) {
    VarCount vc;
    switch (f) {
        case TspFormulation::qap: {
            if (n < 2) throw std::invalid_argument("count_vars(qap): N must be >= 2");
            vc.core = static_cast<long long>(n - 1) * (n - 1);
            vc.total = vc.core;
            return vc;
        }
        case TspFormulation::mtz: {
            if (n < 4) throw std::invalid_argument("count_vars(mtz): N must be >= 4");
            const long long l = detail::floor_log2(n - 2);
            vc.core = static_cast<long long>(n) * (n - 1);
            vc.order_bits = static_cast<long long>(n - 1) * (l + 1);
            vc.slack_bits = static_cast<long long>(n - 1) * (n - 2) * (l + 2);
            vc.mtz_aux = vc.order_bits + vc.slack_bits;
            vc.total = vc.core + vc.mtz_aux;
            return vc;
        }
        case TspFormulation::dfj: {
            if (n < 4) throw std::invalid_argument("count_vars(dfj): N must be >= 4");
            vc.core = static_cast<long long>(n) * (n - 1) / 2;
            long long slack = 0;
            const int half = n / 2; // max subset size in the constraint family
            for (int k = 3; k <= half; ++k) {
                const long long bits = detail::floor_log2(k - 1) + 1;
                long long subsets = detail::binomial(n, k);
                if (n % 2 == 0 && k == half) subsets /= 2; // only subsets containing node 1
                slack += subsets * bits;
            }
            vc.slack_bits = slack;
            vc.total = vc.core + slack;
            return vc;
        }
    }
    throw std::invalid_argument("count_vars: unknown formulation");
}

// ---------------------------------------------------------------------------
// TSP encoders
// ---------------------------------------------------------------------------

// Quadratic-assignment formulation: y_{ik} = 1 iff node i is visited at
// step k, for i,k in {2..N}; node 1 is fixed at step 1 and reinserted by
// the decoder. Both one-hot families are penalized with M; default
// M = N(N-1)/2 * max c + 1.
inline EncodingRecord encode_tsp_qap(const TspInstance& t, std::optional<double> m_opt = std::nullopt) {
    const int n = t.node_count();
    if (n < 3) throw std::invalid_argument("encode_tsp_qap: N must be >= 3");
    const double cmax = t.max_distance();
    const double m_default = static_cast<double>(n) * (n - 1) / 2.0 * cmax + 1.0;
    const double m = m_opt.value_or(m_default);

    EncodingRecord rec;
    rec.source = SourceClass::tsp_qap;
    rec.tsp = t;
    rec.nodes = n;
    rec.m = m;
    if (m_opt.has_value() && m < m_default)
        rec.warning = "penalty M below the sound default N(N-1)/2*max_c+1";

    const int side = n - 1;
    const auto y = [side](int i, int k) { return (i - 2) * side + (k - 2); }; // i,k in 2..N
    rec.qubo = Qubo(side * side);
    rec.roles.resize(static_cast<std::size_t>(side) * side);
    for (int i = 2; i <= n; ++i)
        for (int k = 2; k <= n; ++k)
            rec.roles[static_cast<std::size_t>(y(i, k))] = {VarRole::Kind::assign, i, k, -1};

    // tour cost: first leg, consecutive steps, closing leg (c is 0-based)
    for (int j = 2; j <= n; ++j) rec.qubo.add_diagonal(y(j, 2), t.at(0, j - 1));
    for (int i = 2; i <= n; ++i) {
        rec.qubo.add_diagonal(y(i, n), t.at(0, i - 1));
        for (int j = 2; j <= n; ++j) {
            if (j == i) continue;
            for (int k = 2; k <= n - 1; ++k)
                detail::add_product(rec.qubo, y(i, k), y(j, k + 1), t.at(i - 1, j - 1));
        }
    }

    // one-hot penalties: each node appears at exactly one step, each step
    // holds exactly one node
    for (int i = 2; i <= n; ++i) {
        std::vector<std::pair<int, double>> terms;
        for (int k = 2; k <= n; ++k) terms.push_back({y(i, k), 1.0});
        detail::add_squared_penalty(rec.qubo, m, terms, -1.0);
    }
    for (int k = 2; k <= n; ++k) {
        std::vector<std::pair<int, double>> terms;
        for (int i = 2; i <= n; ++i) terms.push_back({y(i, k), 1.0});
        detail::add_squared_penalty(rec.qubo, m, terms, -1.0);
    }
    return rec;
}

// Miller-Tucker-Zemlin formulation with binarized node positions.
// Directed arcs x_ij (i != j); u_j = 2 + sum_r 2^r b_{j,r} for j in
// {2..N}; each ordering constraint gets floor(log2(N-2))+2 slack bits.
// Degree penalties use M1 = max c + 1, ordering penalties use
// M2 = 2 max c + 1.
inline EncodingRecord encode_tsp_mtz(const TspInstance& t,
                                     std::optional<double> m1_opt = std::nullopt,
                                     std::optional<double> m2_opt = std::nullopt) {
    const int n = t.node_count();
    if (n < 4) throw std::invalid_argument("encode_tsp_mtz: N must be >= 4");
    const double cmax = t.max_distance();
    const double m1 = m1_opt.value_or(cmax + 1.0);
    const double m2 = m2_opt.value_or(2.0 * cmax + 1.0);

    EncodingRecord rec;
    rec.source = SourceClass::tsp_mtz;
    rec.tsp = t;
    rec.nodes = n;
    rec.m = m1;
    rec.m2 = m2;
    if ((m1_opt && m1 < cmax + 1.0) || (m2_opt && m2 < 2.0 * cmax + 1.0))
        rec.warning = "penalty override below the sound defaults (max_c+1, 2*max_c+1)";

    const int ub = detail::floor_log2(n - 2) + 1; // u bits per node
    const int sb = detail::floor_log2(n - 2) + 2; // slack bits per ordering constraint

    const auto vc = count_vars(TspFormulation::mtz, n);
    rec.qubo = Qubo(static_cast<int>(vc.total));
    rec.roles.resize(static_cast<std::size_t>(vc.total));

    // variable layout: arcs, then u bits, then slack bits
    const auto arc = [n](int i, int j) { // i, j in 1..N, i != j
        return (i - 1) * (n - 1) + (j - 1) - (j > i ? 1 : 0);
    };
    const int u_base = n * (n - 1);
    const auto u_bit = [&](int j, int r) { return u_base + (j - 2) * ub + r; }; // j in 2..N
    const int s_base = u_base + (n - 1) * ub;
    const auto pair_id = [n](int i, int j) { // ordered (i,j), i != j, both in 2..N
        return (i - 2) * (n - 2) + (j - 2) - (j > i ? 1 : 0);
    };
    const auto s_bit = [&](int pid, int r) { return s_base + pid * sb + r; };

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            rec.roles[static_cast<std::size_t>(arc(i, j))] = {VarRole::Kind::arc, i, j, -1};
            rec.qubo.add_diagonal(arc(i, j), t.at(i - 1, j - 1));
        }
    for (int j = 2; j <= n; ++j)
        for (int r = 0; r < ub; ++r)
            rec.roles[static_cast<std::size_t>(u_bit(j, r))] = {VarRole::Kind::order_bit, j, -1, r};

    // out-degree and in-degree one-hot penalties
    for (int i = 1; i <= n; ++i) {
        std::vector<std::pair<int, double>> out_terms, in_terms;
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            out_terms.push_back({arc(i, j), 1.0});
            in_terms.push_back({arc(j, i), 1.0});
        }
        detail::add_squared_penalty(rec.qubo, m1, out_terms, -1.0);
        detail::add_squared_penalty(rec.qubo, m1, in_terms, -1.0);
    }

    // ordering constraints: u_i - u_j + (N-1) x_ij + s = N-2; the +2
    // offsets of both u expansions cancel
    for (int i = 2; i <= n; ++i) {
        for (int j = 2; j <= n; ++j) {
            if (j == i) continue;
            const int pid = pair_id(i, j);
            std::vector<std::pair<int, double>> terms;
            for (int r = 0; r < ub; ++r) {
                terms.push_back({u_bit(i, r), static_cast<double>(1 << r)});
                terms.push_back({u_bit(j, r), -static_cast<double>(1 << r)});
            }
            terms.push_back({arc(i, j), static_cast<double>(n - 1)});
            for (int r = 0; r < sb; ++r) {
                rec.roles[static_cast<std::size_t>(s_bit(pid, r))] = {VarRole::Kind::slack_bit, i, j, r};
                terms.push_back({s_bit(pid, r), static_cast<double>(1 << r)});
            }
            detail::add_squared_penalty(rec.qubo, m2, terms, -static_cast<double>(n - 2));
        }
    }
    return rec;
}

// Dantzig-Fulkerson-Johnson formulation. Undirected edge variables plus
// one subtour-elimination penalty per subset S, 3 <= |S| <= N/2 (for
// even N, size-N/2 subsets restricted to those containing node 1), each
// with floor(log2(|S|-1))+1 slack bits. Default M = max c + 1.
inline EncodingRecord encode_tsp_dfj(const TspInstance& t, std::optional<double> m_opt = std::nullopt) {
    const int n = t.node_count();
    if (n < 4) throw std::invalid_argument("encode_tsp_dfj: N must be >= 4");
    if (n > 12) {
        const auto vc = count_vars(TspFormulation::dfj, n);
        throw std::invalid_argument("encode_tsp_dfj: N = " + std::to_string(n) +
                                    " exceeds the size guard (QUBO would need " +
                                    std::to_string(vc.total) + " variables)");
    }
    const double cmax = t.max_distance();
    const double m = m_opt.value_or(cmax + 1.0);

    EncodingRecord rec;
    rec.source = SourceClass::tsp_dfj;
    rec.tsp = t;
    rec.nodes = n;
    rec.m = m;
    if (m_opt.has_value() && m < cmax + 1.0)
        rec.warning = "penalty M below the sound default max_c+1";

    const auto edge = [n](int i, int j) { // i < j, 1..N
        return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
    };

    // subsets of {1..N} with 3 <= |S| <= floor(N/2); for even N the
    // size-N/2 family keeps only subsets containing node 1
    std::vector<std::vector<int>> subsets;
    const int half = n / 2;
    std::vector<int> pick;
    const auto enumerate = [&](auto&& self, int start, int size) -> void {
        if (static_cast<int>(pick.size()) == size) {
            if (n % 2 == 0 && size == half && pick[0] != 0) return;
            subsets.push_back(pick);
            return;
        }
        for (int v = start; v < n; ++v) {
            pick.push_back(v);
            self(self, v + 1, size);
            pick.pop_back();
        }
    };
    for (int size = 3; size <= half; ++size) enumerate(enumerate, 0, size);

    rec.dfj_subsets = subsets;
    const int n_edges = n * (n - 1) / 2;
    int total = n_edges;
    std::vector<int> slack_base(subsets.size());
    std::vector<int> slack_bits(subsets.size());
    for (std::size_t s = 0; s < subsets.size(); ++s) {
        slack_base[s] = total;
        slack_bits[s] = detail::floor_log2(static_cast<int>(subsets[s].size()) - 1) + 1;
        total += slack_bits[s];
    }

    rec.qubo = Qubo(total);
    rec.roles.resize(static_cast<std::size_t>(total));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            rec.roles[static_cast<std::size_t>(edge(i, j))] = {VarRole::Kind::edge, i, j, -1};
            rec.qubo.add_diagonal(edge(i, j), t.at(i - 1, j - 1));
        }

    // degree penalties: every node meets exactly two tour edges
    for (int i = 1; i <= n; ++i) {
        std::vector<std::pair<int, double>> terms;
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            terms.push_back({edge(std::min(i, j), std::max(i, j)), 1.0});
        }
        detail::add_squared_penalty(rec.qubo, m, terms, -2.0);
    }

    // subtour elimination: sum_{E(S)} x + slack = |S| - 1
    for (std::size_t s = 0; s < subsets.size(); ++s) {
        const auto& nodes = subsets[s];
        std::vector<std::pair<int, double>> terms;
        for (std::size_t a = 0; a < nodes.size(); ++a)
            for (std::size_t b = a + 1; b < nodes.size(); ++b)
                terms.push_back({edge(nodes[a] + 1, nodes[b] + 1), 1.0});
        for (int r = 0; r < slack_bits[s]; ++r) {
            const int v = slack_base[s] + r;
            rec.roles[static_cast<std::size_t>(v)] = {VarRole::Kind::slack_bit, static_cast<int>(s), -1, r};
            terms.push_back({v, static_cast<double>(1 << r)});
        }
        detail::add_squared_penalty(rec.qubo, m, terms,
                                    -(static_cast<double>(nodes.size()) - 1.0));
    }
    return rec;
}

// ---------------------------------------------------------------------------
// Decoding
// ---------------------------------------------------------------------------

namespace detail {

inline DecodedSolution decode_mis(const EncodingRecord& rec, const Bits& bits) {
    DecodedSolution out;
    for (int i = 0; i < rec.nodes; ++i)
        if (bits[static_cast<std::size_t>(i)]) out.node_set.push_back(i);
    out.feasible = true;
    for (const auto& e : rec.graph.edges())
        if (bits[static_cast<std::size_t>(e.u)] && bits[static_cast<std::size_t>(e.v)]) {
            out.feasible = false;
            break;
        }
    if (out.feasible) out.original_objective = static_cast<double>(out.node_set.size());
    return out;
}

inline DecodedSolution decode_maxcut(const EncodingRecord& rec, const Bits& bits) {
    DecodedSolution out;
    out.partition = bits;
    out.feasible = true; // no feasibility constraints for MaxCut
    double cut = 0.0;
    for (const auto& e : rec.graph.edges())
        if (bits[static_cast<std::size_t>(e.u)] != bits[static_cast<std::size_t>(e.v)])
            cut += e.weight;
    out.original_objective = cut;
    return out;
}

inline double tour_length(const TspInstance& t, const std::vector<int>& tour) {
    double len = 0.0;
    for (std::size_t i = 0; i < tour.size(); ++i)
        len += t.at(tour[i], tour[(i + 1) % tour.size()]);
    return len;
}

inline DecodedSolution decode_qap(const EncodingRecord& rec, const Bits& bits) {
    DecodedSolution out;
    const int n = rec.nodes;
    const int side = n - 1;
    const auto y = [side](int i, int k) { return (i - 2) * side + (k - 2); };

    std::vector<int> node_at_step(static_cast<std::size_t>(n) + 1, -1); // steps 2..N
    bool ok = true;
    for (int i = 2; i <= n && ok; ++i) {
        int hits = 0;
        for (int k = 2; k <= n; ++k) hits += bits[static_cast<std::size_t>(y(i, k))] ? 1 : 0;
        if (hits != 1) ok = false;
    }
    for (int k = 2; k <= n && ok; ++k) {
        int node = -1, hits = 0;
        for (int i = 2; i <= n; ++i)
            if (bits[static_cast<std::size_t>(y(i, k))]) {
                ++hits;
                node = i;
            }
        if (hits != 1) ok = false;
        else node_at_step[static_cast<std::size_t>(k)] = node;
    }
    out.feasible = ok;
    if (ok) {
        out.tour.push_back(0); // node 1 fixed at step 1
        for (int k = 2; k <= n; ++k) out.tour.push_back(node_at_step[static_cast<std::size_t>(k)] - 1);
        out.original_objective = tour_length(rec.tsp, out.tour);
    }
    return out;
}

inline DecodedSolution decode_mtz(const EncodingRecord& rec, const Bits& bits) {
    DecodedSolution out;
    const int n = rec.nodes;
    const auto arc = [n](int i, int j) { return (i - 1) * (n - 1) + (j - 1) - (j > i ? 1 : 0); };

    std::vector<int> succ(static_cast<std::size_t>(n), -1);
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
        int outdeg = 0;
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            if (bits[static_cast<std::size_t>(arc(i, j))]) {
                ++outdeg;
                succ[static_cast<std::size_t>(i - 1)] = j - 1;
                ++indeg[static_cast<std::size_t>(j - 1)];
            }
        }
        if (outdeg != 1) ok = false;
    }
    for (int j = 0; j < n && ok; ++j)
        if (indeg[static_cast<std::size_t>(j)] != 1) ok = false;
    if (ok) {
        // follow successors from node 0; a single N-cycle is a valid tour
        std::vector<int> tour;
        int cur = 0;
        for (int step = 0; step < n; ++step) {
            tour.push_back(cur);
            cur = succ[static_cast<std::size_t>(cur)];
        }
        ok = (cur == 0) &&
             (std::set<int>(tour.begin(), tour.end()).size() == static_cast<std::size_t>(n));
        if (ok) out.tour = tour;
    }
    out.feasible = ok;
    if (ok) out.original_objective = tour_length(rec.tsp, out.tour);
    return out;
}

inline DecodedSolution decode_dfj(const EncodingRecord& rec, const Bits& bits) {
    DecodedSolution out;
    const int n = rec.nodes;
    const auto edge = [n](int i, int j) { return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1); };

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    bool ok = true;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (bits[static_cast<std::size_t>(edge(i, j))]) {
                adj[static_cast<std::size_t>(i - 1)].push_back(j - 1);
                adj[static_cast<std::size_t>(j - 1)].push_back(i - 1);
            }
    for (int i = 0; i < n && ok; ++i)
        if (adj[static_cast<std::size_t>(i)].size() != 2) ok = false;
    if (ok) {
        std::vector<int> tour;
        int prev = -1, cur = 0;
        for (int step = 0; step < n; ++step) {
            tour.push_back(cur);
            const auto& nb = adj[static_cast<std::size_t>(cur)];
            const int next = (nb[0] == prev) ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        ok = (cur == 0) &&
             (std::set<int>(tour.begin(), tour.end()).size() == static_cast<std::size_t>(n));
        if (ok) out.tour = tour;
    }
    out.feasible = ok;
    if (ok) out.original_objective = tour_length(rec.tsp, out.tour);
    return out;
}

} // namespace detail

// Checks feasibility against the original problem constraints and
// recomputes the original objective directly from the decoded payload.
// The QUBO objective is always reported.
inline DecodedSolution decode(const EncodingRecord& rec, const Bits& bits) {
    if (static_cast<int>(bits.size()) != rec.qubo.size())
        throw std::invalid_argument("decode: bitstring length != variable count");
    DecodedSolution out;
    switch (rec.source) {
        case SourceClass::udmis: out = detail::decode_mis(rec, bits); break;
        case SourceClass::maxcut: out = detail::decode_maxcut(rec, bits); break;
        case SourceClass::tsp_qap: out = detail::decode_qap(rec, bits); break;
        case SourceClass::tsp_mtz: out = detail::decode_mtz(rec, bits); break;
        case SourceClass::tsp_dfj: out = detail::decode_dfj(rec, bits); break;
    }
    out.qubo_objective = rec.qubo.energy(bits);
    return out;
}

} // namespace qopt

#endif // QOPT_ENCODINGS_HPP
