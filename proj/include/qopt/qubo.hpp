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

#ifndef QOPT_QUBO_HPP
#define QOPT_QUBO_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace qopt {

using Bits = std::vector<std::uint8_t>;

// Sparse symmetric QUBO, minimization sense:
//
//   E(x) = offset + sum_i Q_ii x_i + 2 * sum_{i<j} Q_ij x_i x_j
//
// Entries are matrix coefficients; the off-diagonal factor 2 comes from
// counting both (i,j) and (j,i) in x^T Q x. The constant offset carries
// the constant parts of squared penalty terms, so that an assignment
// satisfying every constraint contributes exactly zero penalty.
class Qubo {
public:
    Qubo() = default;
    explicit Qubo(int n) : n_(n), diag_(static_cast<std::size_t>(n), 0.0) {
        if (n < 0) throw std::invalid_argument("Qubo: negative size");
    }

    int size() const { return n_; }
    double offset() const { return offset_; }
    void add_offset(double v) { check_finite(v); offset_ += v; }

    void add_diagonal(int i, double v) {
        check_index(i);
        check_finite(v);
        diag_[static_cast<std::size_t>(i)] += v;
    }

    // Accumulates the matrix entry Q_ij (= Q_ji). The realized product
    // coefficient in E(x) is 2*Q_ij.
    void add_coupling(int i, int j, double v) {
        check_index(i);
        check_index(j);
        check_finite(v);
        if (i == j) {
            diag_[static_cast<std::size_t>(i)] += v;
            return;
        }
        if (i > j) std::swap(i, j);
        off_[key(i, j)] += v;
    }

    double diagonal(int i) const {
        check_index(i);
        return diag_[static_cast<std::size_t>(i)];
    }

    double coupling(int i, int j) const {
        if (i == j) return diagonal(i);
        if (i > j) std::swap(i, j);
        auto it = off_.find(key(i, j));
        return it == off_.end() ? 0.0 : it->second;
    }

    double energy(const Bits& x) const {
        if (static_cast<int>(x.size()) != n_)
            throw std::invalid_argument("Qubo::energy: bitstring length mismatch");
        double e = offset_;
        for (int i = 0; i < n_; ++i)
            if (x[static_cast<std::size_t>(i)]) e += diag_[static_cast<std::size_t>(i)];
        for (const auto& [k, v] : off_) {
            const int i = static_cast<int>(k >> 32);
            const int j = static_cast<int>(k & 0xffffffffULL);
            if (x[static_cast<std::size_t>(i)] && x[static_cast<std::size_t>(j)]) e += 2.0 * v;
        }
        return e;
    }

    // Upper-triangle entries (i <= j), index-sorted. Diagonal zeros skipped.
    std::vector<std::tuple<int, int, double>> entries() const {
        std::vector<std::tuple<int, int, double>> out;
        out.reserve(static_cast<std::size_t>(n_) + off_.size());
        for (int i = 0; i < n_; ++i) {
            const double v = diag_[static_cast<std::size_t>(i)];
            if (v != 0.0) out.push_back({i, i, v});
        }
        for (const auto& [k, v] : off_) {
            if (v != 0.0)
                out.push_back({static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffULL), v});
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Off-diagonal neighbor lists; row i holds (j, Q_ij) for j != i.
    // Solvers use this for incremental single-flip energy deltas.
    std::vector<std::vector<std::pair<int, double>>> rows() const {
        std::vector<std::vector<std::pair<int, double>>> r(static_cast<std::size_t>(n_));
        for (const auto& [k, v] : off_) {
            if (v == 0.0) continue;
            const int i = static_cast<int>(k >> 32);
            const int j = static_cast<int>(k & 0xffffffffULL);
            r[static_cast<std::size_t>(i)].push_back({j, v});
            r[static_cast<std::size_t>(j)].push_back({i, v});
        }
        return r;
    }

    // Energy change from flipping bit i of x.
    // Requires rows() output for the same Qubo.
    double flip_delta(const Bits& x, int i,
                      const std::vector<std::vector<std::pair<int, double>>>& rows) const {
        double field = diag_[static_cast<std::size_t>(i)];
        for (const auto& [j, v] : rows[static_cast<std::size_t>(i)])
            if (x[static_cast<std::size_t>(j)]) field += 2.0 * v;
        return x[static_cast<std::size_t>(i)] ? -field : field;
    }

    // Share of nonzero matrix entries, counting (i,j) and (j,i) separately,
    // plus nonzero diagonal entries, over n^2.
    double nonzero_share() const {
        if (n_ < 1) throw std::invalid_argument("nonzero_share: empty Qubo");
        std::size_t count = 0;
        for (double v : diag_)
            if (v != 0.0) ++count;
        for (const auto& [k, v] : off_) {
            (void)k;
            if (v != 0.0) count += 2;
        }
        return static_cast<double>(count) /
               (static_cast<double>(n_) * static_cast<double>(n_));
    }

private:
    static std::uint64_t key(int i, int j) {
        return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
    }
    void check_index(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("Qubo: index out of range");
    }
    static void check_finite(double v) {
        if (!std::isfinite(v)) throw std::invalid_argument("Qubo: non-finite coefficient");
    }

    int n_ = 0;
    double offset_ = 0.0;
    std::vector<double> diag_;
    std::map<std::uint64_t, double> off_;
};

} // namespace qopt

#endif // QOPT_QUBO_HPP
