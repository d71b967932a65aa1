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

#ifndef QOPT_METRICS_HPP
#define QOPT_METRICS_HPP

#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qopt {

struct Deviations {
    double r_f = 0.0; // relative objective deviation from the baseline
    double r_t = 0.0; // relative runtime deviation from the baseline
};

inline Deviations rel_deviations(double f_q, double f_c, double t_q, double t_c) {
    if (!(f_c > 0.0))
        throw std::invalid_argument("rel_deviations: baseline objective f_c must be > 0");
    if (!(t_c > 0.0))
        throw std::invalid_argument("rel_deviations: baseline runtime t_c must be > 0");
    return {(f_q - f_c) / f_c, (t_q - t_c) / t_c};
}

// One feasible run paired with its baseline objective.
struct BaselinedRun {
    std::string problem_class; // "udmis" | "maxcut" | "tsp"
    std::string approach;
    double f_q = 0.0;
    std::optional<double> f_c; // missing -> excluded and counted
};

// Per (class, approach) bucket counts of |R_f| thresholds; "no worse"
// means R_f >= 0 for the maximization classes (udmis, maxcut) and
// R_f <= 0 for tsp. Shares are rendered as a dash when total < 2.
struct BucketRow {
    std::string problem_class;
    std::string approach;
    long long total = 0;
    long long within_25 = 0;
    long long within_10 = 0;
    long long within_5 = 0;
    long long no_worse = 0;
    long long excluded_missing_baseline = 0;

    std::string share(long long count) const {
        if (total < 2) return "--";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.1f%%",
                      100.0 * static_cast<double>(count) / static_cast<double>(total));
        return buf;
    }
};

inline bool is_maximization_class(const std::string& problem_class) {
    return problem_class == "udmis" || problem_class == "maxcut";
}

inline std::vector<BucketRow> bucket_summary(const std::vector<BaselinedRun>& runs) {
    std::map<std::pair<std::string, std::string>, BucketRow> rows;
    for (const auto& run : runs) {
        auto& row = rows[{run.problem_class, run.approach}];
        row.problem_class = run.problem_class;
        row.approach = run.approach;
        if (!run.f_c.has_value()) {
            ++row.excluded_missing_baseline;
            continue;
        }
        const double r_f = rel_deviations(run.f_q, *run.f_c, 1.0, 1.0).r_f;
        ++row.total;
        if (std::abs(r_f) <= 0.25) ++row.within_25;
        if (std::abs(r_f) <= 0.10) ++row.within_10;
        if (std::abs(r_f) <= 0.05) ++row.within_5;
        const bool no_worse = is_maximization_class(run.problem_class) ? r_f >= 0.0 : r_f <= 0.0;
        if (no_worse) ++row.no_worse;
    }
    std::vector<BucketRow> out;
    out.reserve(rows.size());
    for (auto& [key, row] : rows) out.push_back(std::move(row));
    return out;
}

// Ordinary least squares on (log N, log N_e): log N_e = beta0 + beta log N.
struct RegressionFit {
    double beta0 = 0.0;
    double beta = 0.0;
    double r_squared = 0.0;
    int n_points = 0;
};

inline RegressionFit fit_embedding_regression(const std::vector<std::pair<double, double>>& pairs) {
    if (pairs.size() < 3)
        throw std::invalid_argument("fit_embedding_regression: need at least 3 points");
    double sx = 0.0, sy = 0.0;
    for (const auto& [n, ne] : pairs) {
        if (!(n > 0.0) || !(ne > 0.0))
            throw std::invalid_argument("fit_embedding_regression: counts must be positive");
        sx += std::log(n);
        sy += std::log(ne);
    }
    const double count = static_cast<double>(pairs.size());
    const double mx = sx / count;
    const double my = sy / count;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& [n, ne] : pairs) {
        const double dx = std::log(n) - mx;
        const double dy = std::log(ne) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0)
        throw std::invalid_argument("fit_embedding_regression: all N equal (degenerate X variance)");

    RegressionFit fit;
    fit.n_points = static_cast<int>(pairs.size());
    fit.beta = sxy / sxx;
    fit.beta0 = my - fit.beta * mx;
    double ss_res = 0.0;
    for (const auto& [n, ne] : pairs) {
        const double r = std::log(ne) - (fit.beta0 + fit.beta * std::log(n));
        ss_res += r * r;
    }
    fit.r_squared = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
    if (fit.r_squared < 0.0) fit.r_squared = 0.0;
    if (fit.r_squared > 1.0) fit.r_squared = 1.0;
    return fit;
}

// Per-instance split of configuration (embedding) time vs solve time.
struct TimeSplitRow {
    std::string instance_id;
    double embed_s = 0.0;
    double solve_s = 0.0;

    double share() const {
        const double total = embed_s + solve_s;
        return total > 0.0 ? embed_s / total : 0.0;
    }
};

} // namespace qopt

#endif // QOPT_METRICS_HPP
