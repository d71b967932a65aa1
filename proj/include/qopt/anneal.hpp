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

#ifndef QOPT_ANNEAL_HPP
#define QOPT_ANNEAL_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "qopt/qubo.hpp"
#include "qopt/rng.hpp"
#include "qopt/sample_set.hpp"

namespace qopt {

// Classical single-bit-flip Metropolis sampler. A desk-scale stand-in
// for the annealer workflow, not a physics simulation.
struct AnnealParams {
    long long shots = 200;
    long long sweeps = 500;
    // Geometric temperature ladder; 0 selects the coefficient-derived
    // default (hot = max |single-flip delta|, cold = 0.1 * min nonzero
    // coefficient magnitude).
    double t_hot = 0.0;
    double t_cold = 0.0;
    std::uint64_t seed = 0;
};

namespace detail {

struct Schedule {
    double hot;
    double cold;
};

inline Schedule default_schedule(const Qubo& q) {
    double hot = 0.0;
    double granularity = 0.0;
    for (int i = 0; i < q.size(); ++i) {
        const double d = q.diagonal(i);
        double reach = std::abs(d);
        if (d != 0.0 && (granularity == 0.0 || std::abs(d) < granularity))
            granularity = std::abs(d);
        for (int j = 0; j < q.size(); ++j) {
            if (j == i) continue;
            const double c = q.coupling(i, j);
            if (c != 0.0) {
                reach += 2.0 * std::abs(c);
                if (granularity == 0.0 || 2.0 * std::abs(c) < granularity)
                    granularity = 2.0 * std::abs(c);
            }
        }
        hot = std::max(hot, reach);
    }
    if (hot == 0.0) hot = 1.0;
    if (granularity == 0.0) granularity = 1.0;
    return {hot, 0.1 * granularity};
}

} // namespace detail

// Each shot starts from a uniformly random assignment and runs the
// Metropolis sweep schedule independently; the final configuration is
// the shot's sample. Shot s uses the derived stream (seed, s), so the
// sample stream is a prefix-stable, order-independent function of the
// seed and results are bit-identical across runs.
inline SampleSet simulated_anneal(const Qubo& q, const AnnealParams& p,
                                  const FeasibleFn& feasible = nullptr) {
    if (p.shots < 1) throw std::invalid_argument("simulated_anneal: shots must be >= 1");
    if (p.sweeps < 1) throw std::invalid_argument("simulated_anneal: sweeps must be >= 1");
    const bool explicit_schedule = p.t_hot != 0.0 || p.t_cold != 0.0;
    detail::Schedule sched{p.t_hot, p.t_cold};
    if (explicit_schedule) {
        if (!(p.t_hot > 0.0) || !(p.t_cold > 0.0) || p.t_cold > p.t_hot)
            throw std::invalid_argument(
                "simulated_anneal: temperature range must satisfy 0 < t_cold <= t_hot");
    } else {
        sched = detail::default_schedule(q);
    }

    const auto t0 = std::chrono::steady_clock::now();
    const int n = q.size();
    const auto rows = q.rows();
    const double ratio = sched.cold / sched.hot;

    std::vector<Bits> outcomes;
    outcomes.reserve(static_cast<std::size_t>(p.shots));
    for (long long shot = 0; shot < p.shots; ++shot) {
        Rng rng = Rng::child(p.seed, static_cast<std::uint64_t>(shot));
        Bits x(static_cast<std::size_t>(n));
        for (auto& b : x) b = static_cast<std::uint8_t>(rng.next_u64() & 1);

        for (long long sweep = 0; sweep < p.sweeps; ++sweep) {
            const double frac =
                p.sweeps > 1 ? static_cast<double>(sweep) / static_cast<double>(p.sweeps - 1) : 1.0;
            const double temp = sched.hot * std::pow(ratio, frac);
            for (int i = 0; i < n; ++i) {
                const double delta = q.flip_delta(x, i, rows);
                if (delta <= 0.0 || rng.unit() < std::exp(-delta / temp))
                    x[static_cast<std::size_t>(i)] ^= 1;
            }
        }
        outcomes.push_back(std::move(x));
    }

    SampleSet out = detail::collect_samples(q, outcomes, "simulated_anneal", feasible);
    out.wallclock_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

} // namespace qopt

#endif // QOPT_ANNEAL_HPP
