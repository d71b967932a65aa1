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

#ifndef QOPT_QAOA_HPP
#define QOPT_QAOA_HPP

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qopt/qubo.hpp"
#include "qopt/rng.hpp"
#include "qopt/sample_set.hpp"

namespace qopt {

struct QaoaParams {
    int depth = 1;          // ansatz layers p
    long long budget = 200; // expectation evaluations for the optimizer
    long long shots = 1000; // final sampling budget
    std::uint64_t seed = 0;
};

struct QaoaIterate {
    std::vector<double> params; // length 2p: gammas then betas
    double expectation = 0.0;
};

struct QaoaTrace {
    std::vector<QaoaIterate> iterations;
    int depth = 1;
    std::vector<double> final_params;
};

// Dense statevector engine for the standard QAOA ansatz over a QUBO
// cost function: uniform superposition start, alternating diagonal
// cost-phase layers exp(-i*gamma*E(b)) and transverse mixer layers
// exp(-i*beta*X) on every qubit.
class QaoaStatevector {
public:
    explicit QaoaStatevector(const Qubo& q) : n_(q.size()) {
        if (n_ > 20)
            throw std::invalid_argument("QaoaStatevector: n = " + std::to_string(n_) +
                                        " exceeds the statevector guard (20)");
        energies_ = energy_table(q);
        scale_ = 1.0;
        for (double e : energies_) scale_ = std::max(scale_, std::abs(e));
        reset();
    }

    // Exact objective value per basis state, filled by a Gray-code scan.
    static std::vector<double> energy_table(const Qubo& q) {
        const int n = q.size();
        const auto rows = q.rows();
        std::vector<double> table(std::size_t(1) << n);
        Bits x(static_cast<std::size_t>(n), 0);
        double e = q.energy(x);
        std::uint64_t pattern = 0;
        table[0] = e;
        for (std::uint64_t t = 1; t < (std::uint64_t(1) << n); ++t) {
            const int i = [&] {
                std::uint64_t v = t;
                int c = 0;
                while (!(v & 1)) {
                    v >>= 1;
                    ++c;
                }
                return c;
            }();
            e += q.flip_delta(x, i, rows);
            x[static_cast<std::size_t>(i)] ^= 1;
            pattern ^= std::uint64_t(1) << i;
            table[pattern] = e;
        }
        return table;
    }

    void reset() {
        const std::size_t dim = std::size_t(1) << n_;
        const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
        amps_.assign(dim, {amp, 0.0});
    }

    // Phase proportional to the QUBO objective of each basis state.
    // Energies are normalized by max|E| so that gamma has a uniform
    // scale across instances.
    void apply_cost_layer(double gamma) {
        for (std::size_t b = 0; b < amps_.size(); ++b) {
            const double phase = -gamma * energies_[b] / scale_;
            amps_[b] *= std::complex<double>(std::cos(phase), std::sin(phase));
        }
    }

    void apply_mixer_layer(double beta) {
        const std::complex<double> c(std::cos(beta), 0.0);
        const std::complex<double> s(0.0, -std::sin(beta));
        for (int qb = 0; qb < n_; ++qb) {
            const std::size_t stride = std::size_t(1) << qb;
            for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
                for (std::size_t off = 0; off < stride; ++off) {
                    const std::size_t i0 = base + off;
                    const std::size_t i1 = i0 + stride;
                    const auto a0 = amps_[i0];
                    const auto a1 = amps_[i1];
                    amps_[i0] = c * a0 + s * a1;
                    amps_[i1] = s * a0 + c * a1;
                }
            }
        }
    }

    // params = (gamma_1..gamma_p, beta_1..beta_p)
    void prepare(const std::vector<double>& params) {
        const int p = static_cast<int>(params.size()) / 2;
        reset();
        for (int l = 0; l < p; ++l) {
            apply_cost_layer(params[static_cast<std::size_t>(l)]);
            apply_mixer_layer(params[static_cast<std::size_t>(p + l)]);
        }
    }

    double norm() const {
        double s = 0.0;
        for (const auto& a : amps_) s += std::norm(a);
        return std::sqrt(s);
    }

    // <E> = sum_b |amp_b|^2 E(b), exact from the statevector.
    double expectation() const {
        double s = 0.0;
        for (std::size_t b = 0; b < amps_.size(); ++b) s += std::norm(amps_[b]) * energies_[b];
        return s;
    }

    int qubits() const { return n_; }
    const std::vector<double>& energies() const { return energies_; }
    const std::vector<std::complex<double>>& amplitudes() const { return amps_; }

private:
    int n_;
    double scale_ = 1.0;
    std::vector<double> energies_;
    std::vector<std::complex<double>> amps_;
};

namespace detail {

inline std::vector<double> qaoa_linear_ramp(int p) {
    // gammas ramp up, betas ramp down across layers; a common heuristic
    // default, overridable by running the optimizer longer
    std::vector<double> params(static_cast<std::size_t>(2 * p));
    for (int l = 0; l < p; ++l) {
        const double f = (static_cast<double>(l) + 0.5) / static_cast<double>(p);
        params[static_cast<std::size_t>(l)] = f;
        params[static_cast<std::size_t>(p + l)] = 0.7 * (1.0 - f);
    }
    return params;
}

} // namespace detail

// Simultaneous-perturbation (SPSA) tuning of the 2p parameters: two
// expectation evaluations per iteration with standard decaying gain
// sequences (a_k ~ k^-0.602, c_k ~ k^-0.101). The returned incumbent is
// the best parameter vector among all evaluated ones, so it is never
// worse than the initial point. The final SampleSet is drawn from
// |amplitude|^2 at the incumbent.
inline std::pair<SampleSet, QaoaTrace> qaoa_simulate(const Qubo& q, const QaoaParams& p,
                                                     const FeasibleFn& feasible = nullptr) {
    if (p.depth < 1) throw std::invalid_argument("qaoa_simulate: depth must be >= 1");
    if (p.budget < 1) throw std::invalid_argument("qaoa_simulate: optimizer budget must be >= 1");
    if (p.shots < 1) throw std::invalid_argument("qaoa_simulate: shots must be >= 1");

    const auto t0 = std::chrono::steady_clock::now();
    QaoaStatevector sv(q);
    Rng rng = Rng::child(p.seed, 0x9a0a);

    const auto evaluate = [&sv](const std::vector<double>& params) {
        sv.prepare(params);
        return sv.expectation();
    };

    QaoaTrace trace;
    trace.depth = p.depth;

    std::vector<double> theta = detail::qaoa_linear_ramp(p.depth);
    long long evals = 0;

    std::vector<double> best_theta = theta;
    double best_value = evaluate(theta);
    ++evals;
    trace.iterations.push_back({theta, best_value});

    const long long iterations = (p.budget - evals) / 2;
    const double a0 = 0.25;
    const double c0 = 0.15;
    const double big_a = 0.1 * static_cast<double>(iterations > 0 ? iterations : 1);
    const std::size_t dim = theta.size();

    for (long long k = 0; k < iterations; ++k) {
        const double ak = a0 / std::pow(static_cast<double>(k) + 1.0 + big_a, 0.602);
        const double ck = c0 / std::pow(static_cast<double>(k) + 1.0, 0.101);
        std::vector<double> delta(dim);
        for (auto& d : delta) d = (rng.next_u64() & 1) ? 1.0 : -1.0;

        std::vector<double> plus = theta, minus = theta;
        for (std::size_t i = 0; i < dim; ++i) {
            plus[i] += ck * delta[i];
            minus[i] -= ck * delta[i];
        }
        const double fp = evaluate(plus);
        const double fm = evaluate(minus);
        evals += 2;
        if (fp < best_value) {
            best_value = fp;
            best_theta = plus;
        }
        if (fm < best_value) {
            best_value = fm;
            best_theta = minus;
        }
        const double g = (fp - fm) / (2.0 * ck);
        for (std::size_t i = 0; i < dim; ++i) theta[i] -= ak * g * delta[i];
        trace.iterations.push_back({theta, (fp + fm) / 2.0});
    }
    if (evals < p.budget) {
        const double f = evaluate(theta);
        ++evals;
        if (f < best_value) {
            best_value = f;
            best_theta = theta;
        }
    }
    trace.final_params = best_theta;

    // sample |amplitude|^2 at the incumbent parameters
    sv.prepare(best_theta);
    const auto& amps = sv.amplitudes();
    std::vector<double> cdf(amps.size());
    double acc = 0.0;
    for (std::size_t b = 0; b < amps.size(); ++b) {
        acc += std::norm(amps[b]);
        cdf[b] = acc;
    }
    Rng sampler = Rng::child(p.seed, 0x5a3d);
    std::vector<Bits> outcomes;
    outcomes.reserve(static_cast<std::size_t>(p.shots));
    const int n = sv.qubits();
    for (long long s = 0; s < p.shots; ++s) {
        const double u = sampler.unit() * acc;
        const std::size_t b = static_cast<std::size_t>(
            std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        Bits x(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = (b >> i) & 1;
        outcomes.push_back(std::move(x));
    }

    SampleSet out = detail::collect_samples(q, outcomes, "qaoa", feasible);
    out.wallclock_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {std::move(out), std::move(trace)};
}

} // namespace qopt

#endif // QOPT_QAOA_HPP
