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

#ifndef QOPT_BRUTE_FORCE_HPP
#define QOPT_BRUTE_FORCE_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qopt/qubo.hpp"

namespace qopt {

struct BruteForceResult {
    double value = 0.0;
    std::vector<Bits> argmins; // complete set of optimal assignments
};

// Exhaustive scan of all 2^n assignments in Gray-code order with
// incremental single-flip energy updates. Hard-guarded at n <= 28.
inline BruteForceResult brute_force(const Qubo& q) {
    const int n = q.size();
    if (n > 28)
        throw std::invalid_argument("brute_force: n = " + std::to_string(n) +
                                    " exceeds the guard (28)");
    const auto rows = q.rows();
    Bits x(static_cast<std::size_t>(n), 0);
    double e = q.energy(x);

    BruteForceResult best;
    best.value = e;
    best.argmins.push_back(x);

    const std::uint64_t total = n >= 1 ? (std::uint64_t(1) << n) : 1;
    for (std::uint64_t t = 1; t < total; ++t) {
        const int i = std::countr_zero(t); // Gray-code flip position
        e += q.flip_delta(x, i, rows);
        x[static_cast<std::size_t>(i)] ^= 1;
        if (e < best.value) {
            best.value = e;
            best.argmins.clear();
            best.argmins.push_back(x);
        } else if (e == best.value) {
            best.argmins.push_back(x);
        }
    }
    return best;
}

} // namespace qopt

#endif // QOPT_BRUTE_FORCE_HPP
