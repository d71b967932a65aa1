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

#ifndef QOPT_QUBIT_COST_HPP
#define QOPT_QUBIT_COST_HPP

#include <stdexcept>

#include "qopt/encodings.hpp"

namespace qopt {

enum class Backend { neutral_atom, annealer_pegasus, gate_based };

inline const char* to_string(Backend b) {
    switch (b) {
        case Backend::neutral_atom: return "neutral_atom";
        case Backend::annealer_pegasus: return "annealer_pegasus";
        case Backend::gate_based: return "gate_based";
    }
    return "?";
}

// Worst-case physical qubits for an N-variable clique on Pegasus:
// 24 * ceil((N+10)/12) * ceil((N-2)/12). The formula degenerates to 0
// for N <= 2, which is meaningless hardware-wise; clamped to N.
inline long long n_qa(long long n) {
    if (n < 1) throw std::invalid_argument("n_qa: N must be >= 1");
    const long long a = (n + 10 + 11) / 12;
    const long long b = n >= 2 ? (n - 2 + 11) / 12 : 0;
    const long long formula = 24 * a * b;
    return formula > n ? formula : n;
}

// Physical-qubit estimate for solving an N-variable instance of the
// given problem class on the given backend. UD-MIS is native on the
// neutral-atom machine (N qubits); any other QUBO goes through the
// 4N^2-node independent-set gadget.
inline long long qubit_cost(SourceClass cls, Backend backend, long long n) {
    if (n < 1) throw std::invalid_argument("qubit_cost: N must be >= 1");
    switch (backend) {
        case Backend::neutral_atom:
            return cls == SourceClass::udmis ? n : 4 * n * n;
        case Backend::annealer_pegasus:
            return n_qa(n);
        case Backend::gate_based:
            return n;
    }
    throw std::invalid_argument("qubit_cost: unknown backend");
}

} // namespace qopt

#endif // QOPT_QUBIT_COST_HPP
