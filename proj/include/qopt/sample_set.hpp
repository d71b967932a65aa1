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

#ifndef QOPT_SAMPLE_SET_HPP
#define QOPT_SAMPLE_SET_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qopt/qubo.hpp"

namespace qopt {

struct SampleRecord {
    Bits bits;
    double energy = 0.0;
    long long count = 0;
    bool feasible = true;
};

// Aggregated measurement outcomes of one solver run. Records are kept
// sorted by energy ascending; counts sum to the shot budget.
struct SampleSet {
    std::vector<SampleRecord> records;
    long long shots = 0;
    double wallclock_s = 0.0;
    std::string solver;

    const SampleRecord& best() const {
        if (records.empty()) throw std::logic_error("SampleSet: empty");
        return records.front();
    }

    double feasible_share() const {
        if (shots == 0) return 0.0;
        long long f = 0;
        for (const auto& r : records)
            if (r.feasible) f += r.count;
        return static_cast<double>(f) / static_cast<double>(shots);
    }
};

using FeasibleFn = std::function<bool(const Bits&)>;

namespace detail {

// Builds a SampleSet from raw shot outcomes: aggregate identical
// bitstrings, recompute every energy from the matrix, sort by energy.
inline SampleSet collect_samples(const Qubo& q, const std::vector<Bits>& shots,
                                 const std::string& solver, const FeasibleFn& feasible) {
    std::map<Bits, long long> counts;
    for (const auto& b : shots) ++counts[b];
    SampleSet out;
    out.solver = solver;
    out.shots = static_cast<long long>(shots.size());
    out.records.reserve(counts.size());
    for (const auto& [bits, count] : counts) {
        SampleRecord rec;
        rec.bits = bits;
        rec.count = count;
        rec.energy = q.energy(bits);
        rec.feasible = feasible ? feasible(bits) : true;
        out.records.push_back(std::move(rec));
    }
    std::sort(out.records.begin(), out.records.end(),
              [](const SampleRecord& a, const SampleRecord& b) {
                  if (a.energy != b.energy) return a.energy < b.energy;
                  return a.bits < b.bits;
              });
    return out;
}

} // namespace detail

// Frequency table: rows ordered by count descending, energy ascending.
inline std::vector<SampleRecord> histogram(const SampleSet& s) {
    std::vector<SampleRecord> rows = s.records;
    std::sort(rows.begin(), rows.end(), [](const SampleRecord& a, const SampleRecord& b) {
        if (a.count != b.count) return a.count > b.count;
        if (a.energy != b.energy) return a.energy < b.energy;
        return a.bits < b.bits;
    });
    return rows;
}

} // namespace qopt

#endif // QOPT_SAMPLE_SET_HPP
