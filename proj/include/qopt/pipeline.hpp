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

#ifndef QOPT_PIPELINE_HPP
#define QOPT_PIPELINE_HPP

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "qopt/anneal.hpp"
#include "qopt/brute_force.hpp"
#include "qopt/clique_embedding.hpp"
#include "qopt/embedding.hpp"
#include "qopt/encodings.hpp"
#include "qopt/metrics.hpp"
#include "qopt/qaoa.hpp"
#include "qopt/serialize.hpp"

namespace qopt {

enum class SolverKind { brute, sa, qaoa };

inline SolverKind solver_kind_from_string(const std::string& s) {
    if (s == "brute") return SolverKind::brute;
    if (s == "sa") return SolverKind::sa;
    if (s == "qaoa") return SolverKind::qaoa;
    throw std::invalid_argument("unknown solver '" + s + "'");
}

struct SolverSpec {
    SolverKind kind = SolverKind::sa;
    long long shots = 200;
    long long sweeps = 500;
    int depth = 1;
    long long budget = 200;
    std::uint64_t seed = 0;

    std::string tag() const {
        switch (kind) {
            case SolverKind::brute: return "brute";
            case SolverKind::sa: return "sa";
            case SolverKind::qaoa: return "qaoa";
        }
        return "?";
    }
};

enum class EmbedTarget { none, chimera, pegasus };

struct BenchTask {
    std::string id;
    InstanceDoc instance;
    TspFormulation formulation = TspFormulation::qap;
    SolverSpec solver;
    EmbedTarget embed = EmbedTarget::none;
    bool with_baseline = true;
};

// One attempt to solve one instance with one approach (paper Section 5
// semantics): outcome is "success" when the best sample decodes to a
// feasible solution, "infeasible" when samples exist but none decodes
// feasibly, "fail" on any error. Runtime accounting covers embedding +
// solving; problem reformulation (encoding) is timed separately and
// excluded from runtime_s.
struct RunRecord {
    std::string instance_id;
    std::string problem_class;
    std::string approach;
    enum class Outcome { success, infeasible, fail } outcome = Outcome::fail;
    std::string reason;
    std::optional<double> best_objective;
    std::optional<double> baseline_objective;
    long long n_vars = 0;
    long long n_physical = 0;
    double encode_s = 0.0;
    double embed_s = 0.0;
    double solve_s = 0.0;
    double feasible_share = 0.0;

    double runtime_s() const { return embed_s + solve_s; }
};

inline const char* to_string(RunRecord::Outcome o) {
    switch (o) {
        case RunRecord::Outcome::success: return "success";
        case RunRecord::Outcome::infeasible: return "infeasible";
        case RunRecord::Outcome::fail: return "fail";
    }
    return "?";
}

namespace detail {

inline EncodingRecord encode_task(const BenchTask& task) {
    const auto& doc = task.instance;
    if (doc.udmis) return encode_mis(doc.udmis->graph);
    if (doc.maxcut) return encode_maxcut(*doc.maxcut);
    if (doc.tsp) {
        switch (task.formulation) {
            case TspFormulation::qap: return encode_tsp_qap(*doc.tsp);
            case TspFormulation::mtz: return encode_tsp_mtz(*doc.tsp);
            case TspFormulation::dfj: return encode_tsp_dfj(*doc.tsp);
        }
    }
    throw std::invalid_argument("task '" + task.id + "' carries no instance payload");
}

inline SampleSet solve_task(const EncodingRecord& rec, const SolverSpec& spec) {
    const FeasibleFn feasible = [&rec](const Bits& x) { return decode(rec, x).feasible; };
    switch (spec.kind) {
        case SolverKind::brute: {
            const auto t0 = std::chrono::steady_clock::now();
            const auto res = brute_force(rec.qubo);
            SampleSet set;
            set.solver = "brute";
            set.shots = static_cast<long long>(res.argmins.size());
            for (const auto& x : res.argmins)
                set.records.push_back({x, res.value, 1, feasible(x)});
            set.wallclock_s =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return set;
        }
        case SolverKind::sa:
            return simulated_anneal(
                rec.qubo,
                {.shots = spec.shots, .sweeps = spec.sweeps, .seed = spec.seed}, feasible);
        case SolverKind::qaoa:
            return qaoa_simulate(rec.qubo,
                                 {.depth = spec.depth,
                                  .budget = spec.budget,
                                  .shots = spec.shots,
                                  .seed = spec.seed},
                                 feasible)
                .first;
    }
    throw std::logic_error("unreachable solver kind");
}

inline bool maximizes(SourceClass cls) {
    return cls == SourceClass::udmis || cls == SourceClass::maxcut;
}

// Best original objective across feasible samples.
inline std::optional<double> best_feasible_objective(const EncodingRecord& rec,
                                                     const SampleSet& set) {
    std::optional<double> best;
    for (const auto& r : set.records) {
        if (!r.feasible) continue;
        const auto dec = decode(rec, r.bits);
        if (!dec.feasible || !dec.original_objective) continue;
        const double v = *dec.original_objective;
        if (!best || (maximizes(rec.source) ? v > *best : v < *best)) best = v;
    }
    return best;
}

// Oracle baseline: exhaustive scan where tractable, otherwise a long
// simulated-annealing run (tagged by the caller as heuristic).
inline std::optional<double> baseline_objective(const EncodingRecord& rec,
                                                std::string* tag_out) {
    if (rec.qubo.size() <= 22) {
        if (tag_out) *tag_out = "brute";
        const auto res = brute_force(rec.qubo);
        for (const auto& x : res.argmins) {
            const auto dec = decode(rec, x);
            if (dec.feasible && dec.original_objective) return dec.original_objective;
        }
        return std::nullopt;
    }
    if (tag_out) *tag_out = "sa_baseline";
    const auto set = simulated_anneal(rec.qubo, {.shots = 400, .sweeps = 1000, .seed = 0xba5e});
    return best_feasible_objective(rec, set);
}

} // namespace detail

inline std::string problem_class_of(const InstanceDoc& doc) {
    if (doc.udmis) return "udmis";
    if (doc.maxcut) return "maxcut";
    return "tsp";
}

// Runs every task to completion: encode, optionally embed into a clique
// minor of the chosen topology, solve, decode, classify. Per-task
// failures are recorded with a reason; the batch never aborts.
inline std::vector<RunRecord> run_pipeline(const std::vector<BenchTask>& tasks) {
    std::vector<RunRecord> records;
    records.reserve(tasks.size());
    for (const auto& task : tasks) {
        RunRecord rr;
        rr.instance_id = task.id;
        rr.problem_class = problem_class_of(task.instance);
        rr.approach = task.solver.tag();
        if (task.instance.tsp) rr.approach += "+" + std::string(to_string(task.formulation));
        try {
            const auto t_enc = std::chrono::steady_clock::now();
            const auto rec = detail::encode_task(task);
            rr.encode_s =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t_enc).count();
            rr.n_vars = rec.qubo.size();

            if (task.embed != EmbedTarget::none) {
                const auto t_emb = std::chrono::steady_clock::now();
                const auto [topo, emb] =
                    task.embed == EmbedTarget::chimera
                        ? embed_clique_chimera(rec.qubo.size())
                        : embed_clique_pegasus(rec.qubo.size());
                rr.embed_s =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t_emb)
                        .count();
                rr.n_physical = emb.physical_qubits();
            }

            const auto set = detail::solve_task(rec, task.solver);
            rr.solve_s = set.wallclock_s;
            rr.feasible_share = set.feasible_share();
            rr.best_objective = detail::best_feasible_objective(rec, set);
            rr.outcome = rr.best_objective ? RunRecord::Outcome::success
                                           : RunRecord::Outcome::infeasible;
            if (task.with_baseline) {
                std::string tag;
                rr.baseline_objective = detail::baseline_objective(rec, &tag);
            }
        } catch (const std::exception& err) {
            rr.outcome = RunRecord::Outcome::fail;
            rr.reason = err.what();
        }
        records.push_back(std::move(rr));
    }
    return records;
}

inline std::vector<TimeSplitRow> embedding_time_report(const std::vector<RunRecord>& records) {
    std::vector<TimeSplitRow> rows;
    rows.reserve(records.size());
    for (const auto& r : records) rows.push_back({r.instance_id, r.embed_s, r.solve_s});
    return rows;
}

inline std::vector<BaselinedRun> baselined_runs(const std::vector<RunRecord>& records) {
    std::vector<BaselinedRun> out;
    for (const auto& r : records) {
        if (r.outcome != RunRecord::Outcome::success || !r.best_objective) continue;
        out.push_back({r.problem_class, r.approach, *r.best_objective, r.baseline_objective});
    }
    return out;
}

inline json run_record_to_json(const RunRecord& r) {
    json j{{"instance_id", r.instance_id},
           {"class", r.problem_class},
           {"approach", r.approach},
           {"outcome", to_string(r.outcome)},
           {"n_vars", r.n_vars},
           {"n_physical", r.n_physical},
           {"encode_s", r.encode_s},
           {"embed_s", r.embed_s},
           {"solve_s", r.solve_s},
           {"runtime_s", r.runtime_s()},
           {"feasible_share", r.feasible_share}};
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (r.best_objective) j["best_objective"] = *r.best_objective;
    if (r.baseline_objective) j["baseline_objective"] = *r.baseline_objective;
    return j;
}

inline std::string run_records_to_csv(const std::vector<RunRecord>& records) {
    std::ostringstream out;
    out << "instance,class,approach,outcome,best_objective,baseline_objective,n_vars,"
           "n_physical,encode_s,embed_s,solve_s,runtime_s,feasible_share,reason\n";
    out.precision(17);
    for (const auto& r : records) {
        out << r.instance_id << ',' << r.problem_class << ',' << r.approach << ','
            << to_string(r.outcome) << ',';
        if (r.best_objective) out << *r.best_objective;
        out << ',';
        if (r.baseline_objective) out << *r.baseline_objective;
        out << ',' << r.n_vars << ',' << r.n_physical << ',' << r.encode_s << ',' << r.embed_s
            << ',' << r.solve_s << ',' << r.runtime_s() << ',' << r.feasible_share << ',';
        std::string reason = r.reason;
        for (auto& c : reason)
            if (c == ',' || c == '\n') c = ';';
        out << reason << '\n';
    }
    return out.str();
}

} // namespace qopt

#endif // QOPT_PIPELINE_HPP
