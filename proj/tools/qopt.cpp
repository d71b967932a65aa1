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
//
// qopt: end-to-end pipeline runner for the desk-scale quantum-optimization
// toolkit. Subcommands: gen, encode, estimate, embed, solve, bench, report.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qopt/pipeline.hpp"
#include "qopt/qaoa.hpp"
#include "qopt/qubit_cost.hpp"
#include "qopt/tsplib.hpp"

namespace fs = std::filesystem;
using namespace qopt;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
}

void emit(const std::string& out, const std::string& content) {
    if (out.empty() || out == "-")
        std::cout << content;
    else
        write_file(out, content);
}

TspFormulation formulation_from_string(const std::string& s) {
    if (s == "qap") return TspFormulation::qap;
    if (s == "mtz") return TspFormulation::mtz;
    if (s == "dfj") return TspFormulation::dfj;
    throw CLI::ValidationError("--formulation", "expected qap|mtz|dfj, got '" + s + "'");
}

Backend backend_from_string(const std::string& s) {
    if (s == "neutral_atom") return Backend::neutral_atom;
    if (s == "annealer" || s == "annealer_pegasus") return Backend::annealer_pegasus;
    if (s == "gate_based") return Backend::gate_based;
    throw CLI::ValidationError("--backend", "expected neutral_atom|annealer|gate_based");
}

EncodingRecord encode_instance(const InstanceDoc& doc, TspFormulation f,
                               std::optional<double> m, std::optional<double> m2) {
    if (doc.udmis) return encode_mis(doc.udmis->graph, m);
    if (doc.maxcut) return encode_maxcut(*doc.maxcut);
    if (doc.tsp) {
        switch (f) {
            case TspFormulation::qap: return encode_tsp_qap(*doc.tsp, m);
            case TspFormulation::mtz: return encode_tsp_mtz(*doc.tsp, m, m2);
            case TspFormulation::dfj: return encode_tsp_dfj(*doc.tsp, m);
        }
    }
    throw std::runtime_error("instance carries no payload");
}

InstanceDoc gen_instance(const std::string& klass, int n, double radius, double p,
                         const std::string& base_path, int k, std::uint64_t seed) {
    InstanceDoc doc;
    doc.klass = klass;
    doc.seed = seed;
    if (klass == "udmis") {
        doc.params = {{"n", n}, {"radius", radius}};
        doc.udmis = gen_udmis(n, radius, seed);
    } else if (klass == "maxcut") {
        doc.params = {{"n", n}, {"p", p}};
        doc.maxcut = gen_maxcut(n, p, seed);
    } else if (klass == "tsp") {
        if (base_path.empty())
            throw std::runtime_error("tsp generation needs --base <tsplib file>");
        const auto base = parse_tsplib(read_file(base_path));
        doc.params = {{"base", fs::path(base_path).filename().string()}, {"k", k}};
        doc.tsp = subsample_tsp(base, k, seed);
    } else {
        throw std::runtime_error("unknown class '" + klass + "' (udmis|maxcut|tsp)");
    }
    return doc;
}

BenchTask task_from_json(const json& jt, int index) {
    BenchTask task;
    task.id = jt.value("id", "task" + std::to_string(index));
    if (jt.contains("instance_file")) {
        task.instance = instance_from_json(json::parse(read_file(jt.at("instance_file"))));
    } else if (jt.contains("gen")) {
        const auto& g = jt.at("gen");
        task.instance = gen_instance(g.at("class"), g.value("n", 10), g.value("radius", 1.42),
                                     g.value("p", 0.5), g.value("base", std::string()),
                                     g.value("k", 5), g.value("seed", 0ULL));
    } else {
        throw std::runtime_error("task '" + task.id + "': need instance_file or gen");
    }
    if (jt.contains("formulation"))
        task.formulation = formulation_from_string(jt.at("formulation"));
    if (jt.contains("solver")) {
        const auto& s = jt.at("solver");
        task.solver.kind = solver_kind_from_string(s.value("kind", "sa"));
        task.solver.shots = s.value("shots", 200LL);
        task.solver.sweeps = s.value("sweeps", 500LL);
        task.solver.depth = s.value("depth", 1);
        task.solver.budget = s.value("budget", 200LL);
        task.solver.seed = s.value("seed", 0ULL);
    }
    const std::string embed = jt.value("embed", "none");
    if (embed == "chimera")
        task.embed = EmbedTarget::chimera;
    else if (embed == "pegasus")
        task.embed = EmbedTarget::pegasus;
    else if (embed != "none")
        throw std::runtime_error("task '" + task.id + "': embed must be none|chimera|pegasus");
    task.with_baseline = jt.value("baseline", true);
    return task;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale QUBO encoding, embedding and solving toolkit"};
    app.require_subcommand(1);

    std::string out;
    std::string format = "json";
    std::uint64_t seed = 0;

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a problem instance");
    std::string gen_class;
    int gen_n = 10;
    double gen_radius = 1.42;
    double gen_p = 0.5;
    std::string gen_base;
    int gen_k = 5;
    gen->add_option("--class", gen_class, "udmis|maxcut|tsp")->required();
    gen->add_option("--n", gen_n, "node count (udmis/maxcut)");
    gen->add_option("--radius", gen_radius, "unit disk radius (udmis)");
    gen->add_option("--p", gen_p, "edge probability (maxcut)");
    gen->add_option("--base", gen_base, "TSPLIB file to subsample (tsp)");
    gen->add_option("--k", gen_k, "subsample size (tsp)");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--out", out, "output file ('-' for stdout)");

    // ---- encode ----
    auto* enc = app.add_subcommand("encode", "encode an instance file as a QUBO");
    std::string enc_in, enc_formulation = "qap";
    double enc_m = 0.0, enc_m2 = 0.0;
    bool enc_m_set = false, enc_m2_set = false;
    enc->add_option("--in", enc_in, "instance JSON file")->required();
    enc->add_option("--formulation", enc_formulation, "tsp formulation: qap|mtz|dfj");
    enc->add_option("--m", enc_m, "penalty override")->each([&](const std::string&) { enc_m_set = true; });
    enc->add_option("--m2", enc_m2, "MTZ ordering penalty override")
        ->each([&](const std::string&) { enc_m2_set = true; });
    enc->add_option("--out", out, "output file ('-' for stdout)");

    // ---- estimate ----
    auto* est = app.add_subcommand("estimate", "physical-qubit cost for a backend");
    std::string est_class = "maxcut", est_backend = "annealer";
    long long est_n = 10;
    est->add_option("--class", est_class, "udmis|maxcut|tsp_qap|tsp_mtz|tsp_dfj");
    est->add_option("--backend", est_backend, "neutral_atom|annealer|gate_based");
    est->add_option("--n", est_n, "logical variable count")->required();
    est->add_option("--format", format, "csv|json");
    est->add_option("--out", out, "output file ('-' for stdout)");

    // ---- embed ----
    auto* emb = app.add_subcommand("embed", "clique embedding into a hardware topology");
    int emb_k = 0;
    std::string emb_qubo, emb_topology = "chimera", emb_report;
    emb->add_option("--k", emb_k, "clique size");
    emb->add_option("--qubo", emb_qubo, "QUBO JSON file (uses its variable count)");
    emb->add_option("--topology", emb_topology, "chimera|pegasus");
    emb->add_option("--out", out, "embedding JSON output");
    emb->add_option("--report", emb_report, "validation report JSON output");

    // ---- solve ----
    auto* sol = app.add_subcommand("solve", "run a solver on an encoded QUBO");
    std::string sol_in, sol_solver = "sa";
    long long sol_shots = 200, sol_sweeps = 500, sol_budget = 200;
    int sol_depth = 1;
    sol->add_option("--in", sol_in, "QUBO JSON file")->required();
    sol->add_option("--solver", sol_solver, "brute|sa|qaoa");
    sol->add_option("--shots", sol_shots, "samples per run");
    sol->add_option("--sweeps", sol_sweeps, "Metropolis sweeps per shot");
    sol->add_option("--depth", sol_depth, "QAOA layers");
    sol->add_option("--budget", sol_budget, "QAOA optimizer evaluations");
    sol->add_option("--seed", seed, "solver seed");
    sol->add_option("--out", out, "output directory");

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "run a batch of encode/solve tasks");
    std::string bench_config;
    bench->add_option("--config", bench_config, "bench config JSON")->required();
    bench->add_option("--out", out, "run directory")->required();

    // ---- report ----
    auto* rep = app.add_subcommand("report", "metrics tables from a run directory");
    std::string rep_runs;
    rep->add_option("--runs", rep_runs, "records.json from bench")->required();
    rep->add_option("--out", out, "report directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            const auto doc = gen_instance(gen_class, gen_n, gen_radius, gen_p, gen_base, gen_k, seed);
            emit(out, instance_to_json(doc).dump(2) + "\n");
        } else if (*enc) {
            const auto doc = instance_from_json(json::parse(read_file(enc_in)));
            const auto rec = encode_instance(
                doc, formulation_from_string(enc_formulation),
                enc_m_set ? std::optional<double>(enc_m) : std::nullopt,
                enc_m2_set ? std::optional<double>(enc_m2) : std::nullopt);
            if (!rec.warning.empty()) std::cerr << "warning: " << rec.warning << "\n";
            emit(out, record_to_json(rec).dump(2) + "\n");
        } else if (*est) {
            const auto cls = source_class_from_string(est_class == "tsp" ? "tsp_qap" : est_class);
            const auto backend = backend_from_string(est_backend);
            const long long cost = qubit_cost(cls, backend, est_n);
            if (format == "csv")
                emit(out, "class,backend,n,physical_qubits\n" + est_class + "," + est_backend +
                              "," + std::to_string(est_n) + "," + std::to_string(cost) + "\n");
            else
                emit(out, json{{"class", est_class},
                               {"backend", est_backend},
                               {"n", est_n},
                               {"physical_qubits", cost}}
                              .dump(2) +
                         "\n");
        } else if (*emb) {
            int k = emb_k;
            if (!emb_qubo.empty())
                k = json::parse(read_file(emb_qubo)).at("n").get<int>();
            if (k < 1) throw std::runtime_error("need --k or --qubo");
            auto [topo, embedding] = emb_topology == "pegasus" ? embed_clique_pegasus(k)
                                                               : embed_clique_chimera(k);
            Graph complete(k);
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) complete.add_edge(i, j);
            const auto report = validate_embedding(complete, topo, embedding);
            emit(out, embedding_to_json(topo, embedding).dump(2) + "\n");
            if (!emb_report.empty())
                write_file(emb_report, validation_report_to_json(report).dump(2) + "\n");
            std::cerr << "k=" << k << " topology=" << emb_topology << " param=" << topo.param()
                      << " physical_qubits=" << report.physical_qubits
                      << " valid=" << (report.valid ? "yes" : "no") << "\n";
        } else if (*sol) {
            const auto rec = record_from_json(json::parse(read_file(sol_in)));
            const FeasibleFn feasible = [&rec](const Bits& x) { return decode(rec, x).feasible; };
            SampleSet set;
            if (sol_solver == "brute") {
                const auto res = brute_force(rec.qubo);
                set.solver = "brute";
                set.shots = static_cast<long long>(res.argmins.size());
                for (const auto& x : res.argmins)
                    set.records.push_back({x, res.value, 1, feasible(x)});
            } else if (sol_solver == "sa") {
                set = simulated_anneal(rec.qubo,
                                       {.shots = sol_shots, .sweeps = sol_sweeps, .seed = seed},
                                       feasible);
            } else if (sol_solver == "qaoa") {
                set = qaoa_simulate(rec.qubo,
                                    {.depth = sol_depth,
                                     .budget = sol_budget,
                                     .shots = sol_shots,
                                     .seed = seed},
                                    feasible)
                          .first;
            } else {
                throw std::runtime_error("unknown solver '" + sol_solver + "'");
            }
            const fs::path dir = out.empty() ? fs::path(".") : fs::path(out);
            write_file(dir / "sampleset.json", sample_set_to_json(set).dump(2) + "\n");
            write_file(dir / "histogram.csv", histogram_to_csv(set));
            const auto best = decode(rec, set.best().bits);
            std::cerr << "best energy " << set.best().energy
                      << (best.feasible ? " (feasible" : " (infeasible");
            if (best.original_objective) std::cerr << ", objective " << *best.original_objective;
            std::cerr << ")\n";
        } else if (*bench) {
            const auto cfg = json::parse(read_file(bench_config));
            std::vector<BenchTask> tasks;
            int index = 0;
            for (const auto& jt : cfg.at("tasks")) tasks.push_back(task_from_json(jt, index++));
            const auto records = run_pipeline(tasks);
            json jrecords = json::array();
            for (const auto& r : records) jrecords.push_back(run_record_to_json(r));
            const fs::path dir(out);
            write_file(dir / "records.json", jrecords.dump(2) + "\n");
            write_file(dir / "records.csv", run_records_to_csv(records));
            write_file(dir / "manifest.json",
                       json{{"config", cfg}, {"tasks", records.size()}}.dump(2) + "\n");
            int ok = 0;
            for (const auto& r : records)
                if (r.outcome == RunRecord::Outcome::success) ++ok;
            std::cerr << records.size() << " runs, " << ok << " success\n";
        } else if (*rep) {
            const auto jrecords = json::parse(read_file(rep_runs));
            std::vector<RunRecord> records;
            std::vector<BaselinedRun> runs;
            std::vector<TimeSplitRow> split;
            std::vector<std::pair<double, double>> embed_pairs;
            for (const auto& j : jrecords) {
                RunRecord r;
                r.instance_id = j.at("instance_id");
                r.problem_class = j.at("class");
                r.approach = j.at("approach");
                r.embed_s = j.value("embed_s", 0.0);
                r.solve_s = j.value("solve_s", 0.0);
                split.push_back({r.instance_id, r.embed_s, r.solve_s});
                if (j.value("outcome", "") == "success" && j.contains("best_objective")) {
                    BaselinedRun b;
                    b.problem_class = r.problem_class;
                    b.approach = r.approach;
                    b.f_q = j.at("best_objective").get<double>();
                    if (j.contains("baseline_objective"))
                        b.f_c = j.at("baseline_objective").get<double>();
                    runs.push_back(b);
                }
                if (j.value("n_physical", 0LL) > 0)
                    embed_pairs.push_back({static_cast<double>(j.at("n_vars").get<long long>()),
                                           static_cast<double>(j.at("n_physical").get<long long>())});
            }
            const fs::path dir(out);
            write_file(dir / "buckets.csv", buckets_to_csv(bucket_summary(runs)));
            write_file(dir / "time_split.csv", time_split_to_csv(split));
            if (embed_pairs.size() >= 3) {
                bool distinct = false;
                for (const auto& p : embed_pairs)
                    if (p.first != embed_pairs.front().first) distinct = true;
                if (distinct) {
                    const auto fit = fit_embedding_regression(embed_pairs);
                    write_file(dir / "embedding_regression.json",
                               json{{"beta0", fit.beta0},
                                    {"beta", fit.beta},
                                    {"r_squared", fit.r_squared},
                                    {"n_points", fit.n_points}}
                                       .dump(2) +
                                   "\n");
                }
            }
            std::cerr << "report written to " << dir << "\n";
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
