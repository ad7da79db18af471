// Command-line front end: solving, checking, generating and benchmarking.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "usched/bench.hpp"
#include "usched/dispatcher.hpp"
#include "usched/errors.hpp"
#include "usched/generators.hpp"
#include "usched/io.hpp"
#include "usched/oracle.hpp"
#include "usched/poset.hpp"

using namespace usched;
using nlohmann::json;

namespace {

json witness_json(const Schedule& s) {
    json slots = json::array();
    for (const auto& slot : s.slots) {
        json jobs = json::array();
        for (int j : slot) jobs.push_back(j + 1);
        slots.push_back(jobs);
    }
    return slots;
}

std::optional<StrategyKind> strategy_option(const std::string& name) {
    if (name == "auto") return std::nullopt;
    return parse_strategy(name);
}

void write_instance(const Instance& inst, const std::string& path) {
    if (path.empty() || path == "-")
        emit_instance(inst, std::cout);
    else
        emit_instance_file(inst, path);
}

int cmd_solve(const std::string& path, const std::string& strategy, std::optional<int> deadline,
              const std::string& format, bool witness) {
    Instance inst = parse_instance_file(path);
    if (!deadline) deadline = inst.deadline();
    DispatchResult r = solve(inst, strategy_option(strategy));
    if (format == "json-report") {
        json j = {{"instance", path},
                  {"n", inst.job_count()},
                  {"m", inst.machine_count()},
                  {"cover", r.cover_size},
                  {"strategy", std::string(to_string(r.strategy.chosen))},
                  {"rationale", r.strategy.rationale},
                  {"bound", r.strategy.bound},
                  {"makespan", r.makespan},
                  {"peak_table_bytes", r.table_bytes}};
        if (deadline) {
            j["deadline"] = *deadline;
            j["feasible"] = r.makespan <= *deadline;
        }
        if (witness) j["witness"] = witness_json(r.witness);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "makespan " << r.makespan << '\n'
                  << "strategy " << to_string(r.strategy.chosen) << " (" << r.strategy.rationale << ")\n";
        if (deadline) std::cout << "deadline " << *deadline << (r.makespan <= *deadline ? " feasible" : " infeasible") << '\n';
        if (witness) write_schedule(r.witness, std::cout);
    }
    return 0;
}

int cmd_validate(const std::string& inst_path, const std::string& sched_path, bool tight) {
    Instance inst = parse_instance_file(inst_path);
    std::ifstream in(sched_path);
    if (!in) throw std::runtime_error("cannot open " + sched_path);
    Schedule s = parse_schedule(in);
    Validation v = tight ? validate(inst, s, true) : validate_complete(inst, s);
    if (v) {
        std::cout << "valid, makespan " << s.makespan() << '\n';
        if (inst.deadline() && s.makespan() > *inst.deadline()) {
            std::cout << "exceeds deadline " << *inst.deadline() << '\n';
            return 1;
        }
        return 0;
    }
    std::cout << "invalid: " << v.message << '\n';
    return 1;
}

int cmd_count(const std::string& path, const std::string& format) {
    Instance inst = parse_instance_file(path);
    const uint64_t count = count_antichains(inst);
    const BigInt bound = antichain_bound(inst);
    if (format == "json-report")
        std::cout << json{{"antichains", count}, {"bound", bound.str()}}.dump(2) << '\n';
    else
        std::cout << "antichains " << count << "\nbound " << bound << '\n';
    return 0;
}

int cmd_cover(const std::string& path, const std::string& format) {
    Instance inst = parse_instance_file(path);
    VertexCoverCertificate c = min_vertex_cover(inst);
    auto one_based = [](const JobSet& s) {
        std::vector<int> out = s.to_vector();
        for (int& v : out) ++v;
        return out;
    };
    std::vector<std::vector<int>> chains;
    for (const auto& ch : c.chains.chains) {
        chains.emplace_back();
        for (int v : ch) chains.back().push_back(v + 1);
    }
    if (format == "json-report") {
        std::cout << json{{"cover_size", c.cover.count()},
                          {"cover", one_based(c.cover)},
                          {"antichain", one_based(c.witness_antichain)},
                          {"chains", chains}}
                         .dump(2)
                  << '\n';
        return 0;
    }
    std::cout << "cover_size " << c.cover.count() << "\ncover";
    for (int v : one_based(c.cover)) std::cout << ' ' << v;
    std::cout << "\nantichain";
    for (int v : one_based(c.witness_antichain)) std::cout << ' ' << v;
    std::cout << '\n';
    for (const auto& ch : chains) {
        std::cout << "chain";
        for (int v : ch) std::cout << ' ' << v;
        std::cout << '\n';
    }
    return 0;
}

int cmd_oracle(const std::string& path, std::optional<int> deadline, bool witness) {
    Instance inst = parse_instance_file(path);
    if (!deadline) deadline = inst.deadline();
    if (deadline) {
        auto s = oracle_feasible(inst, *deadline);
        std::cout << (s ? "feasible" : "infeasible") << " within " << *deadline << '\n';
        if (s && witness) write_schedule(*s, std::cout);
        return 0;
    }
    OracleResult r = oracle_min_makespan(inst);
    std::cout << "makespan " << r.makespan << '\n';
    if (witness) write_schedule(r.witness, std::cout);
    return 0;
}

SuiteConfig load_config(const std::string& config_path) {
    if (config_path.empty()) return SuiteConfig{};
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open " + config_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_suite_config(ss.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unit-job scheduling with precedence constraints on identical machines"};
    app.require_subcommand(1);

    std::string path, sched_path, strategy = "auto", format = "text", output, config_path, kind;
    std::optional<int> deadline;
    uint64_t seed = kDefaultSeed;
    bool witness = false, tight = false;
    int n = 10, m = 2, layers = 3, count = -1;
    double density = 0.3;
    DksInstance dks;
    std::string dks_path;

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", format, "text or json-report")->check(CLI::IsMember({"text", "json-report"}));
    };

    auto* solve_cmd = app.add_subcommand("solve", "optimal makespan of an instance");
    solve_cmd->add_option("instance", path)->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("--strategy", strategy)->check(CLI::IsMember({"auto", "vc", "acdp", "split", "2n"}));
    solve_cmd->add_option("--deadline", deadline, "report feasibility against this deadline");
    solve_cmd->add_flag("--witness", witness, "print the schedule");
    add_format(solve_cmd);

    auto* validate_cmd = app.add_subcommand("validate", "check a schedule against an instance");
    validate_cmd->add_option("instance", path)->required()->check(CLI::ExistingFile);
    validate_cmd->add_option("schedule", sched_path)->required()->check(CLI::ExistingFile);
    validate_cmd->add_flag("--tight", tight, "require exactly m jobs in every slot");

    auto* count_cmd = app.add_subcommand("count-antichains", "number of antichains and the chain bound");
    count_cmd->add_option("instance", path)->required()->check(CLI::ExistingFile);
    add_format(count_cmd);

    auto* cover_cmd = app.add_subcommand("vertex-cover", "minimum vertex cover of the comparability graph");
    cover_cmd->add_option("instance", path)->required()->check(CLI::ExistingFile);
    add_format(cover_cmd);

    auto* gen_cmd = app.add_subcommand("gen", "random layered instance");
    gen_cmd->add_option("--n", n)->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--m", m)->check(CLI::PositiveNumber);
    gen_cmd->add_option("--density", density)->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--layers", layers)->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_option("-o,--output", output);

    auto* dks_cmd = app.add_subcommand("gen-dks", "scheduling instance from a densest-subgraph question");
    dks_cmd->add_option("--input", dks_path, "graph in 'p dks' format; otherwise random")->check(CLI::ExistingFile);
    dks_cmd->add_option("--vertices", dks.vertices);
    dks_cmd->add_option("--delta", dks.delta);
    dks_cmd->add_option("--kappa", dks.kappa);
    dks_cmd->add_option("--ell", dks.ell);
    dks_cmd->add_option("--seed", seed);
    dks_cmd->add_option("-o,--output", output);

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force makespan (small instances)");
    oracle_cmd->add_option("instance", path)->required()->check(CLI::ExistingFile);
    oracle_cmd->add_option("--deadline", deadline);
    oracle_cmd->add_flag("--witness", witness);

    auto* bench_cmd = app.add_subcommand("bench", "CSV report over a suite");
    auto* xcheck_cmd = app.add_subcommand("xcheck", "all solvers against the oracle; nonzero exit on disagreement");
    for (auto* c : {bench_cmd, xcheck_cmd}) {
        c->add_option("--config", config_path, "suite config (JSON)")->check(CLI::ExistingFile);
        c->add_option("--suite", kind, "empty, random, scaling or files");
        c->add_option("--count", count);
        c->add_option("--seed", seed);
        c->add_option("--strategy", strategy)->check(CLI::IsMember({"auto", "vc", "acdp", "split", "2n"}));
        c->add_option("-o,--output", output);
    }
    std::vector<std::string> files;
    xcheck_cmd->add_option("files", files, "instance files; a random suite when none are given");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve_cmd) return cmd_solve(path, strategy, deadline, format, witness);
        if (*validate_cmd) return cmd_validate(path, sched_path, tight);
        if (*count_cmd) return cmd_count(path, format);
        if (*cover_cmd) return cmd_cover(path, format);
        if (*oracle_cmd) return cmd_oracle(path, deadline, witness);
        if (*gen_cmd) {
            write_instance(gen_random(n, m, density, layers, seed), output);
            return 0;
        }
        if (*dks_cmd) {
            if (!dks_path.empty()) {
                std::ifstream in(dks_path);
                dks = parse_dks(in);
            } else if (dks.edges.empty()) {
                if (dks.vertices == 0) dks = {6, {}, 3, 3, 2};
                dks = gen_random_dks(dks.vertices, dks.delta, dks.kappa, dks.ell, seed);
            }
            write_instance(reduce_dks(dks), output);
            return 0;
        }
        if (*bench_cmd || *xcheck_cmd) {
            SuiteConfig config = load_config(config_path);
            if (!kind.empty()) config.kind = kind;
            if (count >= 0) config.count = count;
            if (seed != kDefaultSeed) config.seed = seed;
            if (strategy != "auto") config.strategy = parse_strategy(strategy);
            if (*xcheck_cmd) {
                config.oracle = true;
                config.all_strategies = true;
                if (!files.empty()) {
                    config.kind = "files";
                    config.files = files;
                }
            }
            std::vector<BenchRow> rows = run_bench(config);
            std::ofstream file;
            std::ostream& out = output.empty() || output == "-" ? std::cout : (file.open(output), file);
            write_csv(rows, out);
            int bad = 0;
            for (const BenchRow& r : rows)
                if (r.oracle_agrees == "false") {
                    ++bad;
                    std::cerr << "disagreement on " << r.id << ": " << r.strategy << "=" << r.makespan << ' '
                              << r.note << '\n';
                }
            if (*xcheck_cmd) {
                std::cerr << rows.size() << " instances, " << bad << " disagreements\n";
                return bad == 0 ? 0 : 1;
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
