#include "usched/bench.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "usched/errors.hpp"
#include "usched/antichain_dp.hpp"
#include "usched/io.hpp"
#include "usched/oracle.hpp"
#include "usched/poset.hpp"

namespace usched {

namespace {

constexpr uint64_t kExactCountLimit = 5'000'000;

std::string antichain_column(const Instance& inst) {
    BigInt bound = antichain_bound(inst);
    if (bound <= kExactCountLimit) return std::to_string(count_antichains(inst));
    return "<=" + bound.str();
}

std::optional<StrategyKind> strategy_from_json(const nlohmann::json& j) {
    std::string name = j.get<std::string>();
    if (name == "auto") return std::nullopt;
    auto s = parse_strategy(name);
    if (!s) throw std::invalid_argument("unknown strategy '" + name + "'");
    return s;
}

}  // namespace

SuiteConfig parse_suite_config(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    SuiteConfig c;
    c.kind = j.value("kind", c.kind);
    c.count = j.value("count", c.count);
    c.n_min = j.value("n_min", c.n_min);
    c.n_max = j.value("n_max", c.n_max);
    c.density_min = j.value("density_min", c.density_min);
    c.density_max = j.value("density_max", c.density_max);
    c.seed = j.value("seed", c.seed);
    c.files = j.value("files", c.files);
    if (j.contains("strategy")) c.strategy = strategy_from_json(j["strategy"]);
    c.oracle = j.value("oracle", c.oracle);
    c.all_strategies = j.value("all_strategies", c.all_strategies);
    if (c.kind != "empty" && c.kind != "random" && c.kind != "scaling" && c.kind != "files")
        throw std::invalid_argument("unknown suite kind '" + c.kind + "'");
    if (c.n_min < 0 || c.n_max < c.n_min) throw std::invalid_argument("suite needs 0 <= n_min <= n_max");
    return c;
}

std::string suite_config_json(const SuiteConfig& c) {
    nlohmann::json j = {{"kind", c.kind},           {"count", c.count},
                        {"n_min", c.n_min},         {"n_max", c.n_max},
                        {"density_min", c.density_min}, {"density_max", c.density_max},
                        {"seed", c.seed},           {"files", c.files},
                        {"strategy", c.strategy ? std::string(to_string(*c.strategy)) : "auto"},
                        {"oracle", c.oracle},       {"all_strategies", c.all_strategies}};
    return j.dump();
}

std::vector<BenchCase> generate_suite(const SuiteConfig& c) {
    std::vector<BenchCase> out;
    if (c.kind == "empty") return out;
    if (c.kind == "files") {
        for (const auto& f : c.files) out.push_back({f, parse_instance_file(f), c.strategy});
        return out;
    }
    std::mt19937_64 rng(c.seed);
    if (c.kind == "scaling") {
        // mostly independent jobs, two slots: the tables dominate
        for (int n = c.n_min; n <= c.n_max; ++n) {
            Instance inst = gen_random(n, (n + 1) / 2, 0.05, 2, rng());
            out.push_back({"scaling-n" + std::to_string(n), inst, c.strategy.value_or(StrategyKind::subset_2n)});
        }
        return out;
    }
    std::uniform_int_distribution<int> pick_n(c.n_min, c.n_max);
    std::uniform_real_distribution<double> pick_density(c.density_min, c.density_max);
    for (int i = 0; i < c.count; ++i) {
        const int n = pick_n(rng);
        const int choices[] = {1, 2, 3, (n + 1) / 2, n};
        const int m = std::max(1, choices[std::uniform_int_distribution<int>(0, 4)(rng)]);
        const double density = pick_density(rng);
        const int layers = std::uniform_int_distribution<int>(1, std::max(1, n))(rng);
        const uint64_t seed = rng();
        out.push_back({"random-" + std::to_string(i), gen_random(n, m, density, layers, seed), c.strategy});
    }
    return out;
}

BenchRow run_case(const BenchCase& c, const SuiteConfig& config) {
    const Instance& inst = c.inst;
    BenchRow row;
    row.id = c.id;
    row.n = inst.job_count();
    row.m = inst.machine_count();
    row.antichains = antichain_column(inst);

    auto start = std::chrono::steady_clock::now();
    DispatchResult r = solve(inst, c.strategy);
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    row.cover = r.cover_size;
    row.strategy = std::string(to_string(r.strategy.chosen));
    row.makespan = r.makespan;
    row.peak_table_bytes = r.table_bytes;

    bool checked = false;
    bool agree = true;
    std::ostringstream note;
    if (config.all_strategies) {
        checked = true;
        for (StrategyKind s : {StrategyKind::vc, StrategyKind::antichain_dp, StrategyKind::splitter,
                               StrategyKind::subset_2n}) {
            if ((s == StrategyKind::splitter || s == StrategyKind::subset_2n) && row.n > kMaxSubsetBits) continue;
            if (s == StrategyKind::antichain_dp && row.n > kAntichainDpMaxJobs) continue;
            DispatchResult other = solve(inst, s);
            if (other.makespan != r.makespan) {
                agree = false;
                note << to_string(s) << "=" << other.makespan << " ";
            }
        }
    }
    if (config.oracle && row.n <= kOracleMaxJobs) {
        checked = true;
        const int expected = oracle_min_makespan(inst).makespan;
        if (expected != r.makespan) {
            agree = false;
            note << "oracle=" << expected << " ";
        }
    }
    if (checked) row.oracle_agrees = agree ? "true" : "false";
    row.note = note.str();
    return row;
}

std::vector<BenchRow> run_bench(const SuiteConfig& config) {
    std::vector<BenchRow> rows;
    for (const BenchCase& c : generate_suite(config)) rows.push_back(run_case(c, config));
    return rows;
}

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
    out << kBenchCsvHeader << '\n';
    char ms[32];
    for (const BenchRow& r : rows) {
        std::snprintf(ms, sizeof ms, "%.3f", r.wall_ms);
        out << r.id << ',' << r.n << ',' << r.m << ',' << r.cover << ',' << r.antichains << ',' << r.strategy << ','
            << r.makespan << ',' << ms << ',' << r.peak_table_bytes << ',' << r.oracle_agrees << '\n';
    }
}

}  // namespace usched
