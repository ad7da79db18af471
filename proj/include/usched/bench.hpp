#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "usched/dispatcher.hpp"
#include "usched/generators.hpp"
#include "usched/instance.hpp"

namespace usched {

// Which instances a bench run uses. Read from JSON, e.g.
//   {"kind": "random", "count": 50, "n_min": 4, "n_max": 11, "seed": 7, "oracle": true}
// Kinds: "empty", "random" (machines drawn from {1, 2, 3, ceil(n/2), n}),
// "scaling" (one sparse instance per n, solved with the 2^n tables), and "files".
struct SuiteConfig {
    std::string kind = "random";
    int count = 20;
    int n_min = 4;
    int n_max = 11;
    double density_min = 0.1;
    double density_max = 0.6;
    uint64_t seed = kDefaultSeed;
    std::vector<std::string> files;
    std::optional<StrategyKind> strategy;  // forced for every case
    bool oracle = false;                   // compare against the brute-force oracle
    bool all_strategies = false;           // run every strategy and compare them
};

SuiteConfig parse_suite_config(const std::string& json_text);
std::string suite_config_json(const SuiteConfig& config);

struct BenchCase {
    std::string id;
    Instance inst;
    std::optional<StrategyKind> strategy;
};

// Deterministic under the config's seed.
std::vector<BenchCase> generate_suite(const SuiteConfig& config);

struct BenchRow {
    std::string id;
    int n = 0;
    int m = 0;
    int cover = 0;
    std::string antichains;  // exact count, or "<=bound" when counting is too slow
    std::string strategy;
    int makespan = 0;
    double wall_ms = 0.0;
    std::size_t peak_table_bytes = 0;
    std::string oracle_agrees = "na";  // "true", "false" or "na"
    std::string note;                  // first disagreement or error, if any
};

BenchRow run_case(const BenchCase& c, const SuiteConfig& config);
std::vector<BenchRow> run_bench(const SuiteConfig& config);

inline constexpr const char* kBenchCsvHeader =
    "instance_id,n,m,cover,antichains,strategy,makespan,wall_ms,peak_table_bytes,oracle_agrees";

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace usched
