#pragma once

#include <cstdint>

#include "usched/convolution.hpp"
#include "usched/instance.hpp"

namespace usched {

inline constexpr int kAntichainDpMaxJobs = 64;

struct AntichainDpResult {
    bool feasible = false;
    Schedule witness;         // T slots, possibly with idle ones, when feasible
    uint64_t states = 0;      // distinct antichains evaluated
};

// DP_t[B] = max over X subset of B, |X| <= m, of DP_{t-1}[sinks(pred[B] \ X)], with
// B ranging over antichains reachable from sinks(V). Throws CapacityError above 64 jobs.
AntichainDpResult solve_antichain_dp(const Instance& inst, int deadline);

SolveResult min_makespan_antichain_dp(const Instance& inst);

}  // namespace usched
