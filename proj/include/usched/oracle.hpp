#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "usched/instance.hpp"

namespace usched {

// Brute-force ground truth. Shares nothing with the solvers beyond the instance and
// schedule types.

inline constexpr int kOracleMaxJobs = 20;
inline constexpr int kEnumerateMaxJobs = 9;

struct OracleResult {
    int makespan = 0;
    Schedule witness;
};

// Breadth-first search over completed job sets. Throws CapacityError above 20 jobs.
OracleResult oracle_min_makespan(const Instance& inst);

// Decides whether all jobs fit in `deadline` slots, searching over how many jobs of
// each class of interchangeable jobs (same predecessors and successors) are done.
// Throws CapacityError when more than `max_states` states would be stored.
std::optional<Schedule> oracle_feasible(const Instance& inst, int deadline, std::size_t max_states = 20'000'000);

// Calls visitor on every optimal schedule until it returns false; returns the number
// visited. Throws CapacityError above 9 jobs.
uint64_t for_each_optimal_schedule(const Instance& inst, const std::function<bool(const Schedule&)>& visitor);

// All optimal schedules, up to `limit` of them.
std::vector<Schedule> enumerate_optimal_schedules(const Instance& inst, std::size_t limit);

// Both clauses of the sink-adjusted definition, relative to the assigned jobs:
// after a sink moment only its successors or sinks follow, and sinks-only slots
// come after every non-sink. Throws std::invalid_argument on an infeasible schedule.
bool is_sink_adjusted(const Instance& inst, const Schedule& sched);

// Slots before `middle` (1-based) are sink-adjusted, and the slots after it are
// sink-adjusted when reversed against the dual order.
bool is_middle_adjusted(const Instance& inst, const Schedule& sched, int middle);

}  // namespace usched
