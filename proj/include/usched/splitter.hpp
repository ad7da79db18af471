#pragma once

#include <cstdint>
#include <vector>

#include "usched/convolution.hpp"
#include "usched/instance.hpp"

namespace usched {

enum class ReductionKind { isolated, sources, sinks };

// One application of a reduction rule. `jobs` and `deadline` refer to the instance
// before the step; `old_of` maps the remaining jobs back to it.
struct ReductionStep {
    ReductionKind kind;
    std::vector<int> jobs;
    std::vector<int> old_of;
    int deadline = 0;
};

struct ReducedInstance {
    Instance inst;
    int deadline = 0;
    bool infeasible = false;  // n > m * deadline at some stage
    std::vector<ReductionStep> steps;
    JobSet removed_isolated;  // original indices
    int stripped_layers = 0;
    std::vector<int> original_of;

    // Lifts a schedule of `inst` within `deadline` slots to one of the original
    // instance within its deadline.
    Schedule reinflate(const Schedule& reduced) const;
};

// Strips a layer of at most m sources, else of at most m sinks (one slot each), else
// removes the isolated jobs, until none of the three applies.
ReducedInstance apply_reductions(const Instance& inst, int deadline);

struct SplitterResult {
    bool feasible = false;
    Schedule witness;
    uint64_t candidates = 0;     // antichains examined
    std::size_t table_bytes = 0;
};

// Guesses the first slot holding a sink, splits the jobs around it, and checks both
// sides against feasibility tables of the graph without sinks and of the reversed
// graph without sources.
SplitterResult solve_splitter(const Instance& inst, int deadline);

SolveResult min_makespan_splitter(const Instance& inst);

}  // namespace usched
