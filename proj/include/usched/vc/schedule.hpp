#pragma once

#include <cstdint>
#include <optional>

#include "usched/convolution.hpp"
#include "usched/instance.hpp"

namespace usched::vc {

struct VcOptions {
    // Walk all 13^|C| fingerprints through divide instead of generating only those
    // consistent with the precedence order. Meant for small covers in tests.
    bool exhaustive_fingerprints = false;
};

struct VcStats {
    uint64_t subproblems = 0;        // distinct job sets solved
    uint64_t fingerprints = 0;       // fingerprints handed to divide
    uint64_t partitions = 0;         // partitions returned by divide
    uint64_t postcondition_violations = 0;
    uint64_t rejected_combinations = 0;  // recursive results failing the final check
};

struct VcResult {
    std::optional<Schedule> schedule;  // tight
    VcStats stats;
};

// A tight m-schedule of `tight` (exactly m * T jobs), splitting at every middle slot
// and fingerprint with at most |C|/2 cover jobs on either side. `cover` must cover
// every comparable pair.
VcResult schedule_vc(const Instance& tight, const JobSet& cover, const VcOptions& options = {});

struct VcSolveResult {
    int makespan = 0;
    Schedule witness;
    VcStats stats;
};

VcSolveResult min_makespan_vc(const Instance& inst, const VcOptions& options = {});

}  // namespace usched::vc
