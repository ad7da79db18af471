#pragma once

#include <string>
#include <utility>
#include <vector>

#include "usched/instance.hpp"

namespace usched::vc {

// The precedence relation read forwards (left side) or backwards (right side, where
// the slots after the middle are considered in reverse against the dual order).
struct Orientation {
    const Instance* inst = nullptr;
    bool reversed = false;

    const JobSet& before(int v) const { return reversed ? inst->succ(v) : inst->pred(v); }
    const JobSet& after(int v) const { return reversed ? inst->pred(v) : inst->succ(v); }
};

// The fingerprint restricted to one side.
struct SideGuess {
    JobSet cover;   // cover jobs on this side
    JobSet moment;  // non-sinks at a sink moment
    JobSet sinks;   // sinks of the side
    JobSet early;
};

// Where a job of the side is deduced to be.
enum class PlacementKind { none, moment, block, free_sink };

struct Placement {
    PlacementKind kind = PlacementKind::none;
    int index = 0;  // sink moment or block number, from 1
};

// The slots 1..middle-1 of one side as forced by its guess: sink moments, block
// lengths, the first sinks-only slot, and the free positions left for sinks that
// the guess does not place.
struct SidePlan {
    bool consistent = false;
    std::string contradiction;

    int machines = 1;
    int middle = 1;
    int sink_moments = 0;              // sink moments referenced by the guess
    std::vector<int> moment_slot;      // [0] = 0, then the slot of each sink moment
    int tail_jobs = 0;                 // jobs placed in the block after the last sink moment
    int first_sinks_only = 1;          // first slot holding only sinks
    JobSet inner;                      // non-cover jobs preceding a cover job of the side
    JobSet free_sinks;                 // late sinks of the cover, placed by matching
    std::vector<Placement> placement;  // per job of the universe
    std::vector<int> depth;            // depth w.r.t. the moment jobs, cover and inner jobs
    std::vector<std::pair<int, int>> positions;  // (slot, free positions), ascending slots
    int position_count = 0;

    // Earliest slot of block i that can take a sink placed by matching.
    int block_floor(int i) const;
};

// Deduces the plan for the side that fills slots 1..middle-1 of `orientation`,
// within the job set `jobs` of a tight subproblem on m machines.
SidePlan deduce_side_plan(const Orientation& orientation, const JobSet& jobs, const SideGuess& guess,
                          int middle, int m);

}  // namespace usched::vc
