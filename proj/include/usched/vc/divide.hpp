#pragma once

#include <optional>
#include <vector>

#include "usched/instance.hpp"
#include "usched/vc/fingerprint.hpp"
#include "usched/vc/side_plan.hpp"

namespace usched::vc {

// The guess split by side, with the cover jobs of the middle slot.
struct SplitGuess {
    SideGuess left;
    SideGuess right;
    JobSet middle;
};

SplitGuess split_fingerprint(const Fingerprint& f, int universe);

// Slot bounds for the jobs placed by matching. Indices are over the universe;
// jobs outside `jobs` have lower > upper.
struct IntervalAssignment {
    JobSet jobs;
    std::vector<int> lower;
    std::vector<int> upper;
};

// The subproblem being divided: the jobs, its cover, its slot count and the middle slot.
struct DivideInput {
    const Instance* inst = nullptr;
    JobSet jobs;
    JobSet cover;
    int slots = 0;
    int middle = 1;
};

IntervalAssignment compute_intervals(const DivideInput& in, const SplitGuess& guess, const SidePlan& left,
                                     const SidePlan& right);

struct Partition3 {
    JobSet left;
    JobSet middle;
    JobSet right;
};

// Structural postconditions that hold whenever divide returns: the three sets
// partition the non-cover jobs, the middle slot is exactly full, and everything
// preceding the left or middle cover jobs lies on the left (symmetrically right).
bool partition_postconditions_hold(const DivideInput& in, const SplitGuess& guess, const Partition3& part);

// Matches the free jobs to free positions given both side plans. Returns nothing
// without a perfect matching.
std::optional<Partition3> divide_with_plans(const DivideInput& in, const SplitGuess& guess, const SidePlan& left,
                                            const SidePlan& right);

// Both side plans from the fingerprint, then divide_with_plans. Returns nothing when the
// fingerprint contradicts the order, a side plan or the matching.
std::optional<Partition3> divide(const DivideInput& in, const Fingerprint& f);

// Whole-instance form: `inst` tight on its m machines with cover `cover`.
std::optional<Partition3> divide(const Instance& inst, int middle, const JobSet& cover, const Fingerprint& f);

}  // namespace usched::vc
