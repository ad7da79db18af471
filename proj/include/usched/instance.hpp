#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "usched/job_set.hpp"

namespace usched {

// u precedes v. Indices are 0-based in memory; the file format is 1-based.
struct Arc {
    int from;
    int to;
    auto operator<=>(const Arc&) const = default;
};

// Smallest transitively closed superset of `arcs`, sorted. Throws InstanceError on a
// cycle, a self-arc or an index outside [0, n).
std::vector<Arc> transitive_closure(const std::vector<Arc>& arcs, int n);

// An instance of P|prec, p_j=1|C_max with its precedence relation kept transitively
// closed. Immutable after construction.
class Instance {
public:
    Instance() = default;

    static Instance create(int n, int m, const std::vector<Arc>& arcs,
                           std::optional<int> deadline = std::nullopt);

    int job_count() const { return n_; }
    int machine_count() const { return m_; }
    std::optional<int> deadline() const { return deadline_; }

    const JobSet& pred(int v) const { return pred_[v]; }
    const JobSet& succ(int v) const { return succ_[v]; }
    bool precedes(int u, int v) const { return succ_[u].test(v); }
    bool comparable(int u, int v) const { return precedes(u, v) || precedes(v, u); }

    // Jobs ordered so that every predecessor comes first.
    const std::vector<int>& topological_order() const { return topo_; }

    std::vector<Arc> arcs() const;
    std::size_t arc_count() const;

    JobSet all_jobs() const { return JobSet::full(n_); }
    JobSet empty_set() const { return JobSet(n_); }

    // Reversed precedence relation; n, m and the deadline are unchanged.
    Instance dual() const;

    Instance with_machines(int m) const;
    Instance with_deadline(std::optional<int> deadline) const;

    // Subgraph induced by `keep`. The second member maps new indices to old ones.
    std::pair<Instance, std::vector<int>> induced(const JobSet& keep) const;

    // Appends `extra` jobs without any precedence constraints.
    Instance with_isolated_jobs(int extra) const;

    bool operator==(const Instance& o) const {
        return n_ == o.n_ && m_ == o.m_ && deadline_ == o.deadline_ && pred_ == o.pred_;
    }

private:
    static Instance from_closed(int n, int m, std::optional<int> deadline,
                                std::vector<JobSet> pred, std::vector<JobSet> succ);

    int n_ = 0;
    int m_ = 1;
    std::optional<int> deadline_;
    std::vector<JobSet> pred_;
    std::vector<JobSet> succ_;
    std::vector<int> topo_;
};

// A sequence of timeslots; slot t (0-based here) holds the jobs started at time t+1.
struct Schedule {
    std::vector<std::vector<int>> slots;

    int makespan() const { return static_cast<int>(slots.size()); }
    JobSet assigned(int universe) const;
    Schedule reversed() const;
    bool operator==(const Schedule&) const = default;
};

enum class ViolationKind {
    none,
    job_out_of_range,
    duplicate_job,
    slot_overflow,
    arc_reversed,
    missing_job,
    slot_not_full,
};

struct Validation {
    ViolationKind kind = ViolationKind::none;
    std::string message;

    bool ok() const { return kind == ViolationKind::none; }
    explicit operator bool() const { return ok(); }
};

// Checks slot capacity, disjointness and precedence order for the assigned jobs.
// With `require_tight` every slot must hold exactly m jobs and every job must be
// assigned. Reports the first failing constraint.
Validation validate(const Instance& inst, const Schedule& sched, bool require_tight = false);

// Validation that additionally requires every job to be assigned.
Validation validate_complete(const Instance& inst, const Schedule& sched);

}  // namespace usched
