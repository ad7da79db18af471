#include "usched/vc/divide.hpp"

#include <algorithm>

#include "usched/matching.hpp"

namespace usched::vc {

namespace {

SideGuess guess_for(const Fingerprint& f, int universe, Side side) {
    SideGuess g;
    g.cover = f.side_jobs(universe, side);
    g.moment = f.class_jobs(universe, side, CoverClass::moment);
    g.sinks = f.class_jobs(universe, side, CoverClass::sink);
    g.early = f.early_jobs(universe, side);
    return g;
}

// Largest lower bound on the slot of a free job v implied by the cover jobs before
// it in this orientation; 0 when none applies.
int lower_bound_from(const Orientation& o, const SideGuess& g, const SidePlan& plan, const JobSet& middle_cover,
                     int middle, int v) {
    const JobSet& before = o.before(v);
    int l = 0;
    (before & g.cover).for_each([&](int u) {
        const Placement& p = plan.placement[u];
        if (g.sinks.test(u))
            l = std::max(l, middle);
        else if (p.kind == PlacementKind::block)
            l = std::max(l, plan.block_floor(p.index));
        else if (p.kind == PlacementKind::moment)
            l = std::max(l, plan.moment_slot[p.index] + 1);
    });
    if (before.intersects(middle_cover)) l = std::max(l, middle + 1);
    return l;
}

bool sides_ordered(const DivideInput& in, const SplitGuess& g) {
    bool ok = true;
    auto rank = [&](int v) { return g.left.cover.test(v) ? 0 : g.middle.test(v) ? 1 : 2; };
    (in.cover & in.jobs).for_each([&](int u) {
        (in.inst->succ(u) & in.cover & in.jobs).for_each([&](int v) {
            ok = ok && rank(u) <= rank(v) && !(rank(u) == 1 && rank(v) == 1);
        });
    });
    return ok;
}

}  // namespace

SplitGuess split_fingerprint(const Fingerprint& f, int universe) {
    return {guess_for(f, universe, Side::left), guess_for(f, universe, Side::right),
            f.side_jobs(universe, Side::middle)};
}

IntervalAssignment compute_intervals(const DivideInput& in, const SplitGuess& g, const SidePlan& left,
                                     const SidePlan& right) {
    const int n = in.inst->job_count();
    const int T = in.slots;
    const int mid = in.middle;
    const Orientation fwd{in.inst, false};
    const Orientation bwd{in.inst, true};
    const int mirrored_mid = T + 1 - mid;

    IntervalAssignment out;
    out.lower.assign(n, 1);
    out.upper.assign(n, 0);
    out.jobs = in.jobs - in.cover - left.inner - right.inner;
    out.jobs.for_each([&](int v) {
        out.lower[v] = std::max(1, lower_bound_from(fwd, g.left, left, g.middle, mid, v));
        out.upper[v] = std::min(T, T + 1 - lower_bound_from(bwd, g.right, right, g.middle, mirrored_mid, v));
    });
    left.free_sinks.for_each([&](int v) {
        out.lower[v] = left.block_floor(left.depth[v] + 2);
        out.upper[v] = mid - 1;
    });
    right.free_sinks.for_each([&](int v) {
        out.lower[v] = T + 1 - (mirrored_mid - 1);
        out.upper[v] = T + 1 - right.block_floor(right.depth[v] + 2);
    });
    out.jobs |= left.free_sinks;
    out.jobs |= right.free_sinks;
    return out;
}

bool partition_postconditions_hold(const DivideInput& in, const SplitGuess& g, const Partition3& p) {
    const int m = in.inst->machine_count();
    const JobSet rest = in.jobs - in.cover;
    if ((p.left & p.middle).any() || (p.left & p.right).any() || (p.middle & p.right).any()) return false;
    if ((p.left | p.middle | p.right) != rest) return false;
    if (p.middle.count() + g.middle.count() != m) return false;
    const JobSet left_all = g.left.cover | p.left;
    const JobSet right_all = g.right.cover | p.right;
    bool ok = true;
    (g.left.cover | g.middle).for_each([&](int c) { ok = ok && (in.inst->pred(c) & in.jobs).is_subset_of(left_all); });
    (g.right.cover | g.middle).for_each([&](int c) { ok = ok && (in.inst->succ(c) & in.jobs).is_subset_of(right_all); });
    return ok;
}

std::optional<Partition3> divide_with_plans(const DivideInput& in, const SplitGuess& g, const SidePlan& left,
                                            const SidePlan& right) {
    const int m = in.inst->machine_count();
    const int T = in.slots;
    const IntervalAssignment iv = compute_intervals(in, g, left, right);

    // free positions in slot order: left side, the middle slot, the mirrored right side
    std::vector<int> slot_of_position;
    for (const auto& [t, k] : left.positions) slot_of_position.insert(slot_of_position.end(), k, t);
    slot_of_position.insert(slot_of_position.end(), m - g.middle.count(), in.middle);
    for (auto it = right.positions.rbegin(); it != right.positions.rend(); ++it)
        slot_of_position.insert(slot_of_position.end(), it->second, T + 1 - it->first);

    const std::vector<int> free_jobs = iv.jobs.to_vector();
    if (free_jobs.size() != slot_of_position.size()) return std::nullopt;
    std::vector<std::vector<int>> adjacency(free_jobs.size());
    for (std::size_t i = 0; i < free_jobs.size(); ++i) {
        const int v = free_jobs[i];
        for (std::size_t j = 0; j < slot_of_position.size(); ++j)
            if (iv.lower[v] <= slot_of_position[j] && slot_of_position[j] <= iv.upper[v])
                adjacency[i].push_back(static_cast<int>(j));
        if (adjacency[i].empty()) return std::nullopt;
    }
    const Matching mt = max_bipartite_matching(static_cast<int>(free_jobs.size()),
                                               static_cast<int>(slot_of_position.size()), adjacency);
    if (mt.size != static_cast<int>(free_jobs.size())) return std::nullopt;

    const int n = in.inst->job_count();
    Partition3 part{left.inner, JobSet(n), right.inner};
    for (std::size_t i = 0; i < free_jobs.size(); ++i) {
        const int v = free_jobs[i];
        if (in.cover.test(v)) continue;
        const int t = slot_of_position[mt.left_mate[i]];
        if (t < in.middle)
            part.left.set(v);
        else if (t == in.middle)
            part.middle.set(v);
        else
            part.right.set(v);
    }
    return part;
}

std::optional<Partition3> divide(const DivideInput& in, const Fingerprint& f) {
    const int n = in.inst->job_count();
    const int m = in.inst->machine_count();
    const SplitGuess g = split_fingerprint(f, n);
    if (g.middle.count() > m || !sides_ordered(in, g)) return std::nullopt;
    const SidePlan left = deduce_side_plan({in.inst, false}, in.jobs, g.left, in.middle, m);
    if (!left.consistent) return std::nullopt;
    const SidePlan right = deduce_side_plan({in.inst, true}, in.jobs, g.right, in.slots + 1 - in.middle, m);
    if (!right.consistent) return std::nullopt;
    return divide_with_plans(in, g, left, right);
}

std::optional<Partition3> divide(const Instance& inst, int middle, const JobSet& cover, const Fingerprint& f) {
    DivideInput in{&inst, inst.all_jobs(), cover, inst.job_count() / inst.machine_count(), middle};
    return divide(in, f);
}

}  // namespace usched::vc
