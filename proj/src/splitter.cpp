#include "usched/splitter.hpp"

#include <algorithm>
#include <stdexcept>

#include "usched/poset.hpp"

namespace usched {

namespace {

bool fits(int n, int m, int deadline) { return deadline >= 0 && n <= int64_t{m} * deadline; }

void pad_to(Schedule& s, int slots) {
    if (s.makespan() > slots) throw std::logic_error("reinflate: schedule longer than its deadline");
    s.slots.resize(slots);
}

uint32_t to_local_mask(const JobSet& x, const std::vector<int>& local_of) {
    uint32_t mask = 0;
    x.for_each([&](int v) { mask |= uint32_t{1} << local_of[v]; });
    return mask;
}

}  // namespace

ReducedInstance apply_reductions(const Instance& inst, int deadline) {
    ReducedInstance red;
    red.inst = inst;
    red.deadline = deadline;
    red.removed_isolated = inst.empty_set();
    red.original_of.resize(inst.job_count());
    for (int v = 0; v < inst.job_count(); ++v) red.original_of[v] = v;

    const int m = inst.machine_count();
    while (true) {
        const Instance& cur = red.inst;
        if (!fits(cur.job_count(), m, red.deadline)) {
            red.infeasible = true;
            return red;
        }
        if (cur.job_count() == 0) return red;

        // a layer of at most m sources or sinks takes a slot of its own; isolated jobs
        // are only set aside once neither layer rule applies
        ReductionStep step;
        step.deadline = red.deadline;
        JobSet removed = cur.empty_set();
        if (JobSet src = sources(cur); src.count() <= m) {
            step.kind = ReductionKind::sources;
            removed = src;
        } else if (JobSet snk = sinks(cur); snk.count() <= m) {
            step.kind = ReductionKind::sinks;
            removed = snk;
        } else {
            for (int v = 0; v < cur.job_count(); ++v)
                if (cur.pred(v).empty() && cur.succ(v).empty()) removed.set(v);
            if (removed.empty()) return red;
            step.kind = ReductionKind::isolated;
            removed.for_each([&](int v) { red.removed_isolated.set(red.original_of[v]); });
        }
        if (step.kind != ReductionKind::isolated) {
            --red.deadline;
            ++red.stripped_layers;
        }
        step.jobs = removed.to_vector();
        auto [next, old_of] = cur.induced(removed.complement());
        std::vector<int> original(old_of.size());
        for (std::size_t i = 0; i < old_of.size(); ++i) original[i] = red.original_of[old_of[i]];
        step.old_of = std::move(old_of);
        red.original_of = std::move(original);
        red.steps.push_back(std::move(step));
        red.inst = std::move(next);
    }
}

Schedule ReducedInstance::reinflate(const Schedule& reduced) const {
    Schedule s = reduced;
    const int m = inst.machine_count();
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        for (auto& slot : s.slots)
            for (int& v : slot) v = it->old_of[v];
        switch (it->kind) {
            case ReductionKind::sources:
                pad_to(s, it->deadline - 1);
                s.slots.insert(s.slots.begin(), it->jobs);
                break;
            case ReductionKind::sinks:
                pad_to(s, it->deadline - 1);
                s.slots.push_back(it->jobs);
                break;
            case ReductionKind::isolated: {
                pad_to(s, it->deadline);
                std::size_t next = 0;
                for (auto& slot : s.slots)
                    while (static_cast<int>(slot.size()) < m && next < it->jobs.size())
                        slot.push_back(it->jobs[next++]);
                if (next < it->jobs.size()) throw std::logic_error("reinflate: no room for isolated jobs");
                break;
            }
        }
    }
    for (auto& slot : s.slots) std::sort(slot.begin(), slot.end());
    return s;
}

SplitterResult solve_splitter(const Instance& inst, int deadline) {
    if (deadline < 0) throw std::invalid_argument("deadline must be nonnegative");
    SplitterResult result;
    const ReducedInstance red = apply_reductions(inst, deadline);
    if (red.infeasible) return result;
    const Instance& g = red.inst;
    const int T = red.deadline;
    const int m = g.machine_count();
    if (g.job_count() == 0) {
        result.feasible = true;
        result.witness = red.reinflate(Schedule{});
        return result;
    }

    const JobSet all_sinks = sinks(g);
    const JobSet all_sources = sources(g);
    auto [low, low_old] = g.induced(all_sinks.complement());
    auto [high, high_old] = g.induced(all_sources.complement());
    const Instance high_dual = high.dual();
    std::vector<int> low_of(g.job_count(), -1), high_of(g.job_count(), -1);
    for (std::size_t i = 0; i < low_old.size(); ++i) low_of[low_old[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < high_old.size(); ++i) high_of[high_old[i]] = static_cast<int>(i);

    FeasibilityBuilder prefix_builder(low);
    FeasibilityBuilder suffix_builder(high_dual);
    prefix_builder.extend_to(std::max(T - 1, 0));
    suffix_builder.extend_to(std::max(T - 1, 0));
    result.table_bytes = prefix_builder.tables().bytes() + suffix_builder.tables().bytes();
    const auto& f_prefix = prefix_builder.tables().f;
    const auto& f_suffix = suffix_builder.tables().f;

    enumerate_antichains(g, [&](const JobSet& s) -> bool {
        if (s.empty() || s.count() > m) return true;
        ++result.candidates;
        const JobSet suffix = (succ_of(g, s) | all_sinks) - s;
        const JobSet prefix = g.all_jobs() - s - suffix;
        const uint32_t prefix_mask = to_local_mask(prefix, low_of);
        const uint32_t suffix_mask = to_local_mask(suffix, high_of);
        for (int z = 1; z <= T; ++z) {
            if (!f_prefix[z - 1].test(prefix_mask) || !f_suffix[T - z].test(suffix_mask)) continue;
            Schedule before = reconstruct_schedule(prefix_builder.tables(), prefix_builder.poset(), prefix_mask, z - 1);
            Schedule after =
                reconstruct_schedule(suffix_builder.tables(), suffix_builder.poset(), suffix_mask, T - z).reversed();
            Schedule full;
            for (auto& slot : before.slots) {
                for (int& v : slot) v = low_old[v];
                full.slots.push_back(std::move(slot));
            }
            full.slots.push_back(s.to_vector());
            for (auto& slot : after.slots) {
                for (int& v : slot) v = high_old[v];
                full.slots.push_back(std::move(slot));
            }
            result.feasible = true;
            result.witness = red.reinflate(full);
            return false;
        }
        return true;
    });
    return result;
}

SolveResult min_makespan_splitter(const Instance& inst) {
    std::size_t peak = 0;
    for (int t = makespan_lower_bound(inst);; ++t) {
        SplitterResult r = solve_splitter(inst, t);
        peak = std::max(peak, r.table_bytes);
        if (r.feasible) return {t, std::move(r.witness), peak};
    }
}

}  // namespace usched
