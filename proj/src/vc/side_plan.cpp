#include "usched/vc/side_plan.hpp"

#include <algorithm>

namespace usched::vc {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

SidePlan contradiction(SidePlan plan, std::string why) {
    plan.consistent = false;
    plan.contradiction = std::move(why);
    return plan;
}

// u precedes c; both placements known. Necessary order between them.
bool ordered(const Placement& u, const Placement& c) {
    if (u.kind == PlacementKind::free_sink || c.kind == PlacementKind::free_sink) return true;
    if (u.kind == PlacementKind::none || c.kind == PlacementKind::none) return true;
    if (u.kind == PlacementKind::moment) return u.index < c.index;
    return u.index <= c.index;
}

}  // namespace

int SidePlan::block_floor(int i) const {
    if (i <= sink_moments) return moment_slot[i];
    if (i == sink_moments + 1) return moment_slot[sink_moments] + std::max(1, ceil_div(tail_jobs, machines));
    return first_sinks_only;
}

SidePlan deduce_side_plan(const Orientation& o, const JobSet& jobs, const SideGuess& guess, int middle, int m) {
    const int n = o.inst->job_count();
    SidePlan plan;
    plan.machines = m;
    plan.middle = middle;
    plan.placement.assign(n, {});
    plan.depth.assign(n, 0);
    plan.inner = JobSet(n);
    plan.free_sinks = JobSet(n);

    const JobSet& cover = guess.cover;
    cover.for_each([&](int c) { plan.inner |= o.before(c); });
    plan.inner &= jobs;
    plan.inner -= cover;

    bool bad_sink = false;
    guess.sinks.for_each([&](int s) { bad_sink = bad_sink || o.after(s).intersects(cover); });
    if (bad_sink) return contradiction(std::move(plan), "a guessed sink precedes a cover job of its side");

    // Depth w.r.t. the moment jobs: process moment jobs by their number of moment predecessors.
    std::vector<int> moment_jobs = guess.moment.to_vector();
    std::sort(moment_jobs.begin(), moment_jobs.end(), [&](int a, int b) {
        return (o.before(a) & guess.moment).count() < (o.before(b) & guess.moment).count();
    });
    auto depth_of = [&](int v) {
        int d = 0;
        (o.before(v) & guess.moment).for_each([&](int q) { d = std::max(d, plan.depth[q] + 1); });
        return d;
    };
    for (int q : moment_jobs) plan.depth[q] = depth_of(q);
    (cover | plan.inner).for_each([&](int v) {
        if (!guess.moment.test(v)) plan.depth[v] = depth_of(v);
    });

    int last_moment = 0;
    int last_block = 0;
    auto place = [&](int v, PlacementKind kind, int index) {
        plan.placement[v] = {kind, index};
        if (kind == PlacementKind::moment) last_moment = std::max(last_moment, index);
        if (kind == PlacementKind::block) last_block = std::max(last_block, index);
    };
    cover.for_each([&](int c) {
        const int d = plan.depth[c];
        const bool early = guess.early.test(c);
        if (guess.moment.test(c))
            place(c, PlacementKind::moment, early ? d + 1 : d + 2);
        else if (guess.sinks.test(c)) {
            if (early)
                place(c, PlacementKind::moment, d + 1);
            else {
                place(c, PlacementKind::free_sink, 0);
                plan.free_sinks.set(c);
            }
        } else
            place(c, PlacementKind::block, early ? d + 1 : d + 2);
    });
    plan.inner.for_each([&](int v) { place(v, PlacementKind::block, plan.depth[v] + 1); });

    bool disordered = false;
    (cover | plan.inner).for_each([&](int v) {
        (o.before(v) & (cover | plan.inner)).for_each([&](int u) {
            disordered = disordered || !ordered(plan.placement[u], plan.placement[v]);
        });
    });
    if (disordered) return contradiction(std::move(plan), "placements contradict a precedence");

    const int l = std::max(last_moment, last_block - 1);
    plan.sink_moments = l;
    // per block: jobs at its sink moment (split by sinks), jobs before it (cover / other)
    std::vector<int> at_moment(l + 2, 0), early_sinks(l + 2, 0), cover_inside(l + 2, 0), inside(l + 2, 0);
    (cover | plan.inner).for_each([&](int v) {
        const Placement& p = plan.placement[v];
        if (p.kind == PlacementKind::moment) {
            ++at_moment[p.index];
            if (guess.sinks.test(v)) ++early_sinks[p.index];
        } else if (p.kind == PlacementKind::block) {
            ++inside[p.index];
            if (cover.test(v)) ++cover_inside[p.index];
        }
    });

    plan.moment_slot.assign(l + 1, 0);
    for (int i = 1; i <= l; ++i) {
        const int count = at_moment[i] + inside[i];
        if (count == 0) return contradiction(std::move(plan), "empty block before a sink moment");
        const int len = ceil_div(count, m);
        const int full = m * (len - 1);
        // the slots before the sink moment are full of non-sinks; cover jobs cannot
        // sit at the sink moment unless guessed there
        if (inside[i] < full || cover_inside[i] > full)
            return contradiction(std::move(plan), "block rosters do not fill its slots");
        const int high = count - full - early_sinks[i];
        if (high < 1 || high > m - 1) return contradiction(std::move(plan), "sink moment without a non-sink or a sink");
        plan.moment_slot[i] = plan.moment_slot[i - 1] + len;
        if (count < m * len) plan.positions.emplace_back(plan.moment_slot[i], m * len - count);
    }

    const int x = inside[l + 1];
    plan.tail_jobs = x;
    if (cover_inside[l + 1] > m * (x / m)) return contradiction(std::move(plan), "cover job in a trailing sink moment");
    const int tail_len = ceil_div(x, m);
    plan.first_sinks_only = plan.moment_slot[l] + tail_len + 1;
    if (plan.first_sinks_only > middle) return contradiction(std::move(plan), "side does not fit before the middle");
    if (x % m != 0) plan.positions.emplace_back(plan.moment_slot[l] + tail_len, m - x % m);
    for (int t = plan.first_sinks_only; t < middle; ++t) plan.positions.emplace_back(t, m);
    for (const auto& [t, k] : plan.positions) plan.position_count += k;
    plan.consistent = true;
    return plan;
}

}  // namespace usched::vc
