#include "usched/vc/schedule.hpp"

#include <algorithm>
#include <unordered_map>

#include "usched/poset.hpp"
#include "usched/vc/divide.hpp"
#include "usched/vc/fingerprint.hpp"
#include "usched/vc/side_plan.hpp"

namespace usched::vc {

namespace {

struct GuessedPlan {
    SideGuess guess;
    SidePlan plan;
};

class VcSolver {
public:
    VcSolver(const Instance& inst, const JobSet& cover, const VcOptions& options)
        : inst_(inst), cover_(cover), options_(options), m_(inst.machine_count()), n_(inst.job_count()) {}

    std::optional<Schedule> solve(const JobSet& jobs) {
        auto it = memo_.find(jobs);
        if (it != memo_.end()) return it->second;
        ++stats_.subproblems;
        std::optional<Schedule> result = solve_fresh(jobs);
        memo_.emplace(jobs, result);
        return result;
    }

    const VcStats& stats() const { return stats_; }

private:
    std::optional<Schedule> solve_fresh(const JobSet& jobs) {
        const int count = jobs.count();
        if (count % m_ != 0) return std::nullopt;
        const int T = count / m_;
        const JobSet cover = cover_ & jobs;
        if (cover.empty()) {
            // pairwise incomparable: any filling works
            Schedule s;
            std::vector<int> all = jobs.to_vector();
            for (int t = 0; t < T; ++t) s.slots.emplace_back(all.begin() + t * m_, all.begin() + (t + 1) * m_);
            return s;
        }
        for (int mid = 1; mid <= T; ++mid) {
            std::optional<Schedule> s = options_.exhaustive_fingerprints ? split_exhaustive(jobs, cover, T, mid)
                                                                         : split_pruned(jobs, cover, T, mid);
            if (s) return s;
        }
        return std::nullopt;
    }

    std::optional<Schedule> split_exhaustive(const JobSet& jobs, const JobSet& cover, int T, int mid) {
        const int half = cover.count() / 2;
        const DivideInput in{&inst_, jobs, cover, T, mid};
        std::optional<Schedule> found;
        enumerate_fingerprints(cover, [&](const Fingerprint& f) {
            if (f.side_jobs(n_, Side::left).count() > half || f.side_jobs(n_, Side::right).count() > half) return true;
            ++stats_.fingerprints;
            std::optional<Partition3> part = divide(in, f);
            if (!part) return true;
            found = combine(in, split_fingerprint(f, n_), *part);
            return !found;
        });
        return found;
    }

    std::optional<Schedule> split_pruned(const JobSet& jobs, const JobSet& cover, int T, int mid) {
        const int half = cover.count() / 2;
        std::vector<int> order;
        for (int v : inst_.topological_order())
            if (cover.test(v)) order.push_back(v);
        std::vector<Side> side(n_, Side::middle);
        int counts[3] = {0, 0, 0};
        std::optional<Schedule> found;

        auto leaf = [&]() {
            SplitGuess g;
            g.left.cover = JobSet(n_);
            g.right.cover = JobSet(n_);
            g.middle = JobSet(n_);
            for (int c : order) {
                if (side[c] == Side::left) g.left.cover.set(c);
                if (side[c] == Side::middle) g.middle.set(c);
                if (side[c] == Side::right) g.right.cover.set(c);
            }
            const JobSet inner_left = (pred_of(inst_, g.left.cover) & jobs) - cover;
            const JobSet inner_right = (succ_of(inst_, g.right.cover) & jobs) - cover;
            if ((g.left.cover | inner_left).count() > m_ * (mid - 1)) return;
            if ((g.right.cover | inner_right).count() > m_ * (T - mid)) return;
            const int free_count = (jobs - cover - inner_left - inner_right).count();

            const auto lefts = side_plans({&inst_, false}, jobs, g.left.cover, mid);
            if (lefts.empty()) return;
            const auto rights = side_plans({&inst_, true}, jobs, g.right.cover, T + 1 - mid);
            std::unordered_map<int, std::vector<std::size_t>> by_balance;
            for (std::size_t i = 0; i < rights.size(); ++i)
                by_balance[rights[i].plan.position_count - rights[i].plan.free_sinks.count()].push_back(i);

            const DivideInput in{&inst_, jobs, cover, T, mid};
            const int middle_free = m_ - g.middle.count();
            for (const auto& l : lefts) {
                const int need = free_count + l.plan.free_sinks.count() - middle_free - l.plan.position_count;
                auto bucket = by_balance.find(need);
                if (bucket == by_balance.end()) continue;
                for (std::size_t ri : bucket->second) {
                    const auto& r = rights[ri];
                    ++stats_.fingerprints;
                    SplitGuess full{l.guess, r.guess, g.middle};
                    std::optional<Partition3> part = divide_with_plans(in, full, l.plan, r.plan);
                    if (!part) continue;
                    found = combine(in, full, *part);
                    if (found) return;
                }
            }
        };

        auto assign = [&](auto&& self, std::size_t i) -> void {
            if (found) return;
            if (i == order.size()) {
                leaf();
                return;
            }
            const int c = order[i];
            for (Side s : {Side::left, Side::middle, Side::right}) {
                const int k = static_cast<int>(s);
                if (s == Side::middle ? counts[k] >= m_ : counts[k] >= half) continue;
                bool ok = true;
                (inst_.pred(c) & cover).for_each([&](int p) {
                    ok = ok && static_cast<int>(side[p]) <= k && !(s == Side::middle && side[p] == Side::middle);
                });
                if (!ok) continue;
                side[c] = s;
                ++counts[k];
                self(self, i + 1);
                --counts[k];
                if (found) return;
            }
        };
        assign(assign, 0);
        return found;
    }

    // Every class assignment of the side's cover jobs that yields a consistent plan.
    std::vector<GuessedPlan> side_plans(const Orientation& o, const JobSet& jobs, const JobSet& side_cover,
                                        int middle) {
        std::vector<int> order;
        for (int v : inst_.topological_order())
            if (side_cover.test(v)) order.push_back(v);
        if (o.reversed) std::reverse(order.begin(), order.end());

        std::vector<GuessedPlan> out;
        SideGuess g{side_cover, JobSet(n_), JobSet(n_), JobSet(n_)};
        std::vector<int> depth(n_, 0);
        std::vector<Placement> place(n_);

        auto walk = [&](auto&& self, std::size_t i) -> void {
            if (i == order.size()) {
                SidePlan plan = deduce_side_plan(o, jobs, g, middle, m_);
                if (plan.consistent) out.push_back({g, std::move(plan)});
                return;
            }
            const int c = order[i];
            const JobSet preds = o.before(c) & side_cover;
            int d = 0;
            (preds & g.moment).for_each([&](int q) { d = std::max(d, depth[q] + 1); });
            depth[c] = d;
            const bool may_be_sink = !o.after(c).intersects(side_cover);
            for (CoverClass cls : {CoverClass::moment, CoverClass::sink, CoverClass::other}) {
                if (cls == CoverClass::sink && !may_be_sink) continue;
                for (bool early : {true, false}) {
                    Placement p;
                    if (cls == CoverClass::moment)
                        p = {PlacementKind::moment, early ? d + 1 : d + 2};
                    else if (cls == CoverClass::sink)
                        p = early ? Placement{PlacementKind::moment, d + 1} : Placement{PlacementKind::free_sink, 0};
                    else
                        p = {PlacementKind::block, early ? d + 1 : d + 2};
                    bool ok = true;
                    preds.for_each([&](int u) {
                        const Placement& q = place[u];
                        if (q.kind == PlacementKind::moment)
                            ok = ok && (p.kind == PlacementKind::free_sink || q.index < p.index);
                        else if (q.kind == PlacementKind::block)
                            ok = ok && (p.kind == PlacementKind::free_sink || q.index <= p.index);
                    });
                    if (!ok) continue;
                    place[c] = p;
                    if (cls == CoverClass::moment) g.moment.set(c);
                    if (cls == CoverClass::sink) g.sinks.set(c);
                    if (early) g.early.set(c);
                    self(self, i + 1);
                    g.moment.reset(c);
                    g.sinks.reset(c);
                    g.early.reset(c);
                }
            }
        };
        walk(walk, 0);
        return out;
    }

    std::optional<Schedule> combine(const DivideInput& in, const SplitGuess& g, const Partition3& part) {
        ++stats_.partitions;
        if (!partition_postconditions_hold(in, g, part)) {
            ++stats_.postcondition_violations;
            return std::nullopt;
        }
        std::optional<Schedule> left = solve(g.left.cover | part.left);
        if (!left) return std::nullopt;
        std::optional<Schedule> right = solve(g.right.cover | part.right);
        if (!right) return std::nullopt;
        Schedule s = *left;
        s.slots.push_back((g.middle | part.middle).to_vector());
        s.slots.insert(s.slots.end(), right->slots.begin(), right->slots.end());
        if (!tight_on(in.jobs, s)) {
            ++stats_.rejected_combinations;
            return std::nullopt;
        }
        return s;
    }

    // Tight m-schedule of exactly `jobs` respecting the order among them.
    bool tight_on(const JobSet& jobs, const Schedule& s) const {
        std::vector<int> slot(n_, -1);
        JobSet seen(n_);
        for (int t = 0; t < s.makespan(); ++t) {
            if (static_cast<int>(s.slots[t].size()) != m_) return false;
            for (int v : s.slots[t]) {
                if (!jobs.test(v) || seen.test(v)) return false;
                seen.set(v);
                slot[v] = t;
            }
        }
        if (seen != jobs) return false;
        bool ok = true;
        jobs.for_each([&](int v) {
            (inst_.pred(v) & jobs).for_each([&](int u) { ok = ok && slot[u] < slot[v]; });
        });
        return ok;
    }

    const Instance& inst_;
    JobSet cover_;
    VcOptions options_;
    int m_;
    int n_;
    VcStats stats_;
    std::unordered_map<JobSet, std::optional<Schedule>, JobSetHash> memo_;
};

}  // namespace

VcResult schedule_vc(const Instance& tight, const JobSet& cover, const VcOptions& options) {
    VcSolver solver(tight, cover, options);
    VcResult result;
    result.schedule = solver.solve(tight.all_jobs());
    if (result.schedule && !validate(tight, *result.schedule, true)) result.schedule.reset();
    result.stats = solver.stats();
    return result;
}

VcSolveResult min_makespan_vc(const Instance& inst, const VcOptions& options) {
    const int n = inst.job_count();
    const JobSet cover = min_vertex_cover(inst).cover;
    VcSolveResult out;
    for (int T = makespan_lower_bound(inst);; ++T) {
        const Instance tight = make_tight(inst, T);
        JobSet padded_cover(tight.job_count());
        cover.for_each([&](int v) { padded_cover.set(v); });
        VcResult r = schedule_vc(tight, padded_cover, options);
        out.stats.subproblems += r.stats.subproblems;
        out.stats.fingerprints += r.stats.fingerprints;
        out.stats.partitions += r.stats.partitions;
        out.stats.postcondition_violations += r.stats.postcondition_violations;
        out.stats.rejected_combinations += r.stats.rejected_combinations;
        if (!r.schedule) continue;
        out.makespan = T;
        for (auto& slot : r.schedule->slots) {
            std::vector<int> kept;
            for (int v : slot)
                if (v < n) kept.push_back(v);
            out.witness.slots.push_back(std::move(kept));
        }
        return out;
    }
}

}  // namespace usched::vc
