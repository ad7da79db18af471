#include "usched/instance.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "usched/errors.hpp"

namespace usched {

namespace {

std::string job_name(int j) { return std::to_string(j + 1); }

// Kahn's algorithm over an adjacency list; empty result means a cycle.
std::vector<int> kahn_order(int n, const std::vector<std::vector<int>>& out) {
    std::vector<int> indeg(n, 0);
    for (const auto& row : out)
        for (int v : row) ++indeg[v];
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<int> order;
    order.reserve(n);
    while (!ready.empty()) {
        int u = ready.top();
        ready.pop();
        order.push_back(u);
        for (int v : out[u])
            if (--indeg[v] == 0) ready.push(v);
    }
    if (static_cast<int>(order.size()) != n) order.clear();
    return order;
}

std::vector<JobSet> closed_successors(const std::vector<Arc>& arcs, int n) {
    std::vector<std::vector<int>> out(n);
    for (const Arc& a : arcs) {
        if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n)
            throw InstanceError("arc " + job_name(a.from) + "->" + job_name(a.to) +
                                " references a job outside 1.." + std::to_string(n));
        if (a.from == a.to) throw InstanceError("self-arc on job " + job_name(a.from));
        out[a.from].push_back(a.to);
    }
    std::vector<int> order = kahn_order(n, out);
    if (n > 0 && order.empty()) throw InstanceError("precedence arcs contain a directed cycle");

    std::vector<JobSet> succ(n, JobSet(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int u = *it;
        for (int v : out[u]) {
            succ[u].set(v);
            succ[u] |= succ[v];
        }
    }
    return succ;
}

}  // namespace

std::vector<Arc> transitive_closure(const std::vector<Arc>& arcs, int n) {
    std::vector<JobSet> succ = closed_successors(arcs, n);
    std::vector<Arc> out;
    for (int u = 0; u < n; ++u) succ[u].for_each([&](int v) { out.push_back({u, v}); });
    return out;
}

Instance Instance::create(int n, int m, const std::vector<Arc>& arcs, std::optional<int> deadline) {
    if (n < 0) throw InstanceError("job count must be nonnegative");
    if (m < 1) throw InstanceError("machine count must be positive");
    if (deadline && *deadline < 0) throw InstanceError("deadline must be nonnegative");
    std::vector<JobSet> succ = closed_successors(arcs, n);
    std::vector<JobSet> pred(n, JobSet(n));
    for (int u = 0; u < n; ++u) succ[u].for_each([&](int v) { pred[v].set(u); });
    return from_closed(n, m, deadline, std::move(pred), std::move(succ));
}

Instance Instance::from_closed(int n, int m, std::optional<int> deadline, std::vector<JobSet> pred,
                               std::vector<JobSet> succ) {
    Instance inst;
    inst.n_ = n;
    inst.m_ = m;
    inst.deadline_ = deadline;
    inst.pred_ = std::move(pred);
    inst.succ_ = std::move(succ);
    // In a closed order u < v implies pred(u) is a proper subset of pred(v).
    inst.topo_.resize(n);
    for (int v = 0; v < n; ++v) inst.topo_[v] = v;
    std::vector<int> depth(n);
    for (int v = 0; v < n; ++v) depth[v] = inst.pred_[v].count();
    std::stable_sort(inst.topo_.begin(), inst.topo_.end(),
                     [&](int a, int b) { return depth[a] < depth[b]; });
    return inst;
}

std::vector<Arc> Instance::arcs() const {
    std::vector<Arc> out;
    for (int u = 0; u < n_; ++u) succ_[u].for_each([&](int v) { out.push_back({u, v}); });
    return out;
}

std::size_t Instance::arc_count() const {
    std::size_t c = 0;
    for (const auto& s : succ_) c += s.count();
    return c;
}

Instance Instance::dual() const { return from_closed(n_, m_, deadline_, succ_, pred_); }

Instance Instance::with_machines(int m) const {
    if (m < 1) throw InstanceError("machine count must be positive");
    Instance copy = *this;
    copy.m_ = m;
    return copy;
}

Instance Instance::with_deadline(std::optional<int> deadline) const {
    Instance copy = *this;
    copy.deadline_ = deadline;
    return copy;
}

std::pair<Instance, std::vector<int>> Instance::induced(const JobSet& keep) const {
    std::vector<int> old_of = keep.to_vector();
    int k = static_cast<int>(old_of.size());
    std::vector<int> new_of(n_, -1);
    for (int i = 0; i < k; ++i) new_of[old_of[i]] = i;
    std::vector<JobSet> pred(k, JobSet(k)), succ(k, JobSet(k));
    for (int i = 0; i < k; ++i) {
        succ_[old_of[i]].for_each([&](int v) {
            if (new_of[v] >= 0) {
                succ[i].set(new_of[v]);
                pred[new_of[v]].set(i);
            }
        });
    }
    return {from_closed(k, m_, deadline_, std::move(pred), std::move(succ)), std::move(old_of)};
}

Instance Instance::with_isolated_jobs(int extra) const {
    int k = n_ + extra;
    std::vector<JobSet> pred(k, JobSet(k)), succ(k, JobSet(k));
    for (int u = 0; u < n_; ++u) {
        succ_[u].for_each([&](int v) {
            succ[u].set(v);
            pred[v].set(u);
        });
    }
    return from_closed(k, m_, deadline_, std::move(pred), std::move(succ));
}

JobSet Schedule::assigned(int universe) const {
    JobSet s(universe);
    for (const auto& slot : slots)
        for (int j : slot)
            if (j >= 0 && j < universe) s.set(j);
    return s;
}

Schedule Schedule::reversed() const {
    Schedule r;
    r.slots.assign(slots.rbegin(), slots.rend());
    return r;
}

Validation validate(const Instance& inst, const Schedule& sched, bool require_tight) {
    const int n = inst.job_count();
    const int m = inst.machine_count();
    std::vector<int> slot_of(n, -1);
    for (int t = 0; t < sched.makespan(); ++t) {
        for (int j : sched.slots[t]) {
            if (j < 0 || j >= n)
                return {ViolationKind::job_out_of_range,
                        "slot " + std::to_string(t + 1) + " holds unknown job " + job_name(j)};
            if (slot_of[j] >= 0)
                return {ViolationKind::duplicate_job, "job " + job_name(j) + " scheduled in slots " +
                                                          std::to_string(slot_of[j] + 1) + " and " +
                                                          std::to_string(t + 1)};
            slot_of[j] = t;
        }
    }
    for (int t = 0; t < sched.makespan(); ++t) {
        int size = static_cast<int>(sched.slots[t].size());
        if (size > m)
            return {ViolationKind::slot_overflow, "slot " + std::to_string(t + 1) + " exceeds m (" +
                                                      std::to_string(size) + " > " +
                                                      std::to_string(m) + ")"};
    }
    for (int u = 0; u < n; ++u) {
        if (slot_of[u] < 0) continue;
        std::string failure;
        inst.succ(u).for_each([&](int v) {
            if (failure.empty() && slot_of[v] >= 0 && slot_of[v] <= slot_of[u])
                failure = "arc " + job_name(u) + "<" + job_name(v) + " scheduled in reverse";
        });
        if (!failure.empty()) return {ViolationKind::arc_reversed, failure};
    }
    if (require_tight) {
        for (int j = 0; j < n; ++j)
            if (slot_of[j] < 0) return {ViolationKind::missing_job, "job " + job_name(j) + " not scheduled"};
        for (int t = 0; t < sched.makespan(); ++t)
            if (static_cast<int>(sched.slots[t].size()) != m)
                return {ViolationKind::slot_not_full, "slot " + std::to_string(t + 1) + " holds " +
                                                          std::to_string(sched.slots[t].size()) +
                                                          " jobs, not m"};
    }
    return {};
}

Validation validate_complete(const Instance& inst, const Schedule& sched) {
    Validation v = validate(inst, sched, false);
    if (!v) return v;
    JobSet seen = sched.assigned(inst.job_count());
    for (int j = 0; j < inst.job_count(); ++j)
        if (!seen.test(j)) return {ViolationKind::missing_job, "job " + job_name(j) + " not scheduled"};
    return {};
}

}  // namespace usched
