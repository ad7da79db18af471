#include "usched/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "usched/errors.hpp"

namespace usched {

namespace {

// Own copy of the relation as 32-bit masks, built from the arc list.
struct Relation {
    int n = 0;
    std::vector<uint32_t> before;  // jobs that must precede j
    std::vector<uint32_t> after;   // jobs that must follow j
};

Relation relation_of(const Instance& inst, int cap) {
    if (inst.job_count() > cap)
        throw CapacityError("oracle supports at most " + std::to_string(cap) + " jobs, got " +
                            std::to_string(inst.job_count()));
    Relation r;
    r.n = inst.job_count();
    r.before.assign(r.n, 0);
    r.after.assign(r.n, 0);
    for (const Arc& a : inst.arcs()) {
        r.before[a.to] |= uint32_t{1} << a.from;
        r.after[a.from] |= uint32_t{1} << a.to;
    }
    return r;
}

uint32_t ready_jobs(const Relation& r, uint32_t done) {
    uint32_t out = 0;
    for (int j = 0; j < r.n; ++j)
        if (!(done >> j & 1u) && (r.before[j] & ~done) == 0) out |= uint32_t{1} << j;
    return out;
}

std::vector<int> jobs_of(uint32_t mask) {
    std::vector<int> out;
    for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
    return out;
}

}  // namespace

OracleResult oracle_min_makespan(const Instance& inst) {
    const Relation r = relation_of(inst, kOracleMaxJobs);
    const int m = inst.machine_count();
    const uint32_t all = r.n == 32 ? ~uint32_t{0} : (uint32_t{1} << r.n) - 1;
    std::vector<int8_t> dist(std::size_t{1} << r.n, -1);
    std::vector<uint32_t> parent(std::size_t{1} << r.n, 0);
    std::deque<uint32_t> queue{0};
    dist[0] = 0;
    while (!queue.empty() && dist[all] < 0) {
        uint32_t done = queue.front();
        queue.pop_front();
        uint32_t ready = ready_jobs(r, done);
        for (uint32_t y = ready; y; y = (y - 1) & ready) {
            if (std::popcount(y) > m) continue;
            uint32_t next = done | y;
            if (dist[next] >= 0) continue;
            dist[next] = static_cast<int8_t>(dist[done] + 1);
            parent[next] = done;
            queue.push_back(next);
        }
    }
    OracleResult result;
    result.makespan = dist[all];
    for (uint32_t s = all; s != 0; s = parent[s]) result.witness.slots.push_back(jobs_of(s & ~parent[s]));
    std::reverse(result.witness.slots.begin(), result.witness.slots.end());
    return result;
}

std::optional<Schedule> oracle_feasible(const Instance& inst, int deadline, std::size_t max_states) {
    const int n = inst.job_count();
    const int m = inst.machine_count();
    if (deadline < 0) return std::nullopt;
    if (n > static_cast<int64_t>(m) * deadline) return std::nullopt;

    // Jobs with identical predecessor and successor lists are interchangeable.
    std::vector<std::vector<int>> before(n), after(n);
    for (const Arc& a : inst.arcs()) {
        before[a.to].push_back(a.from);
        after[a.from].push_back(a.to);
    }
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> class_index;
    std::vector<int> class_of(n);
    std::vector<std::vector<int>> members;
    for (int j = 0; j < n; ++j) {
        auto key = std::make_pair(before[j], after[j]);
        auto [it, fresh] = class_index.emplace(key, static_cast<int>(members.size()));
        if (fresh) members.emplace_back();
        class_of[j] = it->second;
        members[it->second].push_back(j);
    }
    const int k = static_cast<int>(members.size());
    std::vector<std::vector<int>> class_before(k);
    for (int c = 0; c < k; ++c) {
        for (int p : before[members[c][0]]) class_before[c].push_back(class_of[p]);
        std::sort(class_before[c].begin(), class_before[c].end());
        class_before[c].erase(std::unique(class_before[c].begin(), class_before[c].end()), class_before[c].end());
    }

    std::vector<int> done(k, 0);
    std::vector<std::vector<int>> chosen;  // per slot, count taken from each class
    std::unordered_set<std::string> failed;
    auto key_of = [&](int slot) {
        std::string key(reinterpret_cast<const char*>(done.data()), done.size() * sizeof(int));
        key.append(reinterpret_cast<const char*>(&slot), sizeof(int));
        return key;
    };

    int remaining_total = n;
    std::function<bool(int)> search = [&](int slot) -> bool {
        if (remaining_total == 0) return true;
        if (slot > deadline) return false;
        if (remaining_total > static_cast<int64_t>(m) * (deadline - slot + 1)) return false;
        std::string key = key_of(slot);
        if (failed.count(key)) return false;

        std::vector<int> ready;
        for (int c = 0; c < k; ++c) {
            if (done[c] == static_cast<int>(members[c].size())) continue;
            bool ok = true;
            for (int p : class_before[c]) ok = ok && done[p] == static_cast<int>(members[p].size());
            if (ok) ready.push_back(c);
        }
        std::vector<int> take(k, 0);
        // jobs still obtainable from ready[i..], and the fewest this slot must run
        std::vector<int> suffix(ready.size() + 1, 0);
        for (std::size_t i = ready.size(); i-- > 0;)
            suffix[i] = suffix[i + 1] + static_cast<int>(members[ready[i]].size()) - done[ready[i]];
        const int64_t need = std::max<int64_t>(1, remaining_total - static_cast<int64_t>(m) * (deadline - slot));
        // distribute at most m jobs over the ready classes, largest counts first
        std::function<bool(std::size_t, int)> pick = [&](std::size_t i, int budget) -> bool {
            if (i == ready.size()) {
                int used = m - budget;
                if (used == 0) return false;
                int after_slot = remaining_total - used;
                if (after_slot > static_cast<int64_t>(m) * (deadline - slot)) return false;
                for (int c : ready) done[c] += take[c];
                remaining_total -= used;
                chosen.push_back(take);
                if (search(slot + 1)) return true;
                chosen.pop_back();
                remaining_total += used;
                for (int c : ready) done[c] -= take[c];
                return false;
            }
            if ((m - budget) + std::min(budget, suffix[i]) < need) return false;
            int c = ready[i];
            int avail = std::min<int>(budget, static_cast<int>(members[c].size()) - done[c]);
            for (int x = avail; x >= 0; --x) {
                take[c] = x;
                if (pick(i + 1, budget - x)) return true;
            }
            take[c] = 0;
            return false;
        };
        if (pick(0, m)) return true;
        failed.insert(std::move(key));
        if (failed.size() > max_states) throw CapacityError("oracle_feasible exceeded its state budget");
        return false;
    };

    if (!search(1)) return std::nullopt;
    Schedule sched;
    std::vector<int> next(k, 0);
    for (const auto& counts : chosen) {
        std::vector<int> slot;
        for (int c = 0; c < k; ++c)
            for (int x = 0; x < counts[c]; ++x) slot.push_back(members[c][next[c]++]);
        std::sort(slot.begin(), slot.end());
        sched.slots.push_back(std::move(slot));
    }
    return sched;
}

uint64_t for_each_optimal_schedule(const Instance& inst, const std::function<bool(const Schedule&)>& visitor) {
    const Relation r = relation_of(inst, kEnumerateMaxJobs);
    const int m = inst.machine_count();
    const uint32_t all = (uint32_t{1} << r.n) - 1;
    const int best = oracle_min_makespan(inst).makespan;

    // slots_left[S]: fewest slots finishing every job once S is done
    std::vector<int> slots_left(std::size_t{1} << r.n, -1);
    std::function<int(uint32_t)> finish = [&](uint32_t done) -> int {
        if (done == all) return 0;
        int& memo = slots_left[done];
        if (memo >= 0) return memo;
        int b = r.n + 1;
        uint32_t ready = ready_jobs(r, done);
        for (uint32_t y = ready; y; y = (y - 1) & ready)
            if (std::popcount(y) <= m) b = std::min(b, 1 + finish(done | y));
        return memo = b;
    };

    uint64_t visited = 0;
    bool stopped = false;
    Schedule current;
    std::function<void(uint32_t, int)> walk = [&](uint32_t done, int used) {
        if (stopped) return;
        if (done == all) {
            ++visited;
            stopped = !visitor(current);
            return;
        }
        uint32_t ready = ready_jobs(r, done);
        for (uint32_t y = ready; y; y = (y - 1) & ready) {
            if (std::popcount(y) > m) continue;
            if (used + 1 + finish(done | y) > best) continue;
            current.slots.push_back(jobs_of(y));
            walk(done | y, used + 1);
            current.slots.pop_back();
        }
    };
    walk(0, 0);
    return visited;
}

std::vector<Schedule> enumerate_optimal_schedules(const Instance& inst, std::size_t limit) {
    std::vector<Schedule> out;
    if (limit == 0) return out;
    for_each_optimal_schedule(inst, [&](const Schedule& s) {
        out.push_back(s);
        return out.size() < limit;
    });
    return out;
}

bool is_sink_adjusted(const Instance& inst, const Schedule& sched) {
    if (!validate(inst, sched)) throw std::invalid_argument("is_sink_adjusted: schedule is not feasible");
    const int n = inst.job_count();
    const int m = inst.machine_count();
    std::vector<int> slot_of(n, -1);
    for (int t = 0; t < sched.makespan(); ++t)
        for (int j : sched.slots[t]) slot_of[j] = t;
    std::vector<std::vector<int>> after(n);
    for (const Arc& a : inst.arcs()) after[a.from].push_back(a.to);
    std::vector<char> is_sink(n, 0);
    for (int j = 0; j < n; ++j) {
        if (slot_of[j] < 0) continue;
        is_sink[j] = std::none_of(after[j].begin(), after[j].end(), [&](int v) { return slot_of[v] >= 0; });
    }

    const int T = sched.makespan();
    int last_non_sink = -1;
    for (int t = 0; t < T; ++t)
        for (int j : sched.slots[t])
            if (!is_sink[j]) last_non_sink = t;

    for (int t = 0; t < T; ++t) {
        int high = 0;
        for (int j : sched.slots[t]) high += !is_sink[j];
        // (ii): a sinks-only slot may not precede a non-sink
        if (high == 0 && t < last_non_sink) return false;
        // (i): after a sink moment only successors of its jobs, or sinks
        if (high > 0 && high < m) {
            std::vector<char> covered(n, 0);
            for (int j : sched.slots[t])
                for (int v : after[j]) covered[v] = 1;
            for (int u = t + 1; u < T; ++u)
                for (int j : sched.slots[u])
                    if (!covered[j] && !is_sink[j]) return false;
        }
    }
    return true;
}

bool is_middle_adjusted(const Instance& inst, const Schedule& sched, int middle) {
    if (middle < 1 || middle > sched.makespan()) throw std::invalid_argument("is_middle_adjusted: bad middle slot");
    Schedule left, right;
    left.slots.assign(sched.slots.begin(), sched.slots.begin() + (middle - 1));
    right.slots.assign(sched.slots.begin() + middle, sched.slots.end());
    return is_sink_adjusted(inst, left) && is_sink_adjusted(inst.dual(), right.reversed());
}

}  // namespace usched
