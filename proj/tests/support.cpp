#include "support.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "usched/generators.hpp"

namespace usched::testing {

Instance random_instance(std::mt19937_64& rng, int n_min, int n_max) {
    const int n = std::uniform_int_distribution<int>(n_min, n_max)(rng);
    const int choices[] = {1, 2, 3, (n + 1) / 2, n};
    const int m = std::max(1, choices[std::uniform_int_distribution<int>(0, 4)(rng)]);
    return random_instance_with(rng, n, m);
}

Instance random_instance_with(std::mt19937_64& rng, int n, int m) {
    const double density = std::uniform_real_distribution<double>(0.05, 0.7)(rng);
    const int layers = std::uniform_int_distribution<int>(1, std::max(1, n))(rng);
    return gen_random(n, m, density, layers, rng());
}

std::vector<uint32_t> comparable_masks(const Instance& inst) {
    std::vector<uint32_t> c(inst.job_count(), 0);
    for (const Arc& a : inst.arcs()) {
        c[a.from] |= uint32_t{1} << a.to;
        c[a.to] |= uint32_t{1} << a.from;
    }
    return c;
}

bool brute_is_antichain(const Instance& inst, uint32_t set) {
    for (const Arc& a : inst.arcs())
        if ((set >> a.from & 1u) && (set >> a.to & 1u)) return false;
    return true;
}

uint64_t brute_antichain_count(const Instance& inst) {
    const auto comp = comparable_masks(inst);
    uint64_t count = 0;
    for (uint32_t s = 0; s < (uint32_t{1} << inst.job_count()); ++s) {
        bool ok = true;
        for (uint32_t r = s; r && ok; r &= r - 1) ok = !(comp[std::countr_zero(r)] & s);
        count += ok;
    }
    return count;
}

int brute_min_cover(const Instance& inst) {
    const auto arcs = inst.arcs();
    int best = inst.job_count();
    for (uint32_t s = 0; s < (uint32_t{1} << inst.job_count()); ++s) {
        if (std::popcount(s) >= best) continue;
        bool covers = std::all_of(arcs.begin(), arcs.end(),
                                  [&](const Arc& a) { return (s >> a.from & 1u) || (s >> a.to & 1u); });
        if (covers) best = std::popcount(s);
    }
    return best;
}

int brute_depth(const Instance& inst, uint32_t x, int v) {
    const auto arcs = inst.arcs();
    // longest chain ending at v using only jobs of x before it
    std::function<int(int)> longest = [&](int w) {
        int best = 0;
        for (const Arc& a : arcs)
            if (a.to == w && (x >> a.from & 1u)) best = std::max(best, 1 + longest(a.from));
        return best;
    };
    return longest(v);
}

bool naive_valid(const Instance& inst, const Schedule& s, bool tight) {
    const int n = inst.job_count();
    std::vector<int> slot_of(n, -1);
    for (int t = 0; t < s.makespan(); ++t) {
        if (static_cast<int>(s.slots[t].size()) > inst.machine_count()) return false;
        if (tight && static_cast<int>(s.slots[t].size()) != inst.machine_count()) return false;
        for (int j : s.slots[t]) {
            if (j < 0 || j >= n || slot_of[j] >= 0) return false;
            slot_of[j] = t;
        }
    }
    for (const Arc& a : inst.arcs())
        if (slot_of[a.from] >= 0 && slot_of[a.to] >= 0 && slot_of[a.from] >= slot_of[a.to]) return false;
    if (tight && std::count(slot_of.begin(), slot_of.end(), -1) > 0) return false;
    return true;
}

int brute_matching(int left, int right, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(left);
    for (auto [u, v] : edges) adj[u].push_back(v);
    std::vector<char> used(right, 0);
    std::function<int(int)> go = [&](int u) -> int {
        if (u == left) return 0;
        int best = go(u + 1);
        for (int v : adj[u]) {
            if (used[v]) continue;
            used[v] = 1;
            best = std::max(best, 1 + go(u + 1));
            used[v] = 0;
        }
        return best;
    };
    return go(0);
}

std::vector<uint64_t> naive_convolve(const std::vector<uint64_t>& f, const std::vector<uint64_t>& g, int n) {
    std::vector<uint64_t> out(std::size_t{1} << n, 0);
    for (uint32_t s = 0; s < (uint32_t{1} << n); ++s) {
        // every t subset of s, including s itself and the empty set
        for (uint32_t t = s;; t = (t - 1) & s) {
            out[s] += f[t] * g[s & ~t];
            if (t == 0) break;
        }
    }
    return out;
}

Instance chain(int k, int m) {
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < k; ++i) arcs.push_back({i, i + 1});
    return Instance::create(k, m, arcs);
}

Instance disjoint_chains(int k, int length, int m) {
    std::vector<Arc> arcs;
    for (int c = 0; c < k; ++c)
        for (int i = 0; i + 1 < length; ++i) arcs.push_back({c * length + i, c * length + i + 1});
    return Instance::create(k * length, m, arcs);
}

Instance diamond(int m) { return Instance::create(4, m, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

}  // namespace usched::testing
