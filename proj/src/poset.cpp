#include "usched/poset.hpp"

#include <algorithm>
#include <queue>

#include "usched/matching.hpp"

namespace usched {

JobSet sinks(const Instance& inst, const JobSet& x) {
    JobSet out = inst.empty_set();
    x.for_each([&](int v) {
        if (!inst.succ(v).intersects(x)) out.set(v);
    });
    return out;
}

JobSet sources(const Instance& inst, const JobSet& x) {
    JobSet out = inst.empty_set();
    x.for_each([&](int v) {
        if (!inst.pred(v).intersects(x)) out.set(v);
    });
    return out;
}

JobSet sinks(const Instance& inst) { return sinks(inst, inst.all_jobs()); }
JobSet sources(const Instance& inst) { return sources(inst, inst.all_jobs()); }

JobSet pred_of(const Instance& inst, const JobSet& x) {
    JobSet out = inst.empty_set();
    x.for_each([&](int v) { out |= inst.pred(v); });
    return out;
}

JobSet succ_of(const Instance& inst, const JobSet& x) {
    JobSet out = inst.empty_set();
    x.for_each([&](int v) { out |= inst.succ(v); });
    return out;
}

JobSet pred_closure(const Instance& inst, const JobSet& x) { return x | pred_of(inst, x); }

bool is_antichain(const Instance& inst, const JobSet& x) {
    bool ok = true;
    x.for_each([&](int v) { ok = ok && !inst.succ(v).intersects(x); });
    return ok;
}

bool is_downward_closed(const Instance& inst, const JobSet& x) {
    bool ok = true;
    x.for_each([&](int v) { ok = ok && inst.pred(v).is_subset_of(x); });
    return ok;
}

std::vector<int> heights(const Instance& inst) {
    std::vector<int> h(inst.job_count(), 0);
    const auto& order = inst.topological_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        inst.succ(v).for_each([&](int w) { h[v] = std::max(h[v], h[w] + 1); });
    }
    return h;
}

int height(const Instance& inst) {
    std::vector<int> h = heights(inst);
    return h.empty() ? 0 : *std::max_element(h.begin(), h.end());
}

int depth_wrt(const Instance& inst, const JobSet& x, int v) {
    JobSet below = inst.pred(v) & x;
    if (below.empty()) return 0;
    // longest chain ending at each member of `below`, in topological order
    std::vector<int> depth(inst.job_count(), 0);
    int best = 0;
    for (int u : inst.topological_order()) {
        if (!below.test(u)) continue;
        int d = 0;
        (inst.pred(u) & below).for_each([&](int w) { d = std::max(d, depth[w] + 1); });
        depth[u] = d;
        best = std::max(best, d + 1);
    }
    return best;
}

VertexCoverCertificate min_vertex_cover(const Instance& inst) {
    const int n = inst.job_count();
    std::vector<std::vector<int>> adj(n);
    for (int u = 0; u < n; ++u) adj[u] = inst.succ(u).to_vector();
    Matching match = max_bipartite_matching(n, n, adj);

    // Koenig: alternate from free left copies; left copies reached and right copies
    // not reached both lie outside the minimum bipartite cover.
    std::vector<char> left_seen(n, 0), right_seen(n, 0);
    std::queue<int> q;
    for (int u = 0; u < n; ++u)
        if (match.left_mate[u] < 0) {
            left_seen[u] = 1;
            q.push(u);
        }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u]) {
            if (right_seen[v]) continue;
            right_seen[v] = 1;
            int w = match.right_mate[v];
            if (w >= 0 && !left_seen[w]) {
                left_seen[w] = 1;
                q.push(w);
            }
        }
    }

    VertexCoverCertificate cert;
    cert.cover = inst.empty_set();
    cert.witness_antichain = inst.empty_set();
    for (int v = 0; v < n; ++v) {
        if (left_seen[v] && !right_seen[v])
            cert.witness_antichain.set(v);
        else
            cert.cover.set(v);
    }

    // Matched pairs u -> v link consecutive chain members.
    for (int v = 0; v < n; ++v) {
        if (match.right_mate[v] >= 0) continue;
        std::vector<int> chain;
        for (int u = v; u >= 0; u = match.left_mate[u]) chain.push_back(u);
        cert.chains.chains.push_back(std::move(chain));
    }
    return cert;
}

BigInt antichain_bound(const ChainDecomposition& chains) {
    BigInt product = 1;
    for (const auto& c : chains.chains) product *= static_cast<unsigned>(c.size() + 1);
    return product;
}

BigInt antichain_bound(const Instance& inst) { return antichain_bound(min_vertex_cover(inst).chains); }

uint64_t count_antichains(const Instance& inst) {
    return enumerate_antichains(inst, [](const JobSet&) {});
}

}  // namespace usched
