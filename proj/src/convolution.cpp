#include "usched/convolution.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "usched/errors.hpp"
#include "usched/poset.hpp"

namespace usched {

namespace {

void check_bits(int n) {
    if (n < 0 || n > kMaxSubsetBits)
        throw CapacityError("subset tables support at most " + std::to_string(kMaxSubsetBits) +
                            " jobs, got " + std::to_string(n));
}

uint64_t max_value(const SubsetTable& f) {
    return f.values.empty() ? 0 : *std::max_element(f.values.begin(), f.values.end());
}

// a * b * 2^n < 2^64
bool fits_u64(uint64_t a, uint64_t b, int n) {
    unsigned __int128 v = static_cast<unsigned __int128>(a) * b;
    return (v << n) >> n == v && (v << n) >> 64 == 0;
}

}  // namespace

SubsetTable zeta(const SubsetTable& f) {
    check_bits(f.n);
    if (!fits_u64(max_value(f), 1, f.n)) throw CapacityError("zeta transform would overflow 64 bits");
    SubsetTable out = f;
    zeta_in_place<uint64_t>(out.values, out.n);
    return out;
}

SubsetTable moebius(const SubsetTable& f) {
    check_bits(f.n);
    SubsetTable out = f;
    moebius_in_place<uint64_t>(out.values, out.n);
    return out;
}

SubsetTable subset_convolve(const SubsetTable& f, const SubsetTable& g) {
    check_bits(f.n);
    if (f.n != g.n) throw std::invalid_argument("subset_convolve: tables over different ground sets");
    if (!fits_u64(max_value(f), max_value(g), f.n))
        throw CapacityError("subset convolution values would overflow 64 bits");
    auto f_hat = ranked_zeta<uint64_t>(f.values, f.n, f.n);
    auto g_hat = ranked_zeta<uint64_t>(g.values, g.n, g.n);
    SubsetTable out(f.n);
    out.values = ranked_convolve<uint64_t>(std::move(f_hat), g_hat, f.n, f.n);
    return out;
}

MaskPoset::MaskPoset(const Instance& inst) : n(inst.job_count()), m(inst.machine_count()) {
    check_bits(n);
    pred.resize(n);
    succ.resize(n);
    for (int v = 0; v < n; ++v) {
        pred[v] = static_cast<uint32_t>(inst.pred(v).to_mask());
        succ[v] = static_cast<uint32_t>(inst.succ(v).to_mask());
    }
}

uint32_t MaskPoset::sinks(uint32_t x) const {
    uint32_t out = 0;
    for (uint32_t rest = x; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        if (!(succ[v] & x)) out |= uint32_t{1} << v;
    }
    return out;
}

std::size_t FeasibilityTables::bytes() const {
    std::size_t b = g.bytes() + downward_closed.bytes();
    for (const auto& t : f) b += t.bytes();
    return b;
}

FeasibilityBuilder::FeasibilityBuilder(const Instance& inst) : poset_(inst) {
    const int n = poset_.n;
    const uint64_t size = uint64_t{1} << n;
    tables_.n = n;
    tables_.m = poset_.m;
    tables_.g = SubsetBits(n);
    tables_.downward_closed = SubsetBits(n);

    // pred(X) and the antichain test both follow from X minus its lowest job.
    std::vector<uint32_t> preds(size, 0);
    std::vector<uint8_t> antichain(size, 0);
    antichain[0] = 1;
    tables_.downward_closed.set(0);
    tables_.g.set(0);
    for (uint64_t x = 1; x < size; ++x) {
        int low = std::countr_zero(x);
        uint64_t rest = x & (x - 1);
        preds[x] = preds[rest] | poset_.pred[low];
        antichain[x] = antichain[rest] && !((poset_.pred[low] | poset_.succ[low]) & rest);
        if (!(preds[x] & ~static_cast<uint32_t>(x))) tables_.downward_closed.set(x);
        if (antichain[x] && std::popcount(x) <= poset_.m) tables_.g.set(x);
    }
    std::vector<uint32_t>().swap(preds);

    std::vector<uint32_t> g_values(size, 0);
    for (uint64_t y = 0; y < size; ++y) g_values[y] = tables_.g.test(y);
    g_hat_ = ranked_zeta<uint32_t>(g_values, n, std::min(n, poset_.m));

    SubsetBits f0(n);
    f0.set(0);
    tables_.f.push_back(std::move(f0));
}

void FeasibilityBuilder::extend() {
    const int n = poset_.n;
    const int m = poset_.m;
    const uint64_t size = uint64_t{1} << n;
    const int t = tables_.rounds() + 1;
    // h_t(S) counts subsets of S, at most 2^26, so 32-bit ring arithmetic is exact.
    std::vector<uint32_t> prev(size, 0);
    for (uint64_t x = 0; x < size; ++x) prev[x] = tables_.f.back().test(x);
    const int f_rank = static_cast<int>(std::min<int64_t>(n, int64_t{m} * (t - 1)));
    const int out_rank = static_cast<int>(std::min<int64_t>(n, int64_t{m} * t));
    auto f_hat = ranked_zeta<uint32_t>(prev, n, f_rank);
    std::vector<uint32_t>().swap(prev);
    std::vector<uint32_t> h = ranked_convolve<uint32_t>(std::move(f_hat), g_hat_, n, out_rank);

    SubsetBits ft(n);
    for (uint64_t x = 0; x < size; ++x)
        if (h[x] >= 1 && tables_.downward_closed.test(x)) ft.set(x);
    tables_.f.push_back(std::move(ft));
}

Solve2nResult solve_2n(const Instance& inst, int deadline) {
    if (deadline < 0) throw std::invalid_argument("deadline must be nonnegative");
    FeasibilityBuilder builder(inst);
    builder.extend_to(deadline);
    Solve2nResult result;
    result.feasible = builder.tables().f[deadline].test(builder.poset().full());
    result.tables = builder.release();
    return result;
}

Schedule reconstruct_schedule(const FeasibilityTables& tables, const MaskPoset& poset, uint32_t x, int t) {
    Schedule sched;
    sched.slots.resize(t);
    for (int slot = t; slot >= 1; --slot) {
        const uint32_t sink_mask = poset.sinks(x);
        std::vector<int> sink_jobs;
        for (uint32_t r = sink_mask; r; r &= r - 1) sink_jobs.push_back(std::countr_zero(r));
        const int s = static_cast<int>(sink_jobs.size());
        bool found = false;
        // largest slot contents first; combinations of exactly k sinks
        for (int k = std::min(s, tables.m); k >= 0 && !found; --k) {
            std::vector<int> pick(k);
            for (int i = 0; i < k; ++i) pick[i] = i;
            while (true) {
                uint32_t y = 0;
                for (int i : pick) y |= uint32_t{1} << sink_jobs[i];
                if (tables.f[slot - 1].test(x & ~y)) {
                    for (int i : pick) sched.slots[slot - 1].push_back(sink_jobs[i]);
                    x &= ~y;
                    found = true;
                    break;
                }
                int i = k - 1;
                while (i >= 0 && pick[i] == s - k + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        if (!found) throw std::logic_error("reconstruct_schedule: tables do not certify the requested set");
    }
    return sched;
}

int makespan_lower_bound(const Instance& inst) {
    const int n = inst.job_count();
    if (n == 0) return 0;
    const int m = inst.machine_count();
    return std::max((n + m - 1) / m, height(inst) + 1);
}

SolveResult min_makespan_2n(const Instance& inst) {
    FeasibilityBuilder builder(inst);
    const uint32_t all = builder.poset().full();
    const int lower = makespan_lower_bound(inst);
    builder.extend_to(lower);
    int t = lower;
    while (!builder.tables().f[t].test(all)) {
        builder.extend();
        ++t;
    }
    return {t, reconstruct_schedule(builder.tables(), builder.poset(), all, t), builder.tables().bytes()};
}

}  // namespace usched
