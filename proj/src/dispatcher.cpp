#include "usched/dispatcher.hpp"

#include <stdexcept>

#include "usched/antichain_dp.hpp"
#include "usched/convolution.hpp"
#include "usched/poset.hpp"
#include "usched/splitter.hpp"
#include "usched/vc/schedule.hpp"

namespace usched {

std::string_view to_string(StrategyKind s) {
    switch (s) {
        case StrategyKind::vc: return "vc";
        case StrategyKind::antichain_dp: return "acdp";
        case StrategyKind::splitter: return "split";
        case StrategyKind::subset_2n: return "2n";
    }
    return "?";
}

std::optional<StrategyKind> parse_strategy(std::string_view name) {
    for (StrategyKind s : {StrategyKind::vc, StrategyKind::antichain_dp, StrategyKind::splitter, StrategyKind::subset_2n})
        if (to_string(s) == name) return s;
    return std::nullopt;
}

Strategy choose_strategy(int n, int m, int cover_size) {
    // integer forms of cover <= n / 7.5 and m <= n / 258
    const std::string counts =
        "cover=" + std::to_string(cover_size) + " n=" + std::to_string(n) + " m=" + std::to_string(m);
    if (int64_t{cover_size} * 15 <= int64_t{n} * 2)
        return {StrategyKind::vc, counts + ": cover <= n/7.5", "O*(169^cover)"};
    if (int64_t{m} * kMachineRatio <= n)
        return {StrategyKind::antichain_dp, counts + ": cover > n/7.5, m <= n/258", "O*(#AC * C(n,m))"};
    return {StrategyKind::splitter, counts + ": cover > n/7.5, m > n/258", "O*(2^(n-m) + #AC)"};
}

DispatchResult solve(const Instance& inst, std::optional<StrategyKind> force) {
    DispatchResult out;
    out.cover_size = min_vertex_cover(inst).cover.count();
    out.strategy = choose_strategy(inst.job_count(), inst.machine_count(), out.cover_size);
    if (force) {
        out.strategy.chosen = *force;
        out.strategy.rationale = "forced";
        out.strategy.bound = "";
    }
    SolveResult r;
    switch (out.strategy.chosen) {
        case StrategyKind::vc: {
            vc::VcSolveResult v = vc::min_makespan_vc(inst);
            r = {v.makespan, std::move(v.witness)};
            break;
        }
        case StrategyKind::antichain_dp: r = min_makespan_antichain_dp(inst); break;
        case StrategyKind::splitter: r = min_makespan_splitter(inst); break;
        case StrategyKind::subset_2n: r = min_makespan_2n(inst); break;
    }
    if (Validation v = validate_complete(inst, r.witness); !v)
        throw std::logic_error("solver returned an invalid witness: " + v.message);
    out.makespan = r.makespan;
    out.witness = std::move(r.witness);
    out.table_bytes = r.table_bytes;
    return out;
}

}  // namespace usched
