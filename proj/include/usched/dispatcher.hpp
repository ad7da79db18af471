#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "usched/instance.hpp"

namespace usched {

enum class StrategyKind { vc, antichain_dp, splitter, subset_2n };

std::string_view to_string(StrategyKind s);
// Accepts "vc", "acdp", "split" and "2n".
std::optional<StrategyKind> parse_strategy(std::string_view name);

inline constexpr double kCoverRatio = 7.5;
inline constexpr int kMachineRatio = 258;

struct Strategy {
    StrategyKind chosen = StrategyKind::vc;
    std::string rationale;  // the threshold comparison that decided
    std::string bound;      // running-time bound of the chosen branch
};

// vc when cover_size <= n / 7.5, else antichain_dp when m <= n / 258, else splitter.
Strategy choose_strategy(int n, int m, int cover_size);

struct DispatchResult {
    int makespan = 0;
    Schedule witness;
    Strategy strategy;
    int cover_size = 0;
    std::size_t table_bytes = 0;
};

// Optimal makespan with a validated witness. `force` bypasses the decision tree.
// Throws CapacityError when the selected method cannot handle the instance size.
DispatchResult solve(const Instance& inst, std::optional<StrategyKind> force = std::nullopt);

}  // namespace usched
