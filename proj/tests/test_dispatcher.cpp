#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "usched/dispatcher.hpp"
#include "usched/oracle.hpp"
#include "usched/poset.hpp"

using namespace usched;
using namespace usched::testing;

TEST(ChooseStrategy, Examples) {
    EXPECT_EQ(choose_strategy(75, 5, 10).chosen, StrategyKind::vc);
    EXPECT_EQ(choose_strategy(75, 5, 11).chosen, StrategyKind::splitter);
    EXPECT_EQ(choose_strategy(516, 2, 100).chosen, StrategyKind::antichain_dp);
    EXPECT_EQ(choose_strategy(516, 3, 100).chosen, StrategyKind::splitter);
    EXPECT_EQ(choose_strategy(75, 40, 20).chosen, StrategyKind::splitter);
    EXPECT_FALSE(choose_strategy(75, 5, 10).rationale.empty());
    EXPECT_FALSE(choose_strategy(75, 5, 10).bound.empty());
}

TEST(ChooseStrategy, MatchesRationalThresholds) {
    for (int n = 1; n <= 800; n += 7)
        for (int m = 1; m <= 5; ++m)
            for (int c = 0; c <= n; c += 3) {
                const double n_real = n;
                StrategyKind expected = c <= n_real / 7.5 + 1e-9   ? StrategyKind::vc
                                        : m <= n_real / 258 + 1e-9 ? StrategyKind::antichain_dp
                                                                   : StrategyKind::splitter;
                EXPECT_EQ(choose_strategy(n, m, c).chosen, expected) << n << " " << m << " " << c;
            }
}

TEST(StrategyNames, RoundTrip) {
    for (StrategyKind s : {StrategyKind::vc, StrategyKind::antichain_dp, StrategyKind::splitter,
                           StrategyKind::subset_2n})
        EXPECT_EQ(parse_strategy(to_string(s)), s);
    EXPECT_FALSE(parse_strategy("auto").has_value());
}

TEST(Solve, Examples) {
    EXPECT_EQ(solve(Instance::create(12, 4, {})).makespan, 3);
    DispatchResult r = solve(Instance::create(9, 2, {}));
    EXPECT_EQ(r.strategy.chosen, StrategyKind::vc);
    EXPECT_EQ(r.cover_size, 0);
    EXPECT_EQ(r.makespan, 5);
}

TEST(Solve, StrategyInvariantAndEqualToOracle) {
    std::mt19937_64 rng(91);
    for (int i = 0; i < 200; ++i) {
        Instance inst = random_instance(rng, 0, 11);
        const int best = oracle_min_makespan(inst).makespan;
        DispatchResult chosen = solve(inst);
        EXPECT_EQ(chosen.makespan, best);
        EXPECT_EQ(chosen.strategy.chosen,
                  choose_strategy(inst.job_count(), inst.machine_count(), min_vertex_cover(inst).cover.count()).chosen);
        for (StrategyKind s : {StrategyKind::vc, StrategyKind::antichain_dp, StrategyKind::splitter,
                               StrategyKind::subset_2n}) {
            DispatchResult forced = solve(inst, s);
            EXPECT_EQ(forced.makespan, best) << to_string(s);
            EXPECT_TRUE(validate_complete(inst, forced.witness));
        }
    }
}

TEST(Solve, AntichainCountStaysUnderTheBoundsForLargeCovers) {
    // with cover > n/7.5 the antichains number at most prod(|chain|+1) <= (1+1/a)^(a n), a = 1 - 1/7.5
    std::mt19937_64 rng(92);
    const double alpha = 1.0 - 1.0 / 7.5;
    for (int i = 0; i < 200; ++i) {
        Instance inst = random_instance(rng, 1, 16);
        const int n = inst.job_count();
        if (min_vertex_cover(inst).cover.count() * 7.5 <= n) continue;
        const BigInt bound = antichain_bound(inst);
        EXPECT_LE(BigInt(count_antichains(inst)), bound);
        EXPECT_LE(bound.convert_to<double>(), std::pow(1.0 + 1.0 / alpha, alpha * n) * (1 + 1e-9));
    }
}
