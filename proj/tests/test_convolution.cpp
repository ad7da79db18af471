#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "usched/convolution.hpp"
#include "usched/errors.hpp"
#include "usched/oracle.hpp"

using namespace usched;
using namespace usched::testing;

namespace {

SubsetTable random_table(std::mt19937_64& rng, int n, uint64_t max_value) {
    SubsetTable t(n);
    std::uniform_int_distribution<uint64_t> pick(0, max_value);
    for (auto& v : t.values) v = pick(rng);
    return t;
}

SubsetTable constant(int n, uint64_t v) {
    SubsetTable t(n);
    std::fill(t.values.begin(), t.values.end(), v);
    return t;
}

SubsetTable empty_indicator(int n) {
    SubsetTable t(n);
    t[0] = 1;
    return t;
}

}  // namespace

TEST(Zeta, Examples) {
    EXPECT_EQ(zeta(empty_indicator(3)), constant(3, 1));
    SubsetTable ones = zeta(constant(2, 1));
    EXPECT_EQ(ones.values, (std::vector<uint64_t>{1, 2, 2, 4}));
}

TEST(Zeta, MoebiusInvertsOnRandomTables) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        const int n = std::uniform_int_distribution<int>(0, 12)(rng);
        SubsetTable f = random_table(rng, n, 1000);
        EXPECT_EQ(moebius(zeta(f)), f);
    }
}

TEST(Zeta, BlockedTransformMatchesDirectSums) {
    // above the in-cache block size so the tiled path runs
    std::mt19937_64 rng(32);
    const int n = 15;
    std::vector<uint32_t> a(1u << n);
    for (auto& v : a) v = rng() % 7;
    std::vector<uint32_t> z = a;
    zeta_in_place<uint32_t>(z, n);
    for (int k = 0; k < 300; ++k) {
        const uint32_t s = rng() % (1u << n);
        uint32_t sum = 0;
        for (uint32_t t = s;; t = (t - 1) & s) {
            sum += a[t];
            if (t == 0) break;
        }
        EXPECT_EQ(z[s], sum);
    }
    moebius_in_place<uint32_t>(z, n);
    EXPECT_EQ(z, a);
}

TEST(Convolve, Examples) {
    std::mt19937_64 rng(33);
    SubsetTable g = random_table(rng, 4, 9);
    EXPECT_EQ(subset_convolve(empty_indicator(4), g), g);
    EXPECT_EQ(subset_convolve(constant(2, 1), constant(2, 1)).values, (std::vector<uint64_t>{1, 2, 2, 4}));
}

TEST(Convolve, MatchesNaiveTripleLoop) {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 100; ++i) {
        const int n = std::uniform_int_distribution<int>(0, 12)(rng);
        SubsetTable f = random_table(rng, n, 3);
        SubsetTable g = random_table(rng, n, 3);
        EXPECT_EQ(subset_convolve(f, g).values, naive_convolve(f.values, g.values, n));
    }
}

TEST(Convolve, RejectsOverflowAndSizeMismatch) {
    SubsetTable big = constant(4, uint64_t{1} << 62);
    EXPECT_THROW(subset_convolve(big, big), CapacityError);
    EXPECT_THROW(zeta(big), CapacityError);
    EXPECT_THROW(subset_convolve(constant(2, 1), constant(3, 1)), std::invalid_argument);
    EXPECT_THROW(solve_2n(Instance::create(27, 1, {}), 27), CapacityError);
}

TEST(Solve2n, Examples) {
    Instance small = Instance::create(4, 2, {{0, 2}, {1, 2}});
    EXPECT_TRUE(solve_2n(small, 2).feasible);
    EXPECT_FALSE(solve_2n(chain(3, 2), 2).feasible);
    EXPECT_TRUE(solve_2n(chain(3, 2), 3).feasible);
    EXPECT_TRUE(solve_2n(Instance::create(0, 1, {}), 0).feasible);
    EXPECT_EQ(min_makespan_2n(chain(3, 2)).makespan, 3);
    EXPECT_EQ(min_makespan_2n(small).makespan, 2);
    EXPECT_EQ(min_makespan_2n(Instance::create(6, 2, {})).makespan, 3);
    EXPECT_EQ(min_makespan_2n(Instance::create(0, 2, {})).makespan, 0);
}

TEST(Solve2n, TablesMatchTheirDefinition) {
    std::mt19937_64 rng(35);
    for (int i = 0; i < 60; ++i) {
        Instance inst = random_instance(rng, 1, 9);
        const int n = inst.job_count();
        const int horizon = n;
        Solve2nResult r = solve_2n(inst, horizon);
        const auto& tab = r.tables;
        for (uint32_t x = 0; x < (1u << n); ++x) {
            JobSet xs = JobSet::from_mask(n, x);
            bool closed = true;
            for (const Arc& a : inst.arcs()) closed = closed && (!(x >> a.to & 1u) || (x >> a.from & 1u));
            EXPECT_EQ(tab.downward_closed.test(x), closed);
            EXPECT_EQ(tab.g.test(x), brute_is_antichain(inst, x) && std::popcount(x) <= inst.machine_count());
            EXPECT_EQ(tab.f[0].test(x), x == 0);
            for (int t = 1; t <= horizon; ++t) {
                // monotone in t, and only closed sets are marked
                if (tab.f[t - 1].test(x)) EXPECT_TRUE(tab.f[t].test(x));
                if (tab.f[t].test(x)) EXPECT_TRUE(closed);
            }
            if (closed && n <= 8 && std::popcount(x) > 0) {
                auto [sub, old_of] = inst.induced(xs);
                const int best = oracle_min_makespan(sub).makespan;
                for (int t = 0; t <= horizon; ++t) EXPECT_EQ(tab.f[t].test(x), best <= t) << "x=" << x << " t=" << t;
            }
        }
    }
}

TEST(Solve2n, AgreesWithOracleAndWitnessesValidate) {
    std::mt19937_64 rng(36);
    for (int i = 0; i < 500; ++i) {
        Instance inst = random_instance(rng, 0, 12);
        const int best = oracle_min_makespan(inst).makespan;
        SolveResult r = min_makespan_2n(inst);
        EXPECT_EQ(r.makespan, best);
        EXPECT_TRUE(naive_valid(inst, r.witness));
        EXPECT_EQ(r.witness.makespan(), r.makespan);
        EXPECT_TRUE(validate_complete(inst, r.witness));
        if (best > 0) EXPECT_FALSE(solve_2n(inst, best - 1).feasible);
    }
}

TEST(Solve2n, ClosedSplitEquivalence) {
    // For Z = pred[Z] inside X and Y = X - Z: X = pred[X] with Y an antichain exactly
    // when every predecessor of a job in Y lies in Z.
    std::mt19937_64 rng(37);
    for (int i = 0; i < 40; ++i) {
        Instance inst = random_instance(rng, 0, 9);
        const int n = inst.job_count();
        std::vector<uint32_t> before(n, 0);
        for (const Arc& a : inst.arcs()) before[a.to] |= 1u << a.from;
        auto closed = [&](uint32_t x) {
            for (uint32_t r = x; r; r &= r - 1)
                if (before[std::countr_zero(r)] & ~x) return false;
            return true;
        };
        for (uint32_t z = 0; z < (1u << n); ++z) {
            if (!closed(z)) continue;
            const uint32_t rest = ((1u << n) - 1) & ~z;
            for (uint32_t y = rest;; y = (y - 1) & rest) {
                const uint32_t x = z | y;
                bool lhs = closed(x) && brute_is_antichain(inst, y);
                bool preds_in_z = true;
                for (uint32_t r = y; r; r &= r - 1) preds_in_z = preds_in_z && !(before[std::countr_zero(r)] & ~z);
                EXPECT_EQ(lhs, preds_in_z);
                if (y == 0) break;
            }
        }
    }
}

TEST(Reconstruct, RejectsUncertifiedSet) {
    FeasibilityBuilder b(chain(2, 1));
    b.extend_to(1);
    EXPECT_THROW(reconstruct_schedule(b.tables(), b.poset(), 0b11, 1), std::logic_error);
}
