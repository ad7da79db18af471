#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "usched/poset.hpp"

using namespace usched;
using namespace usched::testing;

namespace {

JobSet set_of(int n, std::initializer_list<int> jobs) {
    JobSet s(n);
    for (int j : jobs) s.set(j);
    return s;
}

uint32_t mask_of(const JobSet& s) { return static_cast<uint32_t>(s.to_mask()); }

}  // namespace

TEST(PosetQueries, Chain) {
    Instance c = chain(3, 1);
    EXPECT_EQ(sinks(c), set_of(3, {2}));
    EXPECT_EQ(sources(c), set_of(3, {0}));
    EXPECT_EQ(heights(c), (std::vector<int>{2, 1, 0}));
    EXPECT_EQ(height(c), 2);
}

TEST(PosetQueries, Antichain) {
    Instance a = Instance::create(4, 1, {});
    EXPECT_EQ(sinks(a), a.all_jobs());
    EXPECT_EQ(sources(a), a.all_jobs());
    EXPECT_EQ(heights(a), std::vector<int>(4, 0));
}

TEST(PosetQueries, DiamondRestrictedSinks) {
    Instance d = diamond(2);
    EXPECT_EQ(heights(d)[0], 2);
    EXPECT_EQ(sinks(d, set_of(4, {0, 1, 2})), set_of(4, {1, 2}));
    EXPECT_EQ(pred_closure(d, set_of(4, {1})), set_of(4, {0, 1}));
    EXPECT_EQ(succ_of(d, set_of(4, {1})), set_of(4, {3}));
}

TEST(Depth, Examples) {
    Instance c = chain(3, 1);
    EXPECT_EQ(depth_wrt(c, c.empty_set(), 2), 0);
    EXPECT_EQ(depth_wrt(c, set_of(3, {0, 1}), 2), 2);
}

TEST(Depth, MatchesExhaustiveChains) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 150; ++i) {
        Instance inst = random_instance(rng, 1, 12);
        const int n = inst.job_count();
        const uint32_t x = std::uniform_int_distribution<uint32_t>(0, (1u << n) - 1)(rng);
        for (int v = 0; v < n; ++v)
            EXPECT_EQ(depth_wrt(inst, JobSet::from_mask(n, x), v), brute_depth(inst, x & ~(1u << v), v));
    }
}

TEST(Cover, Examples) {
    EXPECT_EQ(min_vertex_cover(chain(4, 1)).cover.count(), 3);
    EXPECT_EQ(min_vertex_cover(Instance::create(5, 1, {})).cover.count(), 0);
    EXPECT_EQ(min_vertex_cover(disjoint_chains(2, 2, 1)).cover.count(), 2);
}

TEST(Cover, CertificateIsMinimumAndConsistent) {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 200; ++i) {
        Instance inst = random_instance(rng, 0, 16);
        const int n = inst.job_count();
        VertexCoverCertificate c = min_vertex_cover(inst);
        EXPECT_EQ(c.cover.count(), brute_min_cover(inst));
        EXPECT_EQ(c.cover.count() + c.witness_antichain.count(), n);
        EXPECT_EQ(c.cover | c.witness_antichain, inst.all_jobs());
        EXPECT_TRUE(brute_is_antichain(inst, mask_of(c.witness_antichain)));
        for (const Arc& a : inst.arcs()) EXPECT_TRUE(c.cover.test(a.from) || c.cover.test(a.to));
        // chains partition the jobs, are ordered, and there are as many as antichain jobs
        EXPECT_EQ(static_cast<int>(c.chains.chains.size()), c.witness_antichain.count());
        std::vector<int> seen(n, 0);
        for (const auto& ch : c.chains.chains) {
            for (std::size_t k = 0; k + 1 < ch.size(); ++k) EXPECT_TRUE(inst.precedes(ch[k], ch[k + 1]));
            for (int v : ch) ++seen[v];
        }
        EXPECT_EQ(seen, std::vector<int>(n, 1));
        // a chain holds at most one job outside the cover
        for (const auto& ch : c.chains.chains) {
            int outside = 0;
            for (int v : ch) outside += !c.cover.test(v);
            EXPECT_LE(outside, 1);
        }
        EXPECT_EQ(min_vertex_cover(inst).cover, c.cover);
    }
}

TEST(Antichains, Examples) {
    EXPECT_EQ(count_antichains(chain(3, 1)), 4u);
    EXPECT_EQ(count_antichains(Instance::create(3, 1, {})), 8u);
    EXPECT_EQ(count_antichains(diamond(1)), 6u);
    EXPECT_EQ(count_antichains(Instance::create(0, 1, {})), 1u);
}

TEST(Antichains, EnumerationIsExactAndDuplicateFree) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        Instance inst = random_instance(rng, 0, 14);
        std::set<uint32_t> seen;
        bool all_antichains = true;
        uint64_t count = enumerate_antichains(inst, [&](const JobSet& s) {
            seen.insert(mask_of(s));
            all_antichains = all_antichains && brute_is_antichain(inst, mask_of(s));
        });
        EXPECT_TRUE(all_antichains);
        EXPECT_EQ(seen.size(), count);
        EXPECT_EQ(count, brute_antichain_count(inst));
        EXPECT_GE(antichain_bound(inst), BigInt(count));
    }
}

TEST(Antichains, StopsWhenVisitorDeclines) {
    int calls = 0;
    enumerate_antichains(Instance::create(5, 1, {}), [&](const JobSet&) { return ++calls < 3; });
    EXPECT_EQ(calls, 3);
}

TEST(AntichainBound, Examples) {
    EXPECT_EQ(antichain_bound(chain(3, 1)), 4);
    EXPECT_EQ(antichain_bound(diamond(1)), 8);
}

TEST(AntichainBound, TightOnEqualChains) {
    for (int k = 1; k <= 4; ++k)
        for (int len = 1; len <= 4; ++len) {
            Instance inst = disjoint_chains(k, len, 1);
            BigInt expected = 1;
            for (int i = 0; i < k; ++i) expected *= len + 1;
            EXPECT_EQ(antichain_bound(inst), expected);
            EXPECT_EQ(BigInt(count_antichains(inst)), expected);
        }
}

TEST(AntichainBound, LargeProductNeedsBigIntegers) {
    // 40 chains of 2 jobs: 3^40 exceeds 64 bits
    BigInt expected = 1;
    for (int i = 0; i < 40; ++i) expected *= 3;
    EXPECT_EQ(antichain_bound(disjoint_chains(40, 2, 1)), expected);
}
