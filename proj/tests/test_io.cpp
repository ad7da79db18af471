#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "support.hpp"
#include "usched/bench.hpp"
#include "usched/errors.hpp"
#include "usched/generators.hpp"
#include "usched/io.hpp"
#include "usched/oracle.hpp"

using namespace usched;
using namespace usched::testing;

namespace {

int parse_error_line(const std::string& text) {
    try {
        parse_instance_string(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST(Parse, ThreeChain) {
    Instance inst = parse_instance_string("p usched 3 1\na 1 2\na 2 3\n");
    EXPECT_EQ(inst, chain(3, 1));
    EXPECT_TRUE(inst.precedes(0, 2));
    EXPECT_FALSE(inst.deadline().has_value());
}

TEST(Parse, CommentsDeadlineAndBlankLines) {
    Instance inst = parse_instance_string("c hello\n\np usched 2 4 7\nc more\na 2 1\n");
    EXPECT_EQ(inst.machine_count(), 4);
    EXPECT_EQ(inst.deadline(), 7);
    EXPECT_TRUE(inst.precedes(1, 0));
}

TEST(Parse, RejectsMalformedLinesWithTheirNumbers) {
    EXPECT_EQ(parse_error_line("p usched 3 1\na 1 1\n"), 2);
    EXPECT_EQ(parse_error_line("p usched 3 1\na 1 4\n"), 2);
    EXPECT_EQ(parse_error_line("a 1 2\np usched 3 1\n"), 1);
    EXPECT_EQ(parse_error_line("p usched x 1\n"), 1);
    EXPECT_EQ(parse_error_line("p usched 3 0\n"), 1);
    EXPECT_EQ(parse_error_line("p usched 3 1\np usched 3 1\n"), 2);
    EXPECT_EQ(parse_error_line("p usched 3 1\nq 1 2\n"), 2);
    EXPECT_GT(parse_error_line("p usched 3 1\na 1 2\na 2 3\na 3 1\n"), 0);
    EXPECT_GT(parse_error_line(""), -1);
}

TEST(Emit, RoundTripsNormalizedInstances) {
    std::mt19937_64 rng(81);
    auto dir = std::filesystem::temp_directory_path() / "usched_roundtrip";
    std::filesystem::create_directories(dir);
    for (int i = 0; i < 50; ++i) {
        Instance inst = random_instance(rng, 0, 15);
        if (i % 3 == 0) inst = inst.with_deadline(i);
        auto path = dir / ("case" + std::to_string(i) + ".txt");
        emit_instance_file(inst, path);
        Instance back = parse_instance_file(path);
        EXPECT_EQ(back, inst);
        EXPECT_EQ(emit_instance_string(back), emit_instance_string(inst));
    }
    std::filesystem::remove_all(dir);
}

TEST(Emit, UnclosedInputIsClosedOnLoad) {
    Instance inst = parse_instance_string("p usched 3 2\na 1 2\na 2 3\n");
    EXPECT_EQ(emit_instance_string(inst), "p usched 3 2\na 1 2\na 1 3\na 2 3\n");
}

TEST(ScheduleText, RoundTrips) {
    Schedule s{{{0, 2}, {1}, {}}};
    std::ostringstream out;
    write_schedule(s, out);
    EXPECT_EQ(out.str(), "1: 1 3\n2: 2\n3:\n");
    std::istringstream in(out.str());
    EXPECT_EQ(parse_schedule(in), s);
}

TEST(GenRandom, DensityAndLayerExtremes) {
    EXPECT_EQ(gen_random(10, 2, 0.0, 4, 1).arc_count(), 0u);
    EXPECT_EQ(gen_random(10, 2, 1.0, 1, 1).arc_count(), 0u);
    Instance a = gen_random(12, 3, 0.4, 4, 99);
    EXPECT_EQ(a, gen_random(12, 3, 0.4, 4, 99));
    EXPECT_NE(emit_instance_string(a), emit_instance_string(gen_random(12, 3, 0.4, 4, 100)));
}

TEST(Dks, TriangleArithmetic) {
    DksInstance tri{3, {{0, 1}, {1, 2}, {0, 2}}, 2, 3, 3};
    Instance inst = reduce_dks(tri);
    EXPECT_EQ(inst.machine_count(), 13);
    EXPECT_EQ(inst.job_count(), 39);
    EXPECT_EQ(inst.deadline(), 3);
    EXPECT_EQ(densest_subgraph_edges(tri), 3);
    EXPECT_TRUE(oracle_feasible(inst, 3).has_value());

    tri.ell = 4;
    EXPECT_FALSE(oracle_feasible(reduce_dks(tri), 3).has_value());
}

TEST(Dks, PathOnThreeVertices) {
    DksInstance path{3, {{0, 1}, {1, 2}}, 2, 2, 1};
    Instance inst = reduce_dks(path);
    EXPECT_EQ(inst.job_count(), 3 * inst.machine_count());
    EXPECT_TRUE(oracle_feasible(inst, 3).has_value());
}

TEST(Dks, RejectsInputsOutsideTheReduction) {
    EXPECT_THROW(reduce_dks({3, {{0, 1}}, 2, 2, 1}), InstanceError);                // isolated vertex
    EXPECT_THROW(reduce_dks({3, {{0, 1}, {1, 2}, {0, 2}}, 1, 2, 1}), InstanceError);  // degree above delta
    EXPECT_THROW(reduce_dks({2, {{0, 0}}, 2, 1, 0}), InstanceError);
    EXPECT_THROW(reduce_dks({2, {{0, 1}}, 1, 2, 20}), InstanceError);  // negative filler layer
}

TEST(Dks, GeneratedGraphsHaveThreeLayersOfM) {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        DksInstance d = gen_random_dks(6, 3, 3, 2, seed);
        check_dks(d);
        Instance inst = reduce_dks(d);
        const int m = inst.machine_count();
        EXPECT_EQ(m, 2 * 3 * 6 + 1);
        EXPECT_EQ(inst.job_count(), 3 * m);
        std::ostringstream out;
        emit_dks(d, out);
        std::istringstream in(out.str());
        DksInstance back = parse_dks(in);
        EXPECT_EQ(back.edges, d.edges);
        EXPECT_EQ(back.vertices, d.vertices);
    }
}

TEST(Bench, EmptySuiteIsHeaderOnly) {
    SuiteConfig c = parse_suite_config(R"({"kind": "empty"})");
    std::ostringstream out;
    write_csv(run_bench(c), out);
    EXPECT_EQ(out.str(), std::string(kBenchCsvHeader) + "\n");
}

TEST(Bench, CrossCheckSuiteAgrees) {
    SuiteConfig c = parse_suite_config(R"({"kind": "random", "count": 40, "n_max": 10, "oracle": true,
                                           "all_strategies": true, "seed": 5})");
    auto rows = run_bench(c);
    ASSERT_EQ(rows.size(), 40u);
    for (const auto& r : rows) EXPECT_EQ(r.oracle_agrees, "true") << r.id << " " << r.note;
    auto again = run_bench(c);
    for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i].makespan, again[i].makespan);
}

TEST(Bench, ConfigRoundTripsAndRejectsUnknownKinds) {
    SuiteConfig c = parse_suite_config(R"({"kind": "scaling", "n_min": 3, "n_max": 5, "strategy": "2n"})");
    SuiteConfig back = parse_suite_config(suite_config_json(c));
    EXPECT_EQ(back.kind, "scaling");
    EXPECT_EQ(back.strategy, StrategyKind::subset_2n);
    EXPECT_EQ(generate_suite(back).size(), 3u);
    EXPECT_THROW(parse_suite_config(R"({"kind": "nope"})"), std::invalid_argument);
}
