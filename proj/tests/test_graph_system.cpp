#include <doctest.h>

#include <random>
#include <stdexcept>

#include "rainbow/generators.hpp"
#include "rainbow/graph_system.hpp"
#include "test_support.hpp"

using namespace rainbow;
using testsupport::set_of;

TEST_CASE("single edge is symmetric and isolated") {
    const std::vector<EdgeTriple> edges{{0, 0, 1}};
    const GraphSystem sys = build_system(3, edges);
    CHECK(sys.adjacent(0, 0, 1));
    CHECK(sys.adjacent(0, 1, 0));
    CHECK_FALSE(sys.adjacent(0, 0, 2));
    CHECK_FALSE(sys.adjacent(1, 0, 1));
    CHECK(sys.edge_count() == 1);
}

TEST_CASE("build rejects bad triples with their index") {
    const std::vector<EdgeTriple> self_loop{{0, 1, 1}};
    CHECK_THROWS_WITH_AS(build_system(2, self_loop),
                         doctest::Contains("edge 0"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_system(2, self_loop),
                         doctest::Contains("self-loop"), std::invalid_argument);
    const std::vector<EdgeTriple> out_of_range{{0, 0, 1}, {5, 0, 1}};
    CHECK_THROWS_WITH_AS(build_system(2, out_of_range),
                         doctest::Contains("edge 1"), std::invalid_argument);
}

TEST_CASE("duplicate insertion is idempotent") {
    GraphSystem sys(4, 4);
    sys.add_edge(2, 0, 3);
    sys.add_edge(2, 3, 0);
    sys.add_edge(2, 0, 3);
    CHECK(sys.edge_count() == 1);
    CHECK(sys.color_degree(2, 0) == 1);
}

TEST_CASE("neighbors are ascending") {
    const GraphSystem complete = gen_complete(4);
    CHECK(complete.neighbors(0, 0) == std::vector<int>{1, 2, 3});
    const GraphSystem bipartite = gen_unbalanced_bipartite(6);
    CHECK(bipartite.neighbors(0, 0) == std::vector<int>{2, 3, 4, 5});
    GraphSystem empty(3, 3);
    CHECK(empty.neighbors(1, 1).empty());
}

TEST_CASE("degrees on the complete system") {
    const GraphSystem sys = gen_complete(5);
    CHECK(sys.color_degree(2, 0) == 4);
    for (int c = 0; c < 5; ++c) CHECK(sys.min_color_degree(c) == 4);
    const std::vector<int> within{1, 2};
    CHECK(sys.color_degree(2, 0, within) == 2);
    CHECK(sys.color_degree(2, 1, within) == 1);
}

TEST_CASE("restricted degree recount on a random instance") {
    const GraphSystem sys = gen_random_min_degree(9, 4, 71);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const int c = uniform_index(rng, 9);
        const int v = uniform_index(rng, 9);
        std::vector<int> within;
        for (int u = 0; u < 9; ++u)
            if (rng() & 1) within.push_back(u);
        int expected = 0;
        for (int u : within)
            if (u != v && sys.adjacent(c, v, u)) ++expected;
        CHECK(sys.color_degree(c, v, within) == expected);
        CHECK(sys.color_degree(c, v) == static_cast<int>(sys.neighbors(c, v).size()));
    }
}

TEST_CASE("colors_between matches adjacency") {
    const GraphSystem complete = gen_complete(3);
    CHECK(complete.colors_between(0, 1) == std::vector<int>{0, 1, 2});
    const std::vector<EdgeTriple> edges{{1, 0, 1}};
    const GraphSystem sparse = build_system(3, edges);
    CHECK(sparse.colors_between(0, 2).empty());
    CHECK(sparse.colors_between(0, 1) == std::vector<int>{1});
    CHECK_THROWS_AS(sparse.colors_between(1, 1), std::invalid_argument);
}

TEST_CASE("bipartite minimum degrees") {
    const GraphSystem balanced = gen_balanced_bipartite(6);
    for (int c = 0; c < 6; ++c) CHECK(balanced.min_color_degree(c) == 3);
    const GraphSystem unbalanced = gen_unbalanced_bipartite(6);
    for (int c = 0; c < 6; ++c) CHECK(unbalanced.min_color_degree(c) == 2);
}

TEST_CASE("verifier accepts a rainbow cycle on the complete system") {
    const GraphSystem sys = gen_complete(4);
    const RainbowCycle cycle{{0, 1, 2, 3}, {0, 1, 2, 3}};
    CHECK(verify_rainbow_cycle(sys, cycle).ok);
}

TEST_CASE("verifier reports the first violation") {
    const GraphSystem sys = gen_complete(4);

    const RainbowCycle repeated_color{{0, 1, 2, 3}, {0, 1, 0, 2}};
    const Verdict v1 = verify_rainbow_cycle(sys, repeated_color);
    CHECK_FALSE(v1.ok);
    CHECK(v1.violation.find("duplicate color 0") != std::string::npos);

    std::vector<EdgeTriple> almost;
    for (int c = 0; c < 4; ++c)
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v)
                if (!(c == 3 && u == 0 && v == 3)) almost.push_back({c, u, v});
    const GraphSystem missing = build_system(4, almost);
    const RainbowCycle needs_missing_edge{{0, 1, 2, 3}, {0, 1, 2, 3}};
    const Verdict v2 = verify_rainbow_cycle(missing, needs_missing_edge);
    CHECK_FALSE(v2.ok);
    CHECK(v2.violation.find("missing edge at index 3") != std::string::npos);

    const RainbowPath bad_range{{0, 9}, {0}};
    const Verdict v3 = verify_rainbow_path(sys, bad_range);
    CHECK_FALSE(v3.ok);
    CHECK(v3.violation.find("vertex id out of range at index 1") != std::string::npos);

    const RainbowPath repeated_vertex{{0, 1, 0}, {0, 1}};
    const Verdict v4 = verify_rainbow_path(sys, repeated_vertex);
    CHECK_FALSE(v4.ok);
    CHECK(v4.violation.find("duplicate vertex 0") != std::string::npos);

    const RainbowCycle short_cycle{{0, 1}, {0, 1}};
    CHECK_FALSE(verify_rainbow_cycle(sys, short_cycle).ok);

    const RainbowPath mismatched{{0, 1, 2}, {0}};
    const Verdict v5 = verify_rainbow_path(sys, mismatched);
    CHECK_FALSE(v5.ok);
    CHECK(v5.violation.find("color count mismatch") != std::string::npos);
}

TEST_CASE("single vertex path verifies") {
    const GraphSystem sys = gen_complete(3);
    CHECK(verify_rainbow_path(sys, RainbowPath{{2}, {}}).ok);
    CHECK_FALSE(verify_rainbow_path(sys, RainbowPath{{}, {}}).ok);
}

TEST_CASE("induced subsystem keeps exactly the chosen edges") {
    const GraphSystem sys = gen_complete(5);

    SUBCASE("keeping everything is the identity") {
        const std::vector<int> all{0, 1, 2, 3, 4};
        const Subsystem sub = induced_subsystem(sys, all, all);
        CHECK(sub.system.vertex_count() == 5);
        CHECK(sub.system.color_count() == 5);
        CHECK(sub.system.edge_count() == sys.edge_count());
        CHECK(sub.vertex_to_parent == all);
    }

    SUBCASE("dropping the last vertex and color matches the smaller complete system") {
        const std::vector<int> keep{0, 1, 2, 3};
        const Subsystem sub = induced_subsystem(sys, keep, keep);
        const GraphSystem expected = gen_complete(4);
        CHECK(sub.system.edges().size() == expected.edges().size());
    }

    SUBCASE("edge recount on a random instance") {
        const GraphSystem random = gen_random_min_degree(10, 4, 913);
        const std::vector<int> keep_v{0, 2, 3, 7, 9};
        const std::vector<int> keep_c{1, 4, 5};
        const Subsystem sub = induced_subsystem(random, keep_v, keep_c);
        CHECK(sub.vertex_to_parent == keep_v);
        CHECK(sub.color_to_parent == keep_c);
        std::size_t expected = 0;
        for (int c : keep_c)
            for (std::size_t i = 0; i < keep_v.size(); ++i)
                for (std::size_t j = i + 1; j < keep_v.size(); ++j)
                    if (random.adjacent(c, keep_v[i], keep_v[j])) ++expected;
        CHECK(sub.system.edge_count() == expected);
        for (int c = 0; c < 3; ++c)
            for (int u = 0; u < 5; ++u)
                for (int v = 0; v < 5; ++v)
                    if (u != v)
                        CHECK(sub.system.adjacent(c, u, v)
                              == random.adjacent(keep_c[c], keep_v[u], keep_v[v]));
    }

    SUBCASE("duplicates are collapsed and empty sets rejected") {
        const std::vector<int> dup_v{1, 1, 3};
        const std::vector<int> dup_c{2, 2};
        const Subsystem sub = induced_subsystem(sys, dup_v, dup_c);
        CHECK(sub.vertex_to_parent == std::vector<int>{1, 3});
        CHECK(sub.color_to_parent == std::vector<int>{2});
        CHECK_THROWS_AS(induced_subsystem(sys, std::vector<int>{}, dup_c),
                        std::invalid_argument);
    }
}

TEST_CASE("lifting certificates back to the parent") {
    const GraphSystem sys = gen_complete(5);
    const std::vector<int> keep_v{0, 2, 4};
    const std::vector<int> keep_c{1, 3};
    const Subsystem sub = induced_subsystem(sys, keep_v, keep_c);
    const RainbowPath inner{{0, 1, 2}, {0, 1}};
    REQUIRE(verify_rainbow_path(sub.system, inner).ok);
    const RainbowPath lifted = lift_path(sub, inner);
    CHECK(lifted.vertices == std::vector<int>{0, 2, 4});
    CHECK(lifted.colors == std::vector<int>{1, 3});
    CHECK(verify_rainbow_path(sys, lifted).ok);

    const std::vector<int> keep3{0, 1, 2};
    const Subsystem sub3 = induced_subsystem(sys, std::vector<int>{1, 2, 4}, keep3);
    const RainbowCycle inner_cycle{{0, 1, 2}, {0, 1, 2}};
    REQUIRE(verify_rainbow_cycle(sub3.system, inner_cycle).ok);
    const RainbowCycle lifted_cycle = lift_cycle(sub3, inner_cycle);
    CHECK(lifted_cycle.vertices == std::vector<int>{1, 2, 4});
    CHECK(verify_rainbow_cycle(sys, lifted_cycle).ok);

    CHECK_THROWS_AS(lift_path(sub, RainbowPath{{0, 7}, {0}}), std::invalid_argument);
}

TEST_CASE("edge list round-trips through build_system") {
    const GraphSystem original = gen_random_min_degree(8, 3, 4242);
    const std::vector<EdgeTriple> edges = original.edges();
    const GraphSystem rebuilt = build_system(8, edges);
    CHECK(rebuilt.edge_count() == original.edge_count());
    for (int c = 0; c < 8; ++c)
        for (int u = 0; u < 8; ++u)
            for (int v = 0; v < 8; ++v)
                if (u != v) CHECK(rebuilt.adjacent(c, u, v) == original.adjacent(c, u, v));
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const auto key = [](const EdgeTriple& e) { return std::tuple(e.color, e.u, e.v); };
        CHECK(key(edges[i]) < key(edges[i + 1]));
        CHECK(edges[i].u < edges[i].v);
    }
}

TEST_CASE("colors_between agrees with neighbors membership") {
    const GraphSystem sys = gen_random_min_degree(7, 2, 99);
    for (int u = 0; u < 7; ++u)
        for (int v = 0; v < 7; ++v) {
            if (u == v) continue;
            const std::set<int> between = set_of(sys.colors_between(u, v));
            for (int c = 0; c < 7; ++c) {
                const std::vector<int> nb = sys.neighbors(c, u);
                const bool listed = std::find(nb.begin(), nb.end(), v) != nb.end();
                CHECK(listed == (between.count(c) > 0));
            }
        }
}
