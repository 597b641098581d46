#include <doctest.h>

#include <random>
#include <stdexcept>

#include "rainbow/generators.hpp"
#include "rainbow/ham_path.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/rng.hpp"
#include "test_support.hpp"

using namespace rainbow;

TEST_CASE("extension picks the smallest color then vertex at the back first") {
    const GraphSystem sys = gen_complete(4);
    const std::optional<RainbowPath> one = extend_path(sys, RainbowPath{{0}, {}});
    REQUIRE(one.has_value());
    CHECK(one->vertices == std::vector<int>{0, 1});
    CHECK(one->colors == std::vector<int>{0});
}

TEST_CASE("a full path cannot extend") {
    const GraphSystem sys = gen_complete(4);
    const RainbowPath full{{0, 1, 2, 3}, {0, 1, 2}};
    CHECK_FALSE(extend_path(sys, full).has_value());
    CHECK_THROWS_AS(extend_path(sys, RainbowPath{{0, 0}, {1}}), std::invalid_argument);
}

TEST_CASE("extension reports a move exactly when one exists") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 5 + uniform_index(rng, 4);
        const GraphSystem sys =
            gen_random_min_degree(n, uniform_index(rng, n / 2), 300 + trial, 0.1);
        const RainbowPath path =
            testsupport::random_rainbow_path(sys, rng, 2 + uniform_index(rng, n - 1));

        bool movable = false;
        const std::set<int> on_path = testsupport::set_of(path.vertices);
        const std::set<int> used = testsupport::set_of(path.colors);
        for (const int endpoint : {path.vertices.back(), path.vertices.front()})
            for (int c = 0; c < n; ++c) {
                if (used.count(c)) continue;
                for (int v : sys.neighbors(c, endpoint))
                    if (!on_path.count(v)) movable = true;
            }

        const std::optional<RainbowPath> extended = extend_path(sys, path);
        CHECK(extended.has_value() == movable);
        if (extended) {
            CHECK(extended->vertices.size() == path.vertices.size() + 1);
            CHECK(verify_rainbow_path(sys, *extended).ok);
        }
    }
}

TEST_CASE("hamiltonian path on the complete system") {
    const GraphSystem sys = gen_complete(5);
    const std::optional<RainbowPath> path = find_rainbow_hamiltonian_path(sys);
    REQUIRE(path.has_value());
    CHECK(path->vertices.size() == 5);
    CHECK(path->colors.size() == 4);
    CHECK(verify_rainbow_path(sys, *path).ok);
}

TEST_CASE("unbalanced bipartite systems defeat the search and the exhaustive check") {
    for (const int n : {6, 8}) {
        const GraphSystem sys = gen_unbalanced_bipartite(n);
        CHECK_FALSE(find_rainbow_hamiltonian_path(sys).has_value());
        CHECK_FALSE(oracle_hamiltonian_path(sys).has_value());
    }
}

TEST_CASE("search succeeds on seeded instances at the half degree bound") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const int n = 8 + static_cast<int>(seed % 5);
        const GraphSystem sys = gen_random_min_degree(n, n / 2, seed);
        const std::optional<RainbowPath> path = find_rainbow_hamiltonian_path(sys);
        REQUIRE(path.has_value());
        CHECK(static_cast<int>(path->vertices.size()) == n);
        CHECK(verify_rainbow_path(sys, *path).ok);
    }
}

TEST_CASE("path length never shrinks across rounds") {
    for (std::uint64_t seed = 40; seed <= 50; ++seed) {
        const GraphSystem sys = gen_random_min_degree(9, 4, seed);
        std::vector<int> trace;
        const std::optional<RainbowPath> path = find_rainbow_hamiltonian_path(sys, &trace);
        REQUIRE(path.has_value());
        REQUIRE(!trace.empty());
        CHECK(trace.front() == 1);
        CHECK(trace.back() == 9);
        for (std::size_t i = 0; i + 1 < trace.size(); ++i) CHECK(trace[i] <= trace[i + 1]);
    }
}

TEST_CASE("non-square systems are rejected") {
    GraphSystem rect(4, 3);
    CHECK_THROWS_AS(find_rainbow_hamiltonian_path(rect), std::invalid_argument);
}

TEST_CASE("a solved path is never contradicted by the exhaustive search") {
    for (std::uint64_t seed = 60; seed <= 75; ++seed) {
        const int n = 6 + static_cast<int>(seed % 3);
        const GraphSystem sys = gen_random_min_degree(n, 2, seed, 0.05);
        const std::optional<RainbowPath> constructed = find_rainbow_hamiltonian_path(sys);
        if (constructed) {
            CHECK(verify_rainbow_path(sys, *constructed).ok);
            CHECK(oracle_hamiltonian_path(sys).has_value());
        }
    }
}
