#include <doctest.h>

#include "oracles.hpp"
#include "sban/coloring.hpp"
#include "sban/generators.hpp"

using namespace sban;

namespace {

bool is_clique(const Graph& g, const std::vector<std::uint32_t>& members) {
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!g.has_edge(members[i], members[j])) return false;
    return true;
}

} // namespace

TEST_SUITE_BEGIN("coloring");

TEST_CASE("colorings are dense assignments") {
    const Coloring c = make_coloring({0, 1, 0, 2});
    CHECK(c.count == 3);
    CHECK(c.color_of(3) == 2);
    CHECK_THROWS_AS(make_coloring({0, 2}), domain_error);   // color 1 unused
    CHECK_THROWS_AS(make_coloring({-1, 0}), domain_error);
    CHECK(make_coloring({}).count == 0); // the zero-node graph's coloring

    const Coloring n = normalize_coloring({5, 5, 2, 7});
    CHECK(n.colors == std::vector<int>{0, 0, 1, 2});
    CHECK(n.count == 3);
}

TEST_CASE("validation separates improper colorings from malformed ones") {
    const Graph path(3, {{0, 1}, {1, 2}});
    CHECK(validate_coloring(path, make_coloring({0, 1, 0})));
    CHECK_FALSE(validate_coloring(path, make_coloring({0, 0, 1})));
    CHECK_THROWS_AS(validate_coloring(path, make_coloring({0, 1})), domain_error);
    Coloring bad = make_coloring({0, 1, 0});
    bad.count = 1; // ids now exceed the declared range
    CHECK_THROWS_AS(validate_coloring(path, bad), domain_error);
}

TEST_CASE("greedy colorings are proper") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = oracle::random_graph(14, 40, seed);
        const Coloring c = greedy_color_by_degree(g);
        CHECK(validate_coloring(g, c));
    }
}

TEST_CASE("chromatic numbers of known graphs") {
    CHECK(exact_chromatic_number(Graph(4, {})).upper == 1);
    CHECK(exact_chromatic_number(Graph(3, {{0, 1}, {1, 2}})).upper == 2);
    CHECK(exact_chromatic_number(Graph(3, {{0, 1}, {1, 2}, {0, 2}})).upper == 3);
    // Odd cycle: clique number 2 but three colors needed, so the search has
    // to climb past the clique bound.
    const ChromaticResult c5 =
        exact_chromatic_number(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}));
    CHECK(c5.exact);
    CHECK(c5.upper == 3);
    CHECK(c5.lower == 3);
    // Petersen graph, another chi = 3 with omega = 2.
    const Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                              {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                              {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    CHECK(exact_chromatic_number(petersen).upper == 3);
}

TEST_CASE("exact search matches the brute-force oracle on random graphs") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const std::uint32_t percent = 20 + 20 * (seed % 4);
        const Graph g = oracle::random_graph(10, percent, seed + 1000);
        const ChromaticResult r = exact_chromatic_number(g);
        REQUIRE(r.exact);
        CHECK(r.upper == oracle::chromatic_number(g));
        CHECK(r.lower == r.upper);
        CHECK(validate_coloring(g, r.witness));
        CHECK(r.witness.count == r.upper);
        CHECK(is_clique(g, r.clique));
    }
}

TEST_CASE("exact search matches the oracle on confusability graphs") {
    for (int n = 2; n <= 4; ++n) {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            const BooleanNetwork f = random_network(n, seed + 60);
            const UpdateSchedule w = random_schedule(n, seed + 70);
            const Graph& g = build_necc_graph(f, w).graph;
            const ChromaticResult r = exact_chromatic_number(g);
            REQUIRE(r.exact);
            CHECK(r.upper == oracle::chromatic_number(g));
        }
    }
}

TEST_CASE("a starved budget degrades to certified bounds") {
    // Dense enough that deciding 4-colorability needs real branching.
    const Graph g = oracle::random_graph(24, 55, 99);
    const ChromaticResult full = exact_chromatic_number(g);
    REQUIRE(full.exact);

    const ChromaticResult starved = exact_chromatic_number(g, 2);
    CHECK_FALSE(starved.exact);
    CHECK(starved.lower <= full.upper);
    CHECK(starved.upper >= full.upper);
    CHECK(validate_coloring(g, starved.witness));
    CHECK(starved.witness.count == starved.upper);
    CHECK(is_clique(g, starved.clique));
}

TEST_CASE("a seed clique is honored and checked") {
    const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const std::vector<std::uint32_t> clique = {0, 1, 2, 3};
    const ChromaticResult r = exact_chromatic_number(k4, default_chromatic_budget, clique);
    CHECK(r.lower == 4);
    CHECK(r.upper == 4);

    const std::vector<std::uint32_t> not_clique = {0, 1, 4};
    CHECK_THROWS_AS(
        exact_chromatic_number(Graph(5, {{0, 1}}), default_chromatic_budget, not_clique),
        domain_error);
}

TEST_CASE("structural clique search is exact on confusability graphs") {
    // Exhaustive at n=2 and sampled beyond; the structural bucket argument,
    // the generic branch and bound, and the plain enumeration oracle must
    // all agree.
    const std::vector<UpdateSchedule> schedules = {
        UpdateSchedule::parallel(2),
        UpdateSchedule(2, {{0}, {1}}),
        UpdateSchedule(2, {{1}, {0}}),
    };
    for (std::uint32_t id = 0; id < 256; ++id) {
        std::vector<Word> table(4);
        for (Word x = 0; x < 4; ++x) table[x] = (id >> (2 * x)) & 3u;
        const BooleanNetwork f(2, std::move(table));
        for (const auto& w : schedules) {
            const Graph& g = build_necc_graph(f, w).graph;
            const CliqueResult structural = max_clique_necc(f, w, g);
            CHECK(structural.size == oracle::max_clique_size(g));
            CHECK(is_clique(g, structural.members));
        }
    }
    for (int n = 3; n <= 5; ++n) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const BooleanNetwork f = random_network(n, seed + 500);
            const UpdateSchedule w = random_schedule(n, seed + 600);
            const Graph& g = build_necc_graph(f, w).graph;
            const CliqueResult structural = max_clique_necc(f, w, g);
            const CliqueResult generic = max_clique_generic(g);
            CHECK(structural.size == generic.size);
            CHECK(structural.size == oracle::max_clique_size(g));
            CHECK(is_clique(g, structural.members));
            CHECK(is_clique(g, generic.members));
        }
    }
}

TEST_CASE("the half-exchange network has the expected clique") {
    const auto [f, w] = swap_network(4);
    const Graph& g = build_necc_graph(f, w).graph;
    const CliqueResult r = max_clique_necc(f, w, g);
    CHECK(r.size == 4);
    CHECK(is_clique(g, r.members));
    // Configurations with the upper half zeroed all collapse to 0000 once
    // the lower half fires, so they form a clique of size 2^(n/2).
    CHECK(is_clique(g, {0, 1, 2, 3}));
}

TEST_CASE("clique numbers never exceed the square-root bound") {
    for (int n = 2; n <= 6; ++n) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const BooleanNetwork f = random_network(n, seed + 900);
            const UpdateSchedule w = random_schedule(n, seed + 901);
            const Graph& g = build_necc_graph(f, w).graph;
            CHECK(max_clique_necc(f, w, g).size <= 1 << (n / 2));
        }
    }
}

TEST_CASE("the generic clique solver has a node cap") {
    CHECK_THROWS_AS(max_clique_generic(Graph(10, {{0, 1}}), 5), resource_error);
}

TEST_SUITE_END();
