#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "preserver/errors.hpp"
#include "preserver/lemma_suites.hpp"

using namespace preserver;

TEST_CASE("suite engine agrees with the public enumeration path") {
    std::mt19937_64 rng(77);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Graph g = oracle::random_graph(n, rng);
        const auto adj = detail::adjacency_masks(g);
        const auto engine = detail::alpha_and_common(adj, n);
        CHECK(engine.alpha == independence_number(g));
        CHECK(engine.common == common_vertices_of_maximum_independent_sets(g).mask());
    }
}

TEST_CASE("common-vertex bound suite passes at small orders") {
    for (int n = 1; n <= 6; ++n) {
        const auto res = common_vertex_bound_suite(n, 2);
        CHECK(res.pass);
        CHECK(res.cases_checked == (uint64_t{1} << pair_count(n)));
    }
    CHECK_THROWS_AS(common_vertex_bound_suite(8), BudgetExceeded);
}

TEST_CASE("union alpha bound suite passes at small orders") {
    for (int n = 1; n <= 4; ++n) {
        const auto res = union_alpha_bound_suite(n, 2);
        CHECK(res.pass);
        const uint64_t space = uint64_t{1} << pair_count(n);
        CHECK(res.cases_checked == space * space);
    }
    CHECK_THROWS_AS(union_alpha_bound_suite(6), BudgetExceeded);

    const auto random_tier = union_alpha_bound_random_suite(8, 2000, 42);
    CHECK(random_tier.pass);
    CHECK(random_tier.cases_checked == 2000);
}

TEST_CASE("edge addition suite passes at small orders") {
    for (int n = 1; n <= 5; ++n) {
        const auto res = edge_addition_alpha_suite(n, 2);
        CHECK(res.pass);
    }
    CHECK_THROWS_AS(edge_addition_alpha_suite(7), BudgetExceeded);
}

TEST_CASE("suites are deterministic across thread counts") {
    const auto a = common_vertex_bound_suite(5, 1);
    const auto b = common_vertex_bound_suite(5, 4);
    CHECK(a.pass == b.pass);
    CHECK(a.cases_checked == b.cases_checked);
    CHECK(a.hypothesis_cases == b.hypothesis_cases);
}
