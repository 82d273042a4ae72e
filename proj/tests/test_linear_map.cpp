#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "preserver/errors.hpp"
#include "preserver/linear_map.hpp"

using namespace preserver;

namespace {

GraphLinearMap constant_map(int n, const Graph& image) {
    return GraphLinearMap(n, std::vector<Graph>(pair_count(n), image));
}

// n=4 map swapping the images of (1,2) and (3,4), fixing the rest.
GraphLinearMap edge_swap_12_34() {
    GraphLinearMap id = GraphLinearMap::identity(4);
    std::vector<Graph> images = id.images();
    std::swap(images[pair_index(4, 1, 2)], images[pair_index(4, 3, 4)]);
    return GraphLinearMap(4, std::move(images));
}

GraphLinearMap random_map(int n, std::mt19937_64& rng) {
    std::vector<Graph> images;
    for (int e = 0; e < pair_count(n); ++e) images.push_back(oracle::random_graph(n, rng));
    return GraphLinearMap(n, std::move(images));
}

}  // namespace

TEST_CASE("apply: identity, absorbing constant, relabeling") {
    std::mt19937_64 rng(5);
    const GraphLinearMap id = GraphLinearMap::identity(4);
    for (int rep = 0; rep < 20; ++rep) {
        const Graph g = oracle::random_graph(4, rng);
        CHECK(apply(id, g) == g);
    }
    const GraphLinearMap absorb = constant_map(4, Graph::complete(4));
    CHECK(apply(absorb, make_single_edge(4, 2, 3)) == Graph::complete(4));
    CHECK(apply(absorb, Graph(4)) == Graph(4));  // empty maps to empty

    const VertexPermutation swap12(3, {2, 1, 3});
    const GraphLinearMap vp = GraphLinearMap::from_vertex_permutation(swap12);
    CHECK(apply(vp, make_single_edge(3, 1, 3)) == make_single_edge(3, 2, 3));
}

TEST_CASE("apply distributes over union and is monotone") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 80; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const GraphLinearMap map = random_map(n, rng);
        const Graph g = oracle::random_graph(n, rng);
        const Graph h = oracle::random_graph(n, rng);
        CHECK(apply(map, graph_union(g, h)) == graph_union(apply(map, g), apply(map, h)));
        const Graph gh = graph_union(g, h);  // g subgraph of gh
        const Graph img_small = apply(map, g);
        const Graph img_big = apply(map, gh);
        CHECK(graph_union(img_small, img_big) == img_big);  // edge containment
    }
}

TEST_CASE("is_complete") {
    CHECK(is_complete(GraphLinearMap::identity(4)));
    CHECK_FALSE(is_complete(constant_map(3, make_single_edge(3, 1, 2))));
    for (const auto& sigma : all_vertex_permutations(4))
        CHECK(is_complete(GraphLinearMap::from_vertex_permutation(sigma)));
}

TEST_CASE("vertex permutation recognition") {
    const auto id = is_vertex_permutation(GraphLinearMap::identity(3));
    REQUIRE(id.has_value());
    CHECK(*id == VertexPermutation::identity(3));

    // G12 -> G13, G13 -> G12, G23 -> G23 is the transposition (2 3)
    std::vector<Graph> images(3, Graph(3));
    images[pair_index(3, 1, 2)] = make_single_edge(3, 1, 3);
    images[pair_index(3, 1, 3)] = make_single_edge(3, 1, 2);
    images[pair_index(3, 2, 3)] = make_single_edge(3, 2, 3);
    const auto swapped = is_vertex_permutation(GraphLinearMap(3, images));
    REQUIRE(swapped.has_value());
    CHECK(*swapped == VertexPermutation(3, {1, 3, 2}));

    // swapping only G12 and G34 on n=4 is no vertex permutation
    CHECK_FALSE(is_vertex_permutation(edge_swap_12_34()).has_value());

    // round trip over every permutation
    for (int n = 2; n <= 5; ++n)
        for (const auto& sigma : all_vertex_permutations(n)) {
            const auto found =
                is_vertex_permutation(GraphLinearMap::from_vertex_permutation(sigma));
            REQUIRE(found.has_value());
            CHECK(GraphLinearMap::from_vertex_permutation(*found) ==
                  GraphLinearMap::from_vertex_permutation(sigma));
        }
}

TEST_CASE("edge permutation recognition") {
    for (const auto& sigma : all_vertex_permutations(4))
        CHECK(is_edge_permutation(GraphLinearMap::from_vertex_permutation(sigma)));
    CHECK(is_edge_permutation(edge_swap_12_34()));
    GraphLinearMap id = GraphLinearMap::identity(4);
    std::vector<Graph> images = id.images();
    images[0] = graph_union(make_single_edge(4, 1, 2), make_single_edge(4, 1, 3));
    CHECK_FALSE(is_edge_permutation(GraphLinearMap(4, images)));
}

TEST_CASE("vertex permutations act by relabeling, exhaustively for n <= 4") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& sigma : all_vertex_permutations(n)) {
            const GraphLinearMap map = GraphLinearMap::from_vertex_permutation(sigma);
            const uint64_t space = uint64_t{1} << pair_count(n);
            for (uint64_t mask = 0; mask < space; ++mask) {
                const Graph g = Graph::from_mask(n, mask);
                CHECK(apply(map, g) == relabel(g, sigma));
            }
        }
}

TEST_CASE("preserver condition: vertex permutations never yield a counterexample (n <= 5)") {
    for (int n = 2; n <= 5; ++n) {
        const AlphaTable table = build_alpha_table(n, PreserverMode::independence);
        ScanOptions options;
        options.table = &table;
        for (const auto& sigma : all_vertex_permutations(n)) {
            const GraphLinearMap map = GraphLinearMap::from_vertex_permutation(sigma);
            for (int t = 1; t <= n; ++t)
                CHECK_FALSE(satisfies_preserver_condition(map, t, PreserverMode::independence,
                                                          options)
                                .has_value());
        }
    }
}

TEST_CASE("preserver condition: the n=4 edge swap fails at t=2 with a witness") {
    const auto cex = satisfies_preserver_condition(edge_swap_12_34(), 2);
    REQUIRE(cex.has_value());
    // confirm the witness by direct evaluation
    const Graph& g = cex->graph;
    const Graph img = apply(edge_swap_12_34(), g);
    const bool in_t = independence_number(g) == 2;
    const bool out_t = independence_number(img) == 2;
    CHECK(in_t != out_t);
    if (in_t)
        CHECK(cex->direction == ViolationDirection::input_at_threshold_image_not);
    else
        CHECK(cex->direction == ViolationDirection::image_at_threshold_input_not);
}

TEST_CASE("preserver condition: every n=3 edge permutation passes at t=1") {
    // bijections of the 3 edges of K_3
    std::vector<int> target{0, 1, 2};
    do {
        std::vector<uint64_t> masks(3);
        for (int e = 0; e < 3; ++e) masks[e] = uint64_t{1} << target[e];
        const GraphLinearMap map = GraphLinearMap::from_masks(3, masks);
        CHECK_FALSE(satisfies_preserver_condition(map, 1).has_value());
    } while (std::next_permutation(target.begin(), target.end()));
}

TEST_CASE("preserver scan rejects oversized spaces") {
    ScanOptions tiny;
    tiny.max_graphs = 32;
    CHECK_THROWS_AS(
        satisfies_preserver_condition(GraphLinearMap::identity(4), 2,
                                      PreserverMode::independence, tiny),
        BudgetExceeded);
}

TEST_CASE("clique mode scans omega instead of alpha") {
    // identity preserves omega trivially; the absorbing map does not
    CHECK_FALSE(satisfies_preserver_condition(GraphLinearMap::identity(4), 2,
                                              PreserverMode::clique)
                    .has_value());
    const auto cex =
        satisfies_preserver_condition(constant_map(4, Graph::complete(4)), 2,
                                      PreserverMode::clique);
    REQUIRE(cex.has_value());
    CHECK(clique_number(cex->graph) == 2);  // omega(K_4) = 4 != 2 on the image side
}

TEST_CASE("structural predicates") {
    for (const auto& sigma : all_vertex_permutations(4)) {
        const auto p = structural_predicates(GraphLinearMap::from_vertex_permutation(sigma));
        CHECK(p.all_images_nonempty);
        CHECK(p.no_image_has_separate_edges);
        CHECK(p.all_images_single_edge);
        CHECK(p.adjacent_generators_map_to_adjacent_edges);
        CHECK(p.star_alignment);
    }

    GraphLinearMap id = GraphLinearMap::identity(4);
    std::vector<Graph> images = id.images();
    images[pair_index(4, 1, 2)] = Graph(4);
    CHECK_FALSE(structural_predicates(GraphLinearMap(4, images)).all_images_nonempty);

    images = id.images();
    images[pair_index(4, 1, 2)] =
        graph_union(make_single_edge(4, 1, 2), make_single_edge(4, 3, 4));
    const auto p = structural_predicates(GraphLinearMap(4, images));
    CHECK_FALSE(p.no_image_has_separate_edges);
    CHECK_FALSE(p.all_images_single_edge);

    // the n=4 edge swap has single-edge images but breaks star alignment
    const auto q = structural_predicates(edge_swap_12_34());
    CHECK(q.all_images_single_edge);
    CHECK_FALSE(q.star_alignment);
}
