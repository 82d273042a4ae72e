#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "preserver/serialize.hpp"

using namespace preserver;

TEST_CASE("g6-lite round trip on random graphs") {
    std::mt19937_64 rng(101);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 32);
        const Graph g = oracle::random_graph(n, rng);
        CHECK(graph_from_g6lite(to_g6lite(g)) == g);
    }
    CHECK(to_g6lite(make_single_edge(3, 1, 2)) == "3:3:1");
    CHECK(to_g6lite(Graph::complete(4)) == "4:6:3f");
    CHECK_THROWS_AS(graph_from_g6lite("5:9:00"), ParseError);   // wrong pair count
    CHECK_THROWS_AS(graph_from_g6lite("3:3:zz"), ParseError);   // bad hex
    CHECK_THROWS_AS(graph_from_g6lite("nonsense"), ParseError);
}

TEST_CASE("graph json round trip") {
    std::mt19937_64 rng(102);
    for (int rep = 0; rep < 100; ++rep) {
        const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 10), rng);
        CHECK(graph_from_json(graph_to_json(g)) == g);
    }
    const Graph g = graph_from_json(json::parse(R"({"n":5,"edges":[[1,2],[3,4]]})"));
    CHECK(g.size() == 2);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(3, 4));
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":3,"edges":[[1,1]]})")), ParseError);
}

TEST_CASE("map json round trip, omitted generators are empty") {
    std::mt19937_64 rng(103);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 4);
        std::vector<Graph> images;
        for (int e = 0; e < pair_count(n); ++e) images.push_back(oracle::random_graph(n, rng));
        const GraphLinearMap map(n, images);
        CHECK(map_from_json(map_to_json(map)) == map);
    }
    const auto sparse = map_from_json(json::parse(R"({"n":3,"images":{"1,2":[[1,3]]}})"));
    CHECK(sparse.image(pair_index(3, 1, 2)) == make_single_edge(3, 1, 3));
    CHECK(sparse.image(pair_index(3, 1, 3)).is_empty());
    CHECK(sparse.image(pair_index(3, 2, 3)).is_empty());
}

TEST_CASE("matrix and tensor json round trips") {
    std::mt19937_64 rng(104);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 4);
        SymMatrix x(n);
        for (int k = 0; k < x.pair_bits(); ++k)
            x.set_upper_entry(k, Rational(static_cast<long long>(rng() % 9), 1 + rng() % 5));
        CHECK(matrix_from_json(matrix_to_json(x)) == x);
    }
    const auto x = matrix_from_json(json::parse(R"({"n":3,"ut":["0","1/2","3"]})"));
    CHECK(x.at(1, 2) == Rational(0));
    CHECK(x.at(1, 3) == Rational(1, 2));
    CHECK(x.at(2, 3) == Rational(3));
    CHECK(x.at(3, 2) == Rational(3));  // symmetric access

    for (const auto& sigma : all_vertex_permutations(3)) {
        const auto tensor = MatrixLinearMap::permutation_similarity(sigma);
        CHECK(matrix_map_from_json(matrix_map_to_json(tensor)) == tensor);
    }
}

TEST_CASE("input sniffing") {
    CHECK(parse_input_text("4:6:3f").graph.has_value());
    CHECK(parse_input_text(R"({"n":3,"edges":[]})").graph.has_value());
    CHECK(parse_input_text(R"({"n":3,"ut":["1","0","1"]})").matrix.has_value());
    CHECK_THROWS_AS(parse_input_text(R"({"n":3})"), ParseError);
    CHECK_THROWS_AS(parse_input_text(""), ParseError);
}

TEST_CASE("csv rows") {
    CHECK(map_csv_header(3) == "g1-2,g1-3,g2-3");
    CHECK(map_csv_row(GraphLinearMap::identity(3)) == "1-2,1-3,2-3");
    std::vector<Graph> images(3, Graph(3));
    images[0] = graph_union(make_single_edge(3, 1, 2), make_single_edge(3, 2, 3));
    CHECK(map_csv_row(GraphLinearMap(3, images)) == "1-2;2-3,-,-");
}
