#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "preserver/matrix.hpp"

using namespace preserver;

namespace {

SymMatrix random_matrix(int n, std::mt19937_64& rng) {
    SymMatrix x(n);
    for (int k = 0; k < x.pair_bits(); ++k)
        x.set_upper_entry(k, Rational(static_cast<long long>(rng() % 5), 1 + rng() % 7));
    return x;
}

MatrixLinearMap random_tensor(int n, std::mt19937_64& rng) {
    const int m = pair_count(n);
    std::vector<Rational> coeffs;
    for (int k = 0; k < m * m; ++k)
        coeffs.emplace_back(static_cast<long long>(rng() % 65), 64);
    return MatrixLinearMap(n, std::move(coeffs));
}

}  // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, 7) * Rational(7, 3) == Rational(1));
    CHECK(Rational(-4, 8).str() == "-1/2");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational::parse("15/4") == Rational(15, 4));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS_AS(Rational::parse("x/2"), ParseError);
}

TEST_CASE("matrix alpha on fixed inputs") {
    CHECK(matrix_alpha(SymMatrix::all_ones_offdiagonal(4)) == 1);
    CHECK(matrix_alpha(SymMatrix::zero(5)) == 5);
    Graph c5(5);
    c5.add_edge(1, 2);
    c5.add_edge(2, 3);
    c5.add_edge(3, 4);
    c5.add_edge(4, 5);
    c5.add_edge(5, 1);
    CHECK(matrix_alpha(adjacency_of(c5)) == 2);
}

TEST_CASE("graph_of and adjacency_of") {
    CHECK(graph_of(SymMatrix::all_ones_offdiagonal(4)) == Graph::complete(4));
    CHECK(graph_of(SymMatrix::zero(3)) == Graph(3));
    SymMatrix x(5);
    x.set(2, 5, Rational(3, 7));
    CHECK(graph_of(x) == make_single_edge(5, 2, 5));
    CHECK(adjacency_of(Graph::complete(3)) == SymMatrix::all_ones_offdiagonal(3));
    CHECK(adjacency_of(Graph(4)) == SymMatrix::zero(4));
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 30; ++rep) {
        const Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 6), rng);
        CHECK(graph_of(adjacency_of(g)) == g);
        CHECK(matrix_alpha(adjacency_of(g)) == independence_number(g));
    }
    CHECK_THROWS_AS(SymMatrix(3).set(1, 1, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(SymMatrix(3).set(1, 2, Rational(-1)), std::invalid_argument);
}

TEST_CASE("applying tensors: identity, scaling, permutation similarity") {
    std::mt19937_64 rng(9);
    const SymMatrix x = random_matrix(4, rng);
    CHECK(apply_matrix_map(MatrixLinearMap::identity(4), x) == x);

    // doubled identity
    std::vector<Rational> coeffs(36, Rational(0));
    for (int e = 0; e < 6; ++e) coeffs[e * 6 + e] = Rational(2);
    const MatrixLinearMap doubled(4, coeffs);
    const SymMatrix j_minus_i = SymMatrix::all_ones_offdiagonal(4);
    SymMatrix two(4);
    for (int k = 0; k < 6; ++k) two.set_upper_entry(k, Rational(2));
    CHECK(apply_matrix_map(doubled, j_minus_i) == two);

    for (const auto& sigma : all_vertex_permutations(4)) {
        const auto tensor = MatrixLinearMap::permutation_similarity(sigma);
        CHECK(apply_matrix_map(tensor, x) == conjugate_by_permutation(x, sigma));
    }
}

TEST_CASE("fixed point of J - I") {
    CHECK(check_fixed_point(MatrixLinearMap::identity(4)));
    std::vector<Rational> coeffs(36, Rational(0));
    for (int e = 0; e < 6; ++e) coeffs[e * 6 + e] = Rational(2);
    CHECK_FALSE(check_fixed_point(MatrixLinearMap(4, coeffs)));
    for (const auto& sigma : all_vertex_permutations(4))
        CHECK(check_fixed_point(MatrixLinearMap::permutation_similarity(sigma)));

    // the fixed point is exactly "every row sums to 1"
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 40; ++rep) {
        const MatrixLinearMap tensor = random_tensor(3, rng);
        bool rows_one = true;
        for (int row = 0; row < 3; ++row) {
            Rational sum(0);
            for (int col = 0; col < 3; ++col) sum += tensor.coeff(row, col);
            rows_one = rows_one && sum == Rational(1);
        }
        CHECK(check_fixed_point(tensor) == rows_one);
    }
}

TEST_CASE("induced graph map reads supports") {
    const auto id = induced_graph_map(MatrixLinearMap::identity(3));
    CHECK(id == GraphLinearMap::identity(3));

    for (const auto& sigma : all_vertex_permutations(4))
        CHECK(induced_graph_map(MatrixLinearMap::permutation_similarity(sigma)) ==
              GraphLinearMap::from_vertex_permutation(sigma));

    // B12 -> B13 + 2 B23, others fixed
    MatrixLinearMap tensor = MatrixLinearMap::identity(3);
    tensor.set_coeff(pair_index(3, 1, 2), pair_index(3, 1, 2), Rational(0));
    tensor.set_coeff(pair_index(3, 1, 3), pair_index(3, 1, 2), Rational(1));
    tensor.set_coeff(pair_index(3, 2, 3), pair_index(3, 1, 2), Rational(2));
    const auto induced = induced_graph_map(tensor);
    CHECK(induced.image(pair_index(3, 1, 2)) ==
          graph_union(make_single_edge(3, 1, 3), make_single_edge(3, 2, 3)));
}

TEST_CASE("sign-pattern functoriality on random rational matrices") {
    std::mt19937_64 rng(33);
    for (int rep = 0; rep < 60; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 4);  // up to n = 5
        const MatrixLinearMap tensor = random_tensor(n, rng);
        const GraphLinearMap induced = induced_graph_map(tensor);
        const SymMatrix x = random_matrix(n, rng);
        const SymMatrix y = apply_matrix_map(tensor, x);
        CHECK(graph_of(y) == apply(induced, graph_of(x)));
        CHECK(matrix_alpha(x) == independence_number(graph_of(x)));
        // the image stays in the cone: nonnegative entries off a zero diagonal
        for (int k = 0; k < y.pair_bits(); ++k) CHECK_FALSE(y.upper_entry(k).is_negative());
    }
}

TEST_CASE("alpha is invariant under permutation similarity on all sign patterns, n <= 4") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& sigma : all_vertex_permutations(n)) {
            const auto tensor = MatrixLinearMap::permutation_similarity(sigma);
            const uint64_t space = uint64_t{1} << pair_count(n);
            for (uint64_t mask = 0; mask < space; ++mask) {
                const SymMatrix x = adjacency_of(Graph::from_mask(n, mask));
                CHECK(matrix_alpha(apply_matrix_map(tensor, x)) == matrix_alpha(x));
            }
        }
}

TEST_CASE("matrix preserver scan lifts graph witnesses") {
    for (const auto& sigma : all_vertex_permutations(4)) {
        const auto tensor = MatrixLinearMap::permutation_similarity(sigma);
        CHECK_FALSE(satisfies_matrix_preserver(tensor, 2).has_value());
        CHECK_FALSE(satisfies_matrix_preserver(tensor, 3).has_value());
    }

    // tensor whose induced graph map swaps the images of (1,2) and (3,4)
    MatrixLinearMap swap = MatrixLinearMap::identity(4);
    const int e12 = pair_index(4, 1, 2), e34 = pair_index(4, 3, 4);
    swap.set_coeff(e12, e12, Rational(0));
    swap.set_coeff(e34, e34, Rational(0));
    swap.set_coeff(e34, e12, Rational(1));
    swap.set_coeff(e12, e34, Rational(1));
    const auto witness = satisfies_matrix_preserver(swap, 2);
    REQUIRE(witness.has_value());
    const bool in_t = matrix_alpha(*witness) == 2;
    const bool out_t = matrix_alpha(apply_matrix_map(swap, *witness)) == 2;
    CHECK(in_t != out_t);

    CHECK_THROWS_AS(satisfies_matrix_preserver(MatrixLinearMap::identity(3), 1),
                    std::invalid_argument);
}

TEST_CASE("permutation similarity recognition") {
    const auto id = is_permutation_similarity(MatrixLinearMap::identity(3));
    REQUIRE(id.has_value());
    CHECK(*id == VertexPermutation::identity(3));

    const VertexPermutation cyc(3, {2, 3, 1});
    const auto found = is_permutation_similarity(MatrixLinearMap::permutation_similarity(cyc));
    REQUIRE(found.has_value());
    // verify P^T X P entrywise on the basis generators
    for (int e = 0; e < 3; ++e) {
        const auto [i, j] = pair_from_index(3, e);
        SymMatrix basis(3);
        basis.set(i, j, Rational(1));
        const SymMatrix image =
            apply_matrix_map(MatrixLinearMap::permutation_similarity(cyc), basis);
        SymMatrix expect(3);
        expect.set((*found)(i), (*found)(j), Rational(1));
        CHECK(image == expect);
    }

    MatrixLinearMap half = MatrixLinearMap::identity(3);
    half.set_coeff(0, 0, Rational(1, 2));
    CHECK_FALSE(is_permutation_similarity(half).has_value());
}

TEST_CASE("hadamard decomposition of single-support tensors") {
    // scale each generator image of a permutation tensor and read R back
    std::mt19937_64 rng(55);
    for (const auto& sigma : all_vertex_permutations(3)) {
        MatrixLinearMap tensor = MatrixLinearMap::permutation_similarity(sigma);
        SymMatrix r(3);
        for (int e = 0; e < 3; ++e) {
            const auto [i, j] = pair_from_index(3, e);
            const Rational c(static_cast<long long>(1 + rng() % 9), 1 + rng() % 4);
            tensor.set_coeff(pair_index(3, sigma(i), sigma(j)), e, c);
            r.set(sigma(i), sigma(j), c);
        }
        const SymMatrix x = random_matrix(3, rng);
        CHECK(apply_matrix_map(tensor, x) == hadamard(r, conjugate_by_permutation(x, sigma)));
    }
}

TEST_CASE("matrix characterization verdict at n=3") {
    const auto verdict = verify_matrix_characterization(3, 2, 50, 7);
    CHECK(verdict.pass);
    CHECK(verdict.similarity_count == 6);
    CHECK(verdict.classifier_lift_pass);
    CHECK(verdict.coefficient_forcing_pass);
    CHECK(verdict.anomalies == 0);
    CHECK(verdict.controls_rejected + verdict.controls_similarity == 50);
    CHECK_THROWS_AS(verify_matrix_characterization(3, 1, 10, 7), std::invalid_argument);
    CHECK_THROWS_AS(verify_matrix_characterization(5, 2, 10, 7), BudgetExceeded);
}
