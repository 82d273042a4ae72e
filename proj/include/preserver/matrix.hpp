#pragma once

// Nonnegative symmetric zero-trace matrices with exact rational entries,
// linear maps on them given by nonnegative coefficient tensors over the
// off-diagonal generator basis, and the reduction of the matrix
// preserver question to the graph one through sign patterns.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "preserver/graph.hpp"
#include "preserver/linear_map.hpp"
#include "preserver/rational.hpp"

namespace preserver {

// Strict upper triangle in canonical pair order; the diagonal is never
// stored, so the zero trace is structural.
class SymMatrix {
public:
    explicit SymMatrix(int n);
    static SymMatrix zero(int n) { return SymMatrix(n); }
    static SymMatrix all_ones_offdiagonal(int n);  // J - I

    int order() const { return n_; }
    int pair_bits() const { return static_cast<int>(upper_.size()); }
    Rational at(int i, int j) const;  // at(i,i) = 0
    void set(int i, int j, const Rational& value);
    const Rational& upper_entry(int pair_idx) const { return upper_[pair_idx]; }
    void set_upper_entry(int pair_idx, const Rational& value);

    friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
        return a.n_ == b.n_ && a.upper_ == b.upper_;
    }
    friend bool operator!=(const SymMatrix& a, const SymMatrix& b) { return !(a == b); }
    friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);

private:
    int n_;
    std::vector<Rational> upper_;
};

// Column e holds the image of the generator E_ij + E_ji in the generator
// basis; all coefficients are nonnegative, so the cone is preserved by
// construction.
class MatrixLinearMap {
public:
    MatrixLinearMap(int n, std::vector<Rational> coeffs);  // m*m row-major
    static MatrixLinearMap identity(int n);
    static MatrixLinearMap permutation_similarity(const VertexPermutation& sigma);

    int order() const { return n_; }
    int generator_count() const { return m_; }
    const Rational& coeff(int out_gen, int in_gen) const { return coeffs_[out_gen * m_ + in_gen]; }
    void set_coeff(int out_gen, int in_gen, const Rational& value);

    friend bool operator==(const MatrixLinearMap& a, const MatrixLinearMap& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }

private:
    int n_;
    int m_;
    std::vector<Rational> coeffs_;
};

SymMatrix apply_matrix_map(const MatrixLinearMap& map, const SymMatrix& x);

// Edge (i,j) present iff the entry is nonzero (exact test).
Graph graph_of(const SymMatrix& a);
// 0/1 adjacency matrix; graph_of(adjacency_of(g)) = g.
SymMatrix adjacency_of(const Graph& g);
// Maximum order of a zero principal submatrix.
int matrix_alpha(const SymMatrix& a);

// The graph map e -> graph_of(phi(A(G_e))). Nonnegative coefficients make
// the sign pattern of phi(X) depend only on the sign pattern of X; this
// union-compatibility is re-verified on all generator pairs.
GraphLinearMap induced_graph_map(const MatrixLinearMap& map);

// phi(J - I) = J - I.
bool check_fixed_point(const MatrixLinearMap& map);

// Scans the sign patterns through the induced graph map and lifts a graph
// counterexample to a 0/1 matrix witness. Requires 2 <= t <= n-1.
std::optional<SymMatrix> satisfies_matrix_preserver(const MatrixLinearMap& map, int t,
                                                    const AlphaTable* shared_table = nullptr);

// The permutation sigma with phi(X) = P^T X P, present iff the tensor is
// the 0/1 generator permutation induced by a vertex permutation.
std::optional<VertexPermutation> is_permutation_similarity(const MatrixLinearMap& map);

SymMatrix hadamard(const SymMatrix& a, const SymMatrix& b);
// P^T X P for the permutation matrix of sigma: entry (i,j) moves to
// (sigma(i), sigma(j)).
SymMatrix conjugate_by_permutation(const SymMatrix& x, const VertexPermutation& sigma);

struct MatrixCharacterizationVerdict {
    bool pass = false;
    int n = 0;
    int t = 0;
    int samples = 0;
    uint64_t similarity_count = 0;      // permutation tensors confirmed on both hypotheses
    uint64_t controls_rejected = 0;     // random controls failing a hypothesis
    uint64_t controls_similarity = 0;   // random controls that are permutation similarities
    uint64_t anomalies = 0;             // controls passing hypotheses without being similarities
    bool classifier_lift_pass = false;  // graph-side classification matches vertex permutations
    bool coefficient_forcing_pass = false;  // fixed point pins single-support tensors to 1
    std::string detail;
};

// Checks both directions of the permutation-similarity characterization
// at (n, t): every permutation tensor satisfies the hypotheses, the
// graph-side classification pins down the sign patterns, the fixed-point
// condition forces unit coefficients, and seeded random controls never
// pass the hypotheses without being permutation similarities.
MatrixCharacterizationVerdict verify_matrix_characterization(int n, int t, int samples,
                                                             uint64_t seed, int threads = 1);

}  // namespace preserver
