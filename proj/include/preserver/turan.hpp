#pragma once

// Turán graphs T(n,r), their complements T'(n,r) (disjoint unions of
// near-equal cliques), and the extremal edge-count bound for graphs with
// a prescribed independence number.

#include <cstdint>
#include <vector>

#include "preserver/graph.hpp"
#include "preserver/rational.hpp"

namespace preserver {

struct TuranSpec {
    int n = 1;
    int r = 1;
};

// Part sizes of T(n,r): ceil(n/r) repeated (n mod r) times, then floor(n/r).
std::vector<int> turan_part_sizes(const TuranSpec& spec);

// Canonical labeled representative: parts are consecutive vertex
// intervals, larger parts first; all cross-part pairs are edges.
Graph turan_graph(const TuranSpec& spec);
// complement(turan_graph): disjoint cliques on consecutive intervals.
Graph turan_complement(const TuranSpec& spec);

// True iff g is a disjoint union of exactly r cliques whose order
// multiset matches the near-equal Turán part sizes.
bool is_turan_complement_isomorphic(const Graph& g, int r);

// Lower bound n^2/(2r) - n/2 on the size of a graph with alpha = r.
Rational turan_min_edges(int n, int r);

struct TuranBoundReport {
    int n = 0;
    int r = 0;
    Rational bound;            // n^2/2r - n/2, exact
    int min_size = -1;         // smallest |E| over graphs with alpha = r
    uint64_t alpha_class_count = 0;  // graphs with alpha = r
    uint64_t extremal_count = 0;     // graphs attaining min_size
    bool pass = false;
};

// Exhaustive scan over all graphs on n vertices (n <= 7): checks the edge
// bound for every graph with alpha = r and that minimum-size graphs are
// exactly the relabelings of T'(n,r).
TuranBoundReport check_turan_bound(int n, int r, int threads = 1);
// Same scan shared across every r in 1..n.
std::vector<TuranBoundReport> check_turan_bounds_all(int n, int threads = 1);

}  // namespace preserver
