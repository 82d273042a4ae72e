#pragma once

// Exhaustive small-order suites for the independence-number facts the
// rest of the toolkit leans on: the common-vertex bound for maximum
// independent sets, the union lower bound, the one-edge step, and the
// extremal edge-count characterization.

#include <cstdint>
#include <string>

#include "preserver/graph.hpp"

namespace preserver {

struct SuiteResult {
    std::string name;
    int n = 0;
    bool pass = false;
    uint64_t cases_checked = 0;
    uint64_t hypothesis_cases = 0;  // cases meeting the hypothesis side
    std::string counterexample;     // empty on pass
};

// Every graph with alpha >= n/2 + 1 has at least 2*alpha - n vertices
// common to all of its maximum independent sets. Exhaustive, n <= 7.
SuiteResult common_vertex_bound_suite(int n, int threads = 1);

// alpha(G1 union G2) >= alpha(G1) + alpha(G2) - n over all pairs.
// Exhaustive, n <= 5.
SuiteResult union_alpha_bound_suite(int n, int threads = 1);
// Same bound on seeded random pairs (for orders past the exhaustive tier,
// n <= 8).
SuiteResult union_alpha_bound_random_suite(int n, uint64_t pairs, uint64_t seed);

// Adding one edge changes alpha by 0 or -1. Exhaustive, n <= 6.
SuiteResult edge_addition_alpha_suite(int n, int threads = 1);

namespace detail {

struct AlphaCommon {
    int alpha = 0;
    uint32_t common = 0;  // AND over all maximum independent vertex masks
};

// Single-pass subset scan computing alpha and the intersection of all
// maximum independent sets; the engine behind the common-vertex suite.
AlphaCommon alpha_and_common(const AdjMasks& adj, int n);

}  // namespace detail

}  // namespace preserver
