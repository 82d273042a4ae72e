#pragma once

// Brute-force oracles for the test suite. Deliberately independent of
// the library's solvers: independence is tested pairwise per subset, with
// no pruning, memoization, or bit tricks shared with the implementation.

#include <cstdint>
#include <random>
#include <vector>

#include "preserver/graph.hpp"

namespace oracle {

inline bool subset_independent(const preserver::Graph& g, uint32_t members) {
    const int n = g.order();
    for (int i = 1; i <= n; ++i) {
        if (!((members >> (i - 1)) & 1)) continue;
        for (int j = i + 1; j <= n; ++j) {
            if (!((members >> (j - 1)) & 1)) continue;
            if (g.has_edge(i, j)) return false;
        }
    }
    return true;
}

// alpha by scanning all 2^n vertex subsets.
inline int alpha(const preserver::Graph& g) {
    const int n = g.order();
    int best = 0;
    for (uint32_t members = 0; members < (uint32_t{1} << n); ++members) {
        if (!subset_independent(g, members)) continue;
        int size = 0;
        for (int b = 0; b < n; ++b) size += (members >> b) & 1;
        if (size > best) best = size;
    }
    return best;
}

// All maximum independent sets, ascending by bitmask.
inline std::vector<uint32_t> maximum_independent_sets(const preserver::Graph& g) {
    const int n = g.order();
    const int best = alpha(g);
    std::vector<uint32_t> out;
    for (uint32_t members = 0; members < (uint32_t{1} << n); ++members) {
        if (!subset_independent(g, members)) continue;
        int size = 0;
        for (int b = 0; b < n; ++b) size += (members >> b) & 1;
        if (size == best) out.push_back(members);
    }
    return out;
}

inline preserver::Graph random_graph(int n, std::mt19937_64& rng) {
    preserver::Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (rng() & 1) g.add_edge(i, j);
    return g;
}

}  // namespace oracle
