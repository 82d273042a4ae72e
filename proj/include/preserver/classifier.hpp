#pragma once

// Sound-and-complete enumeration of all complete linear maps on the
// graphs over {1..n} that satisfy the threshold preserver biconditional
// for a given (n, t). The search assigns a generator image per DFS level
// (every subgraph is a candidate image, the empty graph included) and
// prunes a subtree only when no completion of it can satisfy the
// condition; leaves re-verify the full biconditional.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "preserver/linear_map.hpp"

namespace preserver {

struct SearchOptions {
    bool pruning = true;
    bool symmetry_reduction = false;
    uint64_t node_budget = 1'000'000'000;
    int threads = 1;  // 0 = hardware concurrency
};

struct ClassificationReport {
    int n = 0;
    int t = 0;
    PreserverMode mode = PreserverMode::independence;
    bool pruning = true;
    bool symmetry_reduction = false;

    std::vector<GraphLinearMap> satisfying_maps;  // sorted, canonical order
    uint64_t vertex_permutation_count = 0;
    uint64_t edge_permutation_count = 0;  // includes vertex permutations
    uint64_t other_count = 0;             // edge_permutation_count + other_count = total

    uint64_t nodes_expanded = 0;
    std::map<std::string, uint64_t> nodes_pruned_by_rule;
    uint64_t leaves_visited = 0;
    double wall_seconds = 0.0;
};

// Enumerates the satisfying complete linear maps for (n, t). Requires
// 1 <= t <= n-1; n <= 4 for the full space, n = 5 only with symmetry
// reduction enabled.
ClassificationReport classify(int n, int t, PreserverMode mode = PreserverMode::independence,
                              const SearchOptions& options = SearchOptions{});

// Checks the satisfying set against the family expected under the
// independence-number condition: all edge permutations at t = 1, all
// vertex permutations at t >= 2. (Clique-mode reports are not measured
// against a fixed family.)
struct PermutationFamilyVerdict {
    bool pass = false;
    std::string expected_family;
    uint64_t expected_count = 0;
    uint64_t actual_count = 0;
    uint64_t not_in_family = 0;                  // satisfying maps outside the family
    std::vector<GraphLinearMap> missing;         // family members absent from the report
    std::vector<GraphLinearMap> unexpected;      // reported maps outside the family
};

PermutationFamilyVerdict verify_permutation_characterization(const ClassificationReport& report);

// Structural consequences every satisfying map must exhibit: nonempty
// single-edge images without separate edges, bijectivity on generators
// plus completeness, and (for t >= 2) adjacency preservation and star
// alignment.
struct StructuralVerdict {
    bool pass = false;
    uint64_t maps_checked = 0;
    uint64_t failures = 0;
    std::vector<std::string> failure_notes;  // capped
};

StructuralVerdict verify_structural_consequences(const ClassificationReport& report);

// Linear maps preserving the independence number of every graph: the
// satisfying sets for t = 1..n-1 are intersected (alpha preservation at
// t = 1 already forces completeness), each survivor is re-verified
// directly on all graphs, and the result is compared against the vertex
// permutations.
struct FullSpectrumVerdict {
    bool pass = false;
    int n = 0;
    uint64_t map_count = 0;
    bool equals_vertex_permutations = false;
    std::vector<GraphLinearMap> maps;
};

FullSpectrumVerdict verify_full_spectrum_preservers(int n,
                                                    const SearchOptions& options = SearchOptions{});

}  // namespace preserver
