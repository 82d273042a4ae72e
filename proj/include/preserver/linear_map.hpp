#pragma once

// Linear maps on the union-semilattice of graphs over {1..n}. A map is
// determined by its images on the single-edge generators; applying it to
// a graph unions the images over the graph's edges. Includes recognition
// of vertex/edge permutations, the independence-number preserver
// predicate, and standalone structural predicates on generator images.

#include <cstdint>
#include <optional>
#include <vector>

#include "preserver/graph.hpp"

namespace preserver {

class VertexPermutation {
public:
    // images[k] = sigma(k+1), values 1..n forming a bijection.
    VertexPermutation(int n, std::vector<int> images);
    static VertexPermutation identity(int n);

    int order() const { return n_; }
    int operator()(int v) const;
    const std::vector<int>& images() const { return sigma_; }
    VertexPermutation inverse() const;

    friend bool operator==(const VertexPermutation& a, const VertexPermutation& b) {
        return a.sigma_ == b.sigma_;
    }
    friend bool operator<(const VertexPermutation& a, const VertexPermutation& b) {
        return a.sigma_ < b.sigma_;
    }

private:
    int n_;
    std::vector<int> sigma_;
};

std::vector<VertexPermutation> all_vertex_permutations(int n);
// Push every edge (i,j) to (sigma(i), sigma(j)).
Graph relabel(const Graph& g, const VertexPermutation& sigma);

class GraphLinearMap {
public:
    // One image per generator, in canonical pair order; all on the same n.
    GraphLinearMap(int n, std::vector<Graph> images);
    static GraphLinearMap identity(int n);
    static GraphLinearMap from_vertex_permutation(const VertexPermutation& sigma);
    // Images given as low-word edge masks (requires pair_count(n) <= 64).
    static GraphLinearMap from_masks(int n, const std::vector<uint64_t>& image_masks);

    int order() const { return n_; }
    int generator_count() const { return static_cast<int>(images_.size()); }
    const Graph& image(int generator_index) const { return images_[generator_index]; }
    const std::vector<Graph>& images() const { return images_; }

    friend bool operator==(const GraphLinearMap& a, const GraphLinearMap& b) {
        return a.n_ == b.n_ && a.images_ == b.images_;
    }
    friend bool operator!=(const GraphLinearMap& a, const GraphLinearMap& b) { return !(a == b); }
    friend bool operator<(const GraphLinearMap& a, const GraphLinearMap& b);

private:
    int n_;
    std::vector<Graph> images_;
};

// Union of generator images over the edges of g (empty input -> empty).
Graph apply(const GraphLinearMap& map, const Graph& g);

// phi(K_n) = K_n.
bool is_complete(const GraphLinearMap& map);

// The permutation sigma with images[(i,j)] = G_{sigma(i)sigma(j)}, if any.
std::optional<VertexPermutation> is_vertex_permutation(const GraphLinearMap& map);

// Complete with single-edge images (hence a bijection on the edge set).
bool is_edge_permutation(const GraphLinearMap& map);

enum class PreserverMode { independence, clique };

enum class ViolationDirection {
    input_at_threshold_image_not,  // value(G) = t but value(phi(G)) != t
    image_at_threshold_input_not,  // value(phi(G)) = t but value(G) != t
};

struct PreserverCounterexample {
    Graph graph;
    ViolationDirection direction;
};

// Memo of alpha (or omega) per edge mask, shared across scans of the same
// graph space. Only built for pair_count(n) <= 20.
struct AlphaTable {
    int n = 0;
    PreserverMode mode = PreserverMode::independence;
    std::vector<uint8_t> values;  // size 2^pair_count(n)

    uint8_t at(uint64_t mask) const { return values[mask]; }
};

AlphaTable build_alpha_table(int n, PreserverMode mode);

struct ScanOptions {
    // Largest graph space 2^m the scan will walk.
    uint64_t max_graphs = uint64_t{1} << 28;
    const AlphaTable* table = nullptr;  // optional shared memo
};

// Scans the full graph space in (edge count, bitset) order and returns
// the first graph violating "value(phi(G)) = t  iff  value(G) = t", or
// nullopt when the biconditional holds everywhere.
std::optional<PreserverCounterexample> satisfies_preserver_condition(
    const GraphLinearMap& map, int t, PreserverMode mode = PreserverMode::independence,
    const ScanOptions& options = {});

struct StructuralPredicates {
    bool all_images_nonempty = false;
    bool no_image_has_separate_edges = false;
    bool all_images_single_edge = false;
    bool adjacent_generators_map_to_adjacent_edges = false;
    bool star_alignment = false;
};

StructuralPredicates structural_predicates(const GraphLinearMap& map);

}  // namespace preserver
