#pragma once

// Labeled simple graphs on vertex set {1..n}, n <= 32. Edges live in a
// fixed-width bitset indexed by the canonical pair order
// (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n), so bit positions are stable
// across modules and serialized output.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace preserver {

inline constexpr int kMaxVertices = 32;
inline constexpr int kMaxPairs = kMaxVertices * (kMaxVertices - 1) / 2;  // 496
inline constexpr int kEdgeWords = (kMaxPairs + 63) / 64;                 // 8

int pair_count(int n);
// Canonical index of the unordered pair {i,j}, 1 <= i != j <= n.
int pair_index(int n, int i, int j);
std::pair<int, int> pair_from_index(int n, int idx);

// Subset of {1..n} as a bitmask (bit v-1 <-> vertex v).
class VertexSet {
public:
    VertexSet(int n, uint32_t members);
    static VertexSet empty(int n) { return VertexSet(n, 0); }
    static VertexSet full(int n);

    int order() const { return n_; }
    uint32_t mask() const { return members_; }
    int size() const;
    bool contains(int v) const;
    std::vector<int> members() const;  // sorted, 1-based

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.members_ == b.members_;
    }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }
    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.members_ < b.members_;
    }

private:
    int n_;
    uint32_t members_;
};

class Graph {
public:
    // Empty graph on {1..n}; rejects n outside [1, 32].
    explicit Graph(int n);
    static Graph complete(int n);
    // Graph with edge bits taken from the low pair_count(n) bits of `mask`.
    static Graph from_mask(int n, uint64_t mask);

    int order() const { return n_; }
    int pair_bits() const { return m_; }  // n(n-1)/2
    int size() const;                     // number of edges

    bool has_edge(int i, int j) const;
    void add_edge(int i, int j);
    void remove_edge(int i, int j);
    bool edge_bit(int idx) const;
    void set_edge_bit(int idx);

    bool is_empty() const;
    bool is_complete() const;

    // Low 64 edge bits; only valid when pair_bits() <= 64 (n <= 11).
    uint64_t mask64() const;
    const std::array<uint64_t, kEdgeWords>& words() const { return bits_; }

    // Neighbours of v as a vertex bitmask (bit u-1 set iff {u,v} is an edge).
    uint32_t adjacency_mask(int v) const;

    std::vector<std::pair<int, int>> edge_list() const;  // canonical order

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }
    // Order by n, then by bitset value (most significant word first).
    friend bool operator<(const Graph& a, const Graph& b);

private:
    void check_vertex(int v) const;

    int n_;
    int m_;
    std::array<uint64_t, kEdgeWords> bits_{};
};

Graph make_single_edge(int n, int i, int j);
Graph graph_union(const Graph& g1, const Graph& g2);
Graph complement(const Graph& g);

// Exact independence number alpha(G). Dispatches between a plain
// include/exclude DFS (n <= 20) and a max-clique search on the complement
// with a greedy colouring bound (n > 20).
int independence_number(const Graph& g);
// omega(G) = alpha(complement(G)).
int clique_number(const Graph& g);

// Every independent set of size alpha(G), each exactly once, sorted by
// ascending member bitmask.
std::vector<VertexSet> maximum_independent_sets(const Graph& g);
// Intersection of all maximum independent sets.
VertexSet common_vertices_of_maximum_independent_sets(const Graph& g);

namespace detail {

using AdjMasks = std::array<uint32_t, kMaxVertices>;

AdjMasks adjacency_masks(const Graph& g);
// The two exact alpha routes, exposed separately so tests can cross-check
// them against each other and against a brute-force oracle.
int alpha_subset_dfs(const AdjMasks& adj, int n);
int alpha_clique_coloring(const AdjMasks& adj, int n);

}  // namespace detail

}  // namespace preserver
