#include "preserver/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace preserver {

int pair_count(int n) { return n * (n - 1) / 2; }

int pair_index(int n, int i, int j) {
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw std::invalid_argument("invalid vertex pair (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") for n=" + std::to_string(n));
    if (i > j) std::swap(i, j);
    // Rows of length n-1, n-2, ... precede row i.
    return (i - 1) * n - i * (i - 1) / 2 + (j - i - 1);
}

std::pair<int, int> pair_from_index(int n, int idx) {
    if (idx < 0 || idx >= pair_count(n)) throw std::invalid_argument("pair index out of range");
    int i = 1;
    int rest = idx;
    while (rest >= n - i) {
        rest -= n - i;
        ++i;
    }
    return {i, i + 1 + rest};
}

VertexSet::VertexSet(int n, uint32_t members) : n_(n), members_(members) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("vertex set order out of range");
    if (n < 32 && (members >> n) != 0) throw std::invalid_argument("vertex set has members above n");
}

VertexSet VertexSet::full(int n) {
    return VertexSet(n, n == 32 ? ~uint32_t{0} : ((uint32_t{1} << n) - 1));
}

int VertexSet::size() const { return std::popcount(members_); }

bool VertexSet::contains(int v) const {
    if (v < 1 || v > n_) return false;
    return (members_ >> (v - 1)) & 1u;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    for (int v = 1; v <= n_; ++v)
        if (contains(v)) out.push_back(v);
    return out;
}

Graph::Graph(int n) : n_(n), m_(0) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in [1," + std::to_string(kMaxVertices) +
                                    "], got " + std::to_string(n));
    m_ = pair_count(n);
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int idx = 0; idx < g.m_; ++idx) g.set_edge_bit(idx);
    return g;
}

Graph Graph::from_mask(int n, uint64_t mask) {
    Graph g(n);
    if (g.m_ < 64 && (mask >> g.m_) != 0)
        throw std::invalid_argument("edge mask has bits beyond pair count");
    g.bits_[0] = mask;
    return g;
}

int Graph::size() const {
    int total = 0;
    for (uint64_t w : bits_) total += std::popcount(w);
    return total;
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" +
                                    std::to_string(n_));
}

bool Graph::has_edge(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    if (i == j) return false;
    return edge_bit(pair_index(n_, i, j));
}

void Graph::add_edge(int i, int j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw std::invalid_argument("self-loop rejected");
    set_edge_bit(pair_index(n_, i, j));
}

void Graph::remove_edge(int i, int j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) return;
    const int idx = pair_index(n_, i, j);
    bits_[idx >> 6] &= ~(uint64_t{1} << (idx & 63));
}

bool Graph::edge_bit(int idx) const {
    return (bits_[idx >> 6] >> (idx & 63)) & 1u;
}

void Graph::set_edge_bit(int idx) {
    if (idx < 0 || idx >= m_) throw std::invalid_argument("edge bit index out of range");
    bits_[idx >> 6] |= uint64_t{1} << (idx & 63);
}

bool Graph::is_empty() const {
    for (uint64_t w : bits_)
        if (w) return false;
    return true;
}

bool Graph::is_complete() const { return size() == m_; }

uint64_t Graph::mask64() const {
    if (m_ > 64) throw std::logic_error("mask64 on graph with more than 64 pair bits");
    return bits_[0];
}

uint32_t Graph::adjacency_mask(int v) const {
    check_vertex(v);
    uint32_t mask = 0;
    for (int u = 1; u <= n_; ++u) {
        if (u == v) continue;
        if (edge_bit(pair_index(n_, u, v))) mask |= uint32_t{1} << (u - 1);
    }
    return mask;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int idx = 0; idx < m_; ++idx)
        if (edge_bit(idx)) out.push_back(pair_from_index(n_, idx));
    return out;
}

bool operator<(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (int w = kEdgeWords - 1; w >= 0; --w)
        if (a.bits_[w] != b.bits_[w]) return a.bits_[w] < b.bits_[w];
    return false;
}

Graph make_single_edge(int n, int i, int j) {
    Graph g(n);
    g.add_edge(i, j);
    return g;
}

Graph graph_union(const Graph& g1, const Graph& g2) {
    if (g1.order() != g2.order())
        throw std::invalid_argument("union of graphs with different orders");
    Graph out = g1;
    for (int idx = 0; idx < g2.pair_bits(); ++idx)
        if (g2.edge_bit(idx)) out.set_edge_bit(idx);
    return out;
}

Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int idx = 0; idx < g.pair_bits(); ++idx)
        if (!g.edge_bit(idx)) out.set_edge_bit(idx);
    return out;
}

namespace detail {

AdjMasks adjacency_masks(const Graph& g) {
    AdjMasks adj{};
    const int n = g.order();
    for (int idx = 0; idx < g.pair_bits(); ++idx) {
        if (!g.edge_bit(idx)) continue;
        const auto [i, j] = pair_from_index(n, idx);
        adj[i - 1] |= uint32_t{1} << (j - 1);
        adj[j - 1] |= uint32_t{1} << (i - 1);
    }
    return adj;
}

namespace {

struct SubsetDfs {
    const AdjMasks& adj;
    int best = 0;

    void run(uint32_t candidates, int current) {
        if (current + std::popcount(candidates) <= best) return;
        if (candidates == 0) {
            best = std::max(best, current);
            return;
        }
        const int v = std::countr_zero(candidates);
        const uint32_t bit = uint32_t{1} << v;
        run(candidates & ~(bit | adj[v]), current + 1);  // take v
        run(candidates & ~bit, current);                 // skip v
    }
};

// Max clique with a greedy colouring bound (classic BBMC-style expansion).
struct CliqueColoring {
    const AdjMasks& adj;
    int best = 0;

    void expand(uint32_t p, int size) {
        std::array<int, kMaxVertices> order{};
        std::array<int, kMaxVertices> bound{};
        int count = 0;
        uint32_t rest = p;
        int color = 0;
        while (rest) {
            ++color;
            uint32_t avail = rest;
            while (avail) {
                const int v = std::countr_zero(avail);
                const uint32_t bit = uint32_t{1} << v;
                avail &= ~(bit | adj[v]);
                rest &= ~bit;
                order[count] = v;
                bound[count] = color;
                ++count;
            }
        }
        uint32_t cur = p;
        for (int i = count - 1; i >= 0; --i) {
            if (size + bound[i] <= best) return;
            const int v = order[i];
            const uint32_t next = cur & adj[v];
            if (next == 0)
                best = std::max(best, size + 1);
            else
                expand(next, size + 1);
            cur &= ~(uint32_t{1} << v);
        }
    }
};

uint32_t full_vertex_mask(int n) {
    return n == 32 ? ~uint32_t{0} : ((uint32_t{1} << n) - 1);
}

}  // namespace

int alpha_subset_dfs(const AdjMasks& adj, int n) {
    SubsetDfs dfs{adj};
    dfs.run(full_vertex_mask(n), 0);
    return dfs.best;
}

int alpha_clique_coloring(const AdjMasks& adj, int n) {
    // Independent sets of G are cliques of the complement.
    AdjMasks cadj{};
    const uint32_t full = full_vertex_mask(n);
    for (int v = 0; v < n; ++v) cadj[v] = full & ~adj[v] & ~(uint32_t{1} << v);
    CliqueColoring cc{cadj};
    cc.expand(full, 0);
    return cc.best;
}

}  // namespace detail

int independence_number(const Graph& g) {
    const auto adj = detail::adjacency_masks(g);
    const int n = g.order();
    if (n <= 20) return detail::alpha_subset_dfs(adj, n);
    return detail::alpha_clique_coloring(adj, n);
}

int clique_number(const Graph& g) { return independence_number(complement(g)); }

namespace {

struct MisEnumerator {
    const detail::AdjMasks& adj;
    int n;
    int target;
    std::vector<uint32_t> found;

    void run(int v, uint32_t current, int count, uint32_t candidates) {
        if (count == target) {
            found.push_back(current);
            return;
        }
        if (v >= n) return;
        if (count + std::popcount(candidates) < target) return;
        const uint32_t bit = uint32_t{1} << v;
        if (candidates & bit) run(v + 1, current | bit, count + 1, candidates & ~(bit | adj[v]));
        run(v + 1, current, count, candidates & ~bit);
    }
};

}  // namespace

std::vector<VertexSet> maximum_independent_sets(const Graph& g) {
    const int n = g.order();
    const auto adj = detail::adjacency_masks(g);
    MisEnumerator en{adj, n, independence_number(g), {}};
    en.run(0, 0, 0, n == 32 ? ~uint32_t{0} : ((uint32_t{1} << n) - 1));
    std::sort(en.found.begin(), en.found.end());
    std::vector<VertexSet> out;
    out.reserve(en.found.size());
    for (uint32_t mask : en.found) out.emplace_back(n, mask);
    return out;
}

VertexSet common_vertices_of_maximum_independent_sets(const Graph& g) {
    uint32_t common = ~uint32_t{0};
    for (const auto& s : maximum_independent_sets(g)) common &= s.mask();
    return VertexSet(g.order(), common & VertexSet::full(g.order()).mask());
}

}  // namespace preserver
