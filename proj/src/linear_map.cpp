#include "preserver/linear_map.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "preserver/errors.hpp"

namespace preserver {

VertexPermutation::VertexPermutation(int n, std::vector<int> images)
    : n_(n), sigma_(std::move(images)) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("permutation order out of range");
    if (static_cast<int>(sigma_.size()) != n)
        throw std::invalid_argument("permutation image list has wrong length");
    uint32_t seen = 0;
    for (int v : sigma_) {
        if (v < 1 || v > n) throw std::invalid_argument("permutation image out of range");
        const uint32_t bit = uint32_t{1} << (v - 1);
        if (seen & bit) throw std::invalid_argument("permutation image repeated");
        seen |= bit;
    }
}

VertexPermutation VertexPermutation::identity(int n) {
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 1);
    return VertexPermutation(n, std::move(ids));
}

int VertexPermutation::operator()(int v) const {
    if (v < 1 || v > n_) throw std::invalid_argument("vertex out of range");
    return sigma_[v - 1];
}

VertexPermutation VertexPermutation::inverse() const {
    std::vector<int> inv(n_);
    for (int v = 1; v <= n_; ++v) inv[sigma_[v - 1] - 1] = v;
    return VertexPermutation(n_, std::move(inv));
}

std::vector<VertexPermutation> all_vertex_permutations(int n) {
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 1);
    std::vector<VertexPermutation> out;
    do {
        out.emplace_back(n, ids);
    } while (std::next_permutation(ids.begin(), ids.end()));
    return out;
}

Graph relabel(const Graph& g, const VertexPermutation& sigma) {
    if (g.order() != sigma.order()) throw std::invalid_argument("relabel order mismatch");
    Graph out(g.order());
    for (const auto& [i, j] : g.edge_list()) out.add_edge(sigma(i), sigma(j));
    return out;
}

GraphLinearMap::GraphLinearMap(int n, std::vector<Graph> images)
    : n_(n), images_(std::move(images)) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("map order out of range");
    if (static_cast<int>(images_.size()) != pair_count(n))
        throw std::invalid_argument("map needs one image per generator");
    for (const Graph& g : images_)
        if (g.order() != n) throw std::invalid_argument("image order mismatch");
}

GraphLinearMap GraphLinearMap::identity(int n) {
    std::vector<Graph> images;
    images.reserve(pair_count(n));
    for (int idx = 0; idx < pair_count(n); ++idx) {
        const auto [i, j] = pair_from_index(n, idx);
        images.push_back(make_single_edge(n, i, j));
    }
    return GraphLinearMap(n, std::move(images));
}

GraphLinearMap GraphLinearMap::from_vertex_permutation(const VertexPermutation& sigma) {
    const int n = sigma.order();
    std::vector<Graph> images;
    images.reserve(pair_count(n));
    for (int idx = 0; idx < pair_count(n); ++idx) {
        const auto [i, j] = pair_from_index(n, idx);
        images.push_back(make_single_edge(n, sigma(i), sigma(j)));
    }
    return GraphLinearMap(n, std::move(images));
}

GraphLinearMap GraphLinearMap::from_masks(int n, const std::vector<uint64_t>& image_masks) {
    std::vector<Graph> images;
    images.reserve(image_masks.size());
    for (uint64_t mask : image_masks) images.push_back(Graph::from_mask(n, mask));
    return GraphLinearMap(n, std::move(images));
}

bool operator<(const GraphLinearMap& a, const GraphLinearMap& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.images_ < b.images_;
}

Graph apply(const GraphLinearMap& map, const Graph& g) {
    if (g.order() != map.order()) throw std::invalid_argument("apply order mismatch");
    Graph out(map.order());
    for (int idx = 0; idx < g.pair_bits(); ++idx)
        if (g.edge_bit(idx)) out = graph_union(out, map.image(idx));
    return out;
}

bool is_complete(const GraphLinearMap& map) {
    Graph u(map.order());
    for (const Graph& img : map.images()) u = graph_union(u, img);
    return u.is_complete();
}

std::optional<VertexPermutation> is_vertex_permutation(const GraphLinearMap& map) {
    const int n = map.order();
    for (const Graph& img : map.images())
        if (img.size() != 1) return std::nullopt;
    if (n == 1) return VertexPermutation::identity(1);
    if (n == 2) return VertexPermutation::identity(2);  // the single generator maps to itself

    // sigma(i) = the vertex shared by all images of generators at i
    std::vector<int> sigma(n, 0);
    for (int i = 1; i <= n; ++i) {
        uint32_t common = ~uint32_t{0};
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            const auto [a, b] = map.image(pair_index(n, i, j)).edge_list().front();
            common &= (uint32_t{1} << (a - 1)) | (uint32_t{1} << (b - 1));
        }
        if (std::popcount(common) != 1) return std::nullopt;
        sigma[i - 1] = std::countr_zero(common) + 1;
    }
    uint32_t seen = 0;
    for (int v : sigma) {
        const uint32_t bit = uint32_t{1} << (v - 1);
        if (seen & bit) return std::nullopt;
        seen |= bit;
    }
    VertexPermutation perm(n, sigma);
    if (map == GraphLinearMap::from_vertex_permutation(perm)) return perm;
    return std::nullopt;
}

bool is_edge_permutation(const GraphLinearMap& map) {
    if (!is_complete(map)) return false;
    for (const Graph& img : map.images())
        if (img.size() != 1) return false;
    return true;
}

AlphaTable build_alpha_table(int n, PreserverMode mode) {
    const int m = pair_count(n);
    if (m > 20) throw std::invalid_argument("alpha table limited to pair_count <= 20");
    AlphaTable table;
    table.n = n;
    table.mode = mode;
    table.values.resize(uint64_t{1} << m);
    for (uint64_t mask = 0; mask < table.values.size(); ++mask) {
        const Graph g = Graph::from_mask(n, mask);
        table.values[mask] = static_cast<uint8_t>(
            mode == PreserverMode::independence ? independence_number(g) : clique_number(g));
    }
    return table;
}

namespace {

// Next mask with the same popcount (Gosper).
uint64_t next_same_popcount(uint64_t x) {
    const uint64_t u = x & (~x + 1);
    const uint64_t v = x + u;
    if (v == 0) return 0;
    return v + (((v ^ x) / u) >> 2);
}

int value_of(const Graph& g, PreserverMode mode) {
    return mode == PreserverMode::independence ? independence_number(g) : clique_number(g);
}

}  // namespace

std::optional<PreserverCounterexample> satisfies_preserver_condition(const GraphLinearMap& map,
                                                                     int t, PreserverMode mode,
                                                                     const ScanOptions& options) {
    const int n = map.order();
    const int m = pair_count(n);
    if (t < 1 || t > n) throw std::invalid_argument("threshold t out of range");
    const uint64_t space = uint64_t{1} << m;
    if (m >= 63 || space > options.max_graphs)
        throw BudgetExceeded("preserver scan over 2^" + std::to_string(m) +
                             " graphs exceeds configured limit");

    std::vector<uint64_t> image_masks(m);
    for (int e = 0; e < m; ++e) image_masks[e] = map.image(e).mask64();

    const AlphaTable* table = options.table;
    AlphaTable local;
    if (table != nullptr && (table->n != n || table->mode != mode))
        throw std::invalid_argument("shared alpha table does not match scan");
    if (table == nullptr && m <= 20) {
        local = build_alpha_table(n, mode);
        table = &local;
    }

    auto make_result = [&](uint64_t mask, bool in_at_t) {
        return PreserverCounterexample{Graph::from_mask(n, mask),
                                       in_at_t ? ViolationDirection::input_at_threshold_image_not
                                               : ViolationDirection::image_at_threshold_input_not};
    };

    if (table != nullptr) {
        // phi over the whole space by subset DP, then report in canonical
        // (edge count, bitset value) order.
        std::vector<uint64_t> phi(space);
        phi[0] = 0;
        for (uint64_t mask = 1; mask < space; ++mask)
            phi[mask] = phi[mask & (mask - 1)] | image_masks[std::countr_zero(mask)];
        for (int c = 0; c <= m; ++c) {
            uint64_t mask = (uint64_t{1} << c) - 1;
            const uint64_t last = mask << (m - c);
            while (true) {
                const bool in_at_t = table->at(mask) == t;
                const bool out_at_t = table->at(phi[mask]) == t;
                if (in_at_t != out_at_t) return make_result(mask, in_at_t);
                if (mask == last || c == 0) break;
                mask = next_same_popcount(mask);
            }
        }
        return std::nullopt;
    }

    // No memo: walk (edge count, value) order directly, computing values
    // per graph.
    for (int c = 0; c <= m; ++c) {
        uint64_t mask = (uint64_t{1} << c) - 1;
        const uint64_t last = mask << (m - c);
        while (true) {
            uint64_t img = 0;
            uint64_t rest = mask;
            while (rest) {
                img |= image_masks[std::countr_zero(rest)];
                rest &= rest - 1;
            }
            const bool in_at_t = value_of(Graph::from_mask(n, mask), mode) == t;
            const bool out_at_t = value_of(Graph::from_mask(n, img), mode) == t;
            if (in_at_t != out_at_t) return make_result(mask, in_at_t);
            if (mask == last || c == 0) break;
            mask = next_same_popcount(mask);
        }
    }
    return std::nullopt;
}

namespace {

bool edges_adjacent(std::pair<int, int> a, std::pair<int, int> b) {
    const int shared = (a.first == b.first) + (a.first == b.second) + (a.second == b.first) +
                       (a.second == b.second);
    return shared == 1;
}

bool has_separate_edges(const Graph& g) {
    const auto edges = g.edge_list();
    for (size_t x = 0; x < edges.size(); ++x)
        for (size_t y = x + 1; y < edges.size(); ++y)
            if (!edges_adjacent(edges[x], edges[y])) return true;
    return false;
}

Graph star_at(int n, int center) {
    Graph g(n);
    for (int v = 1; v <= n; ++v)
        if (v != center) g.add_edge(center, v);
    return g;
}

}  // namespace

StructuralPredicates structural_predicates(const GraphLinearMap& map) {
    const int n = map.order();
    StructuralPredicates out;
    out.all_images_nonempty = true;
    out.no_image_has_separate_edges = true;
    out.all_images_single_edge = true;
    for (const Graph& img : map.images()) {
        if (img.is_empty()) out.all_images_nonempty = false;
        if (has_separate_edges(img)) out.no_image_has_separate_edges = false;
        if (img.size() != 1) out.all_images_single_edge = false;
    }

    out.adjacent_generators_map_to_adjacent_edges = true;
    for (int e = 0; e < map.generator_count() && out.adjacent_generators_map_to_adjacent_edges;
         ++e) {
        for (int f = e + 1; f < map.generator_count(); ++f) {
            if (!edges_adjacent(pair_from_index(n, e), pair_from_index(n, f))) continue;
            const Graph u = graph_union(map.image(e), map.image(f));
            const auto edges = u.edge_list();
            if (edges.size() != 2 || !edges_adjacent(edges[0], edges[1])) {
                out.adjacent_generators_map_to_adjacent_edges = false;
                break;
            }
        }
    }

    out.star_alignment = true;
    for (int i = 1; i <= n && out.star_alignment; ++i) {
        Graph star_image(n);
        for (int j = 1; j <= n; ++j)
            if (j != i) star_image = graph_union(star_image, map.image(pair_index(n, i, j)));
        bool aligned = false;
        for (int c = 1; c <= n && !aligned; ++c) aligned = (star_image == star_at(n, c));
        out.star_alignment = aligned;
    }
    return out;
}

}  // namespace preserver
