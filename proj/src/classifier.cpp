#include "preserver/classifier.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <set>
#include <stdexcept>

#include "preserver/errors.hpp"
#include "preserver/parallel.hpp"

namespace preserver {

namespace {

constexpr const char* kRuleIncremental = "incremental_biconditional";
constexpr const char* kRuleValueCollapse = "value_collapse";
constexpr const char* kRulePrivateEdge = "private_edge";

// Static description of one (n, t, mode) search.
struct SearchSpace {
    int n = 0;
    int t = 0;
    int m = 0;
    PreserverMode mode = PreserverMode::independence;
    uint32_t full_mask = 0;
    bool pruning = true;
    bool private_edge_rule = false;
    uint64_t budget = 0;

    std::vector<uint8_t> value;        // alpha (or omega) per edge mask
    std::vector<int> order;            // assignment order -> canonical generator index
    std::vector<uint32_t> order_bit;   // canonical bit of the k-th assigned generator
    std::vector<uint32_t> rest_mask;   // canonical mask of generators after each depth
    std::vector<uint32_t> genmask;     // assigned-subset bitmask -> canonical input mask
    std::vector<uint32_t> candidates;  // all images, (edge count, value) order
    std::vector<uint32_t> root_candidates;  // depth-0 candidates (orbit reps under symmetry)
};

struct TaskCounters {
    uint64_t expanded = 0;
    uint64_t pruned_incremental = 0;
    uint64_t pruned_collapse = 0;
    uint64_t pruned_private = 0;
    uint64_t leaves = 0;
};

struct TaskState {
    const SearchSpace* space = nullptr;
    std::atomic<uint64_t>* budget_used = nullptr;  // shared across workers
    std::vector<uint32_t> img_union;  // per assigned-subset bitmask
    std::array<uint32_t, 32> img{};
    std::array<uint32_t, 33> once{};
    std::array<uint32_t, 33> twice{};
    std::array<uint32_t, 3> forced{};  // fixed images for the leading depths
    int forced_count = 0;
    uint64_t unflushed = 0;
    TaskCounters counters;
    std::vector<std::vector<uint32_t>> found;  // canonical-order image tuples

    TaskState(const SearchSpace& s, std::atomic<uint64_t>* used)
        : space(&s), budget_used(used) {
        img_union.assign(uint64_t{1} << s.m, 0);
    }

    // The exact count is merged per chunk; the shared total only gates
    // the budget, so whether a run exceeds it does not depend on
    // scheduling.
    void flush_budget() {
        budget_used->fetch_add(unflushed);
        unflushed = 0;
        if (budget_used->load() > space->budget)
            throw BudgetExceeded("classification search exceeded node budget of " +
                                 std::to_string(space->budget));
    }

    void trial(int depth, uint32_t cand) {
        const SearchSpace& s = *space;
        ++counters.expanded;
        if (++unflushed >= 8192) flush_budget();
        const uint32_t base = uint32_t{1} << depth;
        if (s.pruning) {
            // Every graph supported on the assigned generators whose
            // support includes the new one is now fully determined;
            // check the biconditional on each. For the same subsets,
            // graphs extending them into unassigned generators reach
            // every value between the closed extension and the subset
            // graph itself, while their image can only keep growing; an
            // image union that already crossed the threshold dooms the
            // whole subtree.
            const uint32_t rest = s.rest_mask[depth];
            const bool alpha_mode = s.mode == PreserverMode::independence;
            for (uint32_t s0 = 0; s0 < base; ++s0) {
                const uint32_t idx = base + s0;
                const uint32_t u = img_union[s0] | cand;
                img_union[idx] = u;
                const uint8_t ain = s.value[s.genmask[idx]];
                const uint8_t aout = s.value[u];
                if ((ain == s.t) != (aout == s.t)) {
                    ++counters.pruned_incremental;
                    return;
                }
                if (alpha_mode) {
                    if (aout < s.t && s.t <= ain && s.value[s.genmask[idx] | rest] <= s.t) {
                        ++counters.pruned_collapse;
                        return;
                    }
                } else {
                    if (aout > s.t && ain <= s.t && s.t <= s.value[s.genmask[idx] | rest]) {
                        ++counters.pruned_collapse;
                        return;
                    }
                }
            }
            if (s.private_edge_rule) {
                // A complete completion sends K_n minus a generator to
                // K_n whenever that generator's image has no privately
                // covered edge; at these thresholds that is always a
                // violation, and privacy only shrinks as images arrive.
                const uint32_t new_once = once[depth] | cand;
                const uint32_t new_twice = twice[depth] | (once[depth] & cand);
                const uint32_t exactly_once = new_once & ~new_twice;
                img[depth] = cand;
                for (int p = 0; p <= depth; ++p) {
                    if ((img[p] & exactly_once) == 0) {
                        ++counters.pruned_private;
                        return;
                    }
                }
                once[depth + 1] = new_once;
                twice[depth + 1] = new_twice;
            }
        } else {
            for (uint32_t s0 = 0; s0 < base; ++s0) img_union[base + s0] = img_union[s0] | cand;
        }
        img[depth] = cand;
        if (depth + 1 == s.m) {
            leaf();
            return;
        }
        if (depth + 1 < forced_count) {
            trial(depth + 1, forced[depth + 1]);
            return;
        }
        for (uint32_t next : s.candidates) trial(depth + 1, next);
    }

    void leaf() {
        const SearchSpace& s = *space;
        ++counters.leaves;
        const uint64_t all = (uint64_t{1} << s.m) - 1;
        if (img_union[all] != s.full_mask) return;  // not a complete map
        for (uint64_t idx = 0; idx <= all; ++idx) {
            const bool in_t = s.value[s.genmask[idx]] == s.t;
            const bool out_t = s.value[img_union[idx]] == s.t;
            if (in_t != out_t) return;
        }
        std::vector<uint32_t> tuple(s.m);
        for (int p = 0; p < s.m; ++p) tuple[s.order[p]] = img[p];
        found.push_back(std::move(tuple));
    }
};

std::vector<uint32_t> images_sorted_by_size(int m) {
    std::vector<uint32_t> out(uint64_t{1} << m);
    for (uint32_t v = 0; v < out.size(); ++v) out[v] = v;
    std::stable_sort(out.begin(), out.end(), [](uint32_t a, uint32_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    return out;
}

// Edge-index action of each vertex permutation, for relabeling masks.
std::vector<std::vector<int>> edge_actions(int n) {
    const int m = pair_count(n);
    std::vector<std::vector<int>> actions;
    for (const auto& sigma : all_vertex_permutations(n)) {
        std::vector<int> act(m);
        for (int e = 0; e < m; ++e) {
            const auto [i, j] = pair_from_index(n, e);
            act[e] = pair_index(n, sigma(i), sigma(j));
        }
        actions.push_back(std::move(act));
    }
    return actions;
}

uint32_t relabel_mask(uint32_t mask, const std::vector<int>& action) {
    uint32_t out = 0;
    while (mask) {
        const int e = std::countr_zero(mask);
        mask &= mask - 1;
        out |= uint32_t{1} << action[e];
    }
    return out;
}

SearchSpace build_space(int n, int t, PreserverMode mode, const SearchOptions& options) {
    SearchSpace s;
    s.n = n;
    s.t = t;
    s.m = pair_count(n);
    s.mode = mode;
    s.full_mask = (uint32_t{1} << s.m) - 1;
    s.pruning = options.pruning;
    s.budget = options.node_budget;
    s.private_edge_rule = options.pruning && n >= 3 &&
                          (mode == PreserverMode::independence ? (t <= 2) : (t == n - 1));

    const AlphaTable table = build_alpha_table(n, mode);
    s.value = table.values;

    // Generators grouped by their larger endpoint, so each prefix of the
    // assignment order spans a connected front of vertices.
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) {
            s.order.push_back(pair_index(n, i, j));
            s.order_bit.push_back(uint32_t{1} << pair_index(n, i, j));
        }

    s.genmask.assign(uint64_t{1} << s.m, 0);
    for (uint64_t idx = 1; idx < s.genmask.size(); ++idx)
        s.genmask[idx] = s.genmask[idx & (idx - 1)] | s.order_bit[std::countr_zero(idx)];

    s.rest_mask.assign(s.m, 0);
    for (int depth = 0; depth < s.m; ++depth)
        for (int p = depth + 1; p < s.m; ++p) s.rest_mask[depth] |= s.order_bit[p];

    s.candidates = images_sorted_by_size(s.m);
    if (options.symmetry_reduction) {
        const auto actions = edge_actions(n);
        for (uint32_t cand : s.candidates) {
            uint32_t canon = cand;
            for (const auto& act : actions) canon = std::min(canon, relabel_mask(cand, act));
            if (canon == cand) s.root_candidates.push_back(cand);
        }
    } else {
        s.root_candidates = s.candidates;
    }
    return s;
}

}  // namespace

ClassificationReport classify(int n, int t, PreserverMode mode, const SearchOptions& options) {
    if (n < 2 || n > kMaxVertices) throw std::invalid_argument("classification needs 2 <= n <= 32");
    if (t < 1 || t > n - 1)
        throw std::invalid_argument("threshold t must satisfy 1 <= t <= n-1, got t=" +
                                    std::to_string(t));
    if (n > 5)
        throw BudgetExceeded("classification supports n <= 5; n=" + std::to_string(n) +
                             " is out of reach");
    if (n == 5 && !options.symmetry_reduction)
        throw BudgetExceeded("n=5 classification requires symmetry reduction (enable it to "
                             "search one orbit representative per first image)");

    const auto started = std::chrono::steady_clock::now();
    const SearchSpace space = build_space(n, t, mode, options);

    struct Partial {
        TaskCounters counters;
        std::vector<std::vector<uint32_t>> found;
    };
    // Tasks fix the leading images so the work spreads evenly even when a
    // single branch holds most of the tree; the fixed levels are
    // re-expanded per task, which only inflates the node counters by the
    // task count.
    const int forced_levels = std::min(space.m, space.m >= 6 ? 3 : (space.m >= 2 ? 2 : 1));
    uint64_t fanout = 1;
    for (int level = 1; level < forced_levels; ++level) fanout *= space.candidates.size();
    const uint64_t tasks = space.root_candidates.size() * fanout;
    // Hard prefixes sit next to each other in the sorted candidate order,
    // so chunks walk the task ids with a transpose interleave to spread
    // them evenly; fanout is a power of two and divides the task count.
    const uint64_t stride = std::min<uint64_t>(fanout, 4096);
    Partial merged = parallel_reduce<Partial>(
        0, tasks, options.threads, Partial{},
        [&space, fanout, forced_levels, tasks, stride](uint64_t lo, uint64_t hi) {
            Partial part;
            TaskState state(space);
            const uint64_t cand_count = space.candidates.size();
            for (uint64_t k = lo; k < hi; ++k) {
                const uint64_t task = (k % stride) * (tasks / stride) + k / stride;
                state.forced[0] = space.root_candidates[task / fanout];
                uint64_t rest = task % fanout;
                for (int level = forced_levels - 1; level >= 1; --level) {
                    state.forced[level] = space.candidates[rest % cand_count];
                    rest /= cand_count;
                }
                state.forced_count = forced_levels;
                state.trial(0, state.forced[0]);
            }
            part.counters = state.counters;
            part.found = std::move(state.found);
            return part;
        },
        [](Partial& into, Partial from) {
            into.counters.expanded += from.counters.expanded;
            into.counters.pruned_incremental += from.counters.pruned_incremental;
            into.counters.pruned_collapse += from.counters.pruned_collapse;
            into.counters.pruned_private += from.counters.pruned_private;
            into.counters.leaves += from.counters.leaves;
            into.found.insert(into.found.end(), std::make_move_iterator(from.found.begin()),
                              std::make_move_iterator(from.found.end()));
        });
    if (merged.counters.expanded > options.node_budget)
        throw BudgetExceeded("classification search exceeded node budget of " +
                             std::to_string(options.node_budget));

    std::vector<std::vector<uint32_t>> tuples = std::move(merged.found);
    if (options.symmetry_reduction) {
        // Post-composition with any vertex permutation preserves the
        // condition, so each found map stands for its whole coset.
        const auto actions = edge_actions(n);
        std::vector<std::vector<uint32_t>> expanded;
        expanded.reserve(tuples.size() * actions.size());
        for (const auto& tuple : tuples)
            for (const auto& act : actions) {
                std::vector<uint32_t> image(space.m);
                for (int e = 0; e < space.m; ++e) image[e] = relabel_mask(tuple[e], act);
                expanded.push_back(std::move(image));
            }
        tuples = std::move(expanded);
    }
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());

    ClassificationReport report;
    report.n = n;
    report.t = t;
    report.mode = mode;
    report.pruning = options.pruning;
    report.symmetry_reduction = options.symmetry_reduction;
    report.nodes_expanded = merged.counters.expanded;
    report.leaves_visited = merged.counters.leaves;
    report.nodes_pruned_by_rule[kRuleIncremental] = merged.counters.pruned_incremental;
    report.nodes_pruned_by_rule[kRuleValueCollapse] = merged.counters.pruned_collapse;
    report.nodes_pruned_by_rule[kRulePrivateEdge] = merged.counters.pruned_private;

    report.satisfying_maps.reserve(tuples.size());
    for (const auto& tuple : tuples) {
        std::vector<uint64_t> masks(tuple.begin(), tuple.end());
        GraphLinearMap map = GraphLinearMap::from_masks(n, masks);
        if (is_vertex_permutation(map)) ++report.vertex_permutation_count;
        if (is_edge_permutation(map))
            ++report.edge_permutation_count;
        else
            ++report.other_count;
        report.satisfying_maps.push_back(std::move(map));
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

PermutationFamilyVerdict verify_permutation_characterization(const ClassificationReport& report) {
    PermutationFamilyVerdict verdict;
    const int n = report.n;
    const int m = pair_count(n);
    verdict.actual_count = report.satisfying_maps.size();

    uint64_t expected = 1;
    if (report.t == 1) {
        verdict.expected_family = "edge permutations";
        for (int k = 2; k <= m; ++k) expected *= k;
    } else {
        verdict.expected_family = "vertex permutations";
        for (int k = 2; k <= n; ++k) expected *= k;
    }
    verdict.expected_count = expected;

    const auto in_family = [&](const GraphLinearMap& map) {
        return report.t == 1 ? is_edge_permutation(map) : is_vertex_permutation(map).has_value();
    };
    for (const auto& map : report.satisfying_maps)
        if (!in_family(map)) ++verdict.not_in_family;

    verdict.pass = verdict.not_in_family == 0 && verdict.actual_count == verdict.expected_count;
    if (verdict.pass) return verdict;

    // Materialize the expected family for a discrepancy listing when it
    // is small enough to be useful.
    if (verdict.expected_count <= 100000) {
        std::set<GraphLinearMap> expected_set;
        if (report.t == 1) {
            std::vector<int> targets(m);
            for (int e = 0; e < m; ++e) targets[e] = e;
            do {
                std::vector<uint64_t> masks(m);
                for (int e = 0; e < m; ++e) masks[e] = uint64_t{1} << targets[e];
                expected_set.insert(GraphLinearMap::from_masks(n, masks));
            } while (std::next_permutation(targets.begin(), targets.end()));
        } else {
            for (const auto& sigma : all_vertex_permutations(n))
                expected_set.insert(GraphLinearMap::from_vertex_permutation(sigma));
        }
        std::set<GraphLinearMap> actual_set(report.satisfying_maps.begin(),
                                            report.satisfying_maps.end());
        std::set_difference(expected_set.begin(), expected_set.end(), actual_set.begin(),
                            actual_set.end(), std::back_inserter(verdict.missing));
        std::set_difference(actual_set.begin(), actual_set.end(), expected_set.begin(),
                            expected_set.end(), std::back_inserter(verdict.unexpected));
    }
    return verdict;
}

StructuralVerdict verify_structural_consequences(const ClassificationReport& report) {
    StructuralVerdict verdict;
    verdict.pass = true;
    for (size_t k = 0; k < report.satisfying_maps.size(); ++k) {
        const auto& map = report.satisfying_maps[k];
        ++verdict.maps_checked;
        std::string note;
        const auto preds = structural_predicates(map);
        if (!preds.all_images_nonempty) note = "empty generator image";
        else if (!preds.no_image_has_separate_edges) note = "image with separate edges";
        else if (!preds.all_images_single_edge) note = "image with more than one edge";
        else if (report.t >= 2 && !preds.adjacent_generators_map_to_adjacent_edges)
            note = "adjacent generators with non-adjacent images";
        else if (report.t >= 2 && !preds.star_alignment) note = "star not aligned";
        else {
            // bijective on generators, together with completeness
            std::vector<Graph> images = map.images();
            std::sort(images.begin(), images.end());
            if (std::adjacent_find(images.begin(), images.end()) != images.end())
                note = "generator images not distinct";
            else if (!is_complete(map))
                note = "not complete";
        }
        if (!note.empty()) {
            ++verdict.failures;
            verdict.pass = false;
            if (verdict.failure_notes.size() < 8)
                verdict.failure_notes.push_back("map #" + std::to_string(k) + ": " + note);
        }
    }
    return verdict;
}

FullSpectrumVerdict verify_full_spectrum_preservers(int n, const SearchOptions& options) {
    FullSpectrumVerdict verdict;
    verdict.n = n;

    // Preserving alpha at every value forces completeness (K_n is the
    // only graph at value 1), so survivors of the per-threshold
    // intersections cover all candidates.
    std::vector<GraphLinearMap> survivors;
    for (int t = 1; t <= n - 1; ++t) {
        ClassificationReport report = classify(n, t, PreserverMode::independence, options);
        if (t == 1) {
            survivors = std::move(report.satisfying_maps);
        } else {
            std::vector<GraphLinearMap> next;
            std::set_intersection(survivors.begin(), survivors.end(),
                                  report.satisfying_maps.begin(), report.satisfying_maps.end(),
                                  std::back_inserter(next));
            survivors = std::move(next);
        }
    }

    // Re-verify every survivor directly: alpha(phi(G)) = alpha(G) on the
    // whole space, the t = n level included.
    const AlphaTable table = build_alpha_table(n, PreserverMode::independence);
    const int m = pair_count(n);
    std::vector<GraphLinearMap> preserving;
    for (const auto& map : survivors) {
        std::vector<uint64_t> phi(uint64_t{1} << m, 0);
        bool ok = true;
        for (uint64_t mask = 1; mask < phi.size() && ok; ++mask) {
            phi[mask] = phi[mask & (mask - 1)] | map.image(std::countr_zero(mask)).mask64();
            ok = table.at(phi[mask]) == table.at(mask);
        }
        if (ok) preserving.push_back(map);
    }

    std::vector<GraphLinearMap> expected;
    for (const auto& sigma : all_vertex_permutations(n))
        expected.push_back(GraphLinearMap::from_vertex_permutation(sigma));
    std::sort(expected.begin(), expected.end());

    verdict.map_count = preserving.size();
    verdict.equals_vertex_permutations = preserving == expected;
    verdict.maps = std::move(preserving);
    verdict.pass = verdict.equals_vertex_permutations;
    return verdict;
}

}  // namespace preserver
