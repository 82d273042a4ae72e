#include "preserver/lemma_suites.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <vector>

#include "preserver/errors.hpp"
#include "preserver/parallel.hpp"

namespace preserver {

namespace detail {

AlphaCommon alpha_and_common(const AdjMasks& adj, int n) {
    // indep[mask] via one-bit peeling; n is small enough for the full
    // 2^n table on the stack.
    std::vector<uint8_t> indep(uint64_t{1} << n);
    indep[0] = 1;
    AlphaCommon out{0, 0};
    for (uint32_t mask = 1; mask < indep.size(); ++mask) {
        const int v = std::countr_zero(mask);
        const uint32_t rest = mask & (mask - 1);
        indep[mask] = indep[rest] && (adj[v] & rest) == 0;
        if (!indep[mask]) continue;
        const int size = std::popcount(mask);
        if (size > out.alpha) {
            out.alpha = size;
            out.common = mask;
        } else if (size == out.alpha) {
            out.common &= mask;
        }
    }
    return out;
}

namespace {

AdjMasks adjacency_from_mask(int n, uint64_t edge_mask) {
    AdjMasks adj{};
    while (edge_mask) {
        const int e = std::countr_zero(edge_mask);
        edge_mask &= edge_mask - 1;
        const auto [i, j] = pair_from_index(n, e);
        adj[i - 1] |= uint32_t{1} << (j - 1);
        adj[j - 1] |= uint32_t{1} << (i - 1);
    }
    return adj;
}

}  // namespace

}  // namespace detail

namespace {

struct ScanPartial {
    uint64_t cases = 0;
    uint64_t hypothesis = 0;
    uint64_t first_bad = UINT64_MAX;  // smallest violating case id
};

void merge_partial(ScanPartial& into, const ScanPartial& from) {
    into.cases += from.cases;
    into.hypothesis += from.hypothesis;
    into.first_bad = std::min(into.first_bad, from.first_bad);
}

std::vector<uint8_t> alpha_table_for(int n) {
    const uint64_t space = uint64_t{1} << pair_count(n);
    std::vector<uint8_t> table(space);
    for (uint64_t mask = 0; mask < space; ++mask)
        table[mask] = static_cast<uint8_t>(independence_number(Graph::from_mask(n, mask)));
    return table;
}

std::string describe_graph(int n, uint64_t mask) {
    std::string s = "graph n=" + std::to_string(n) + " edges{";
    bool first = true;
    for (const auto& [i, j] : Graph::from_mask(n, mask).edge_list()) {
        if (!first) s += ",";
        first = false;
        s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    return s + "}";
}

}  // namespace

SuiteResult common_vertex_bound_suite(int n, int threads) {
    SuiteResult result{"common-vertex bound", n, false, 0, 0, ""};
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > 7) throw BudgetExceeded("common-vertex bound suite is exhaustive for n <= 7 only");
    const uint64_t space = uint64_t{1} << pair_count(n);
    ScanPartial merged = parallel_reduce<ScanPartial>(
        0, space, threads, ScanPartial{},
        [n](uint64_t lo, uint64_t hi) {
            ScanPartial part;
            for (uint64_t mask = lo; mask < hi; ++mask) {
                ++part.cases;
                const auto adj = detail::adjacency_from_mask(n, mask);
                const auto ac = detail::alpha_and_common(adj, n);
                if (2 * ac.alpha < n + 2) continue;  // alpha >= n/2 + 1
                ++part.hypothesis;
                if (std::popcount(ac.common) < 2 * ac.alpha - n)
                    part.first_bad = std::min(part.first_bad, mask);
            }
            return part;
        },
        merge_partial);
    result.cases_checked = merged.cases;
    result.hypothesis_cases = merged.hypothesis;
    result.pass = merged.first_bad == UINT64_MAX;
    if (!result.pass) result.counterexample = describe_graph(n, merged.first_bad);
    return result;
}

SuiteResult union_alpha_bound_suite(int n, int threads) {
    SuiteResult result{"union alpha bound", n, false, 0, 0, ""};
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > 5) throw BudgetExceeded("union alpha bound suite is exhaustive for n <= 5 only");
    const uint64_t space = uint64_t{1} << pair_count(n);
    const std::vector<uint8_t> alpha = alpha_table_for(n);
    ScanPartial merged = parallel_reduce<ScanPartial>(
        0, space, threads, ScanPartial{},
        [n, space, &alpha](uint64_t lo, uint64_t hi) {
            ScanPartial part;
            for (uint64_t a = lo; a < hi; ++a)
                for (uint64_t b = 0; b < space; ++b) {
                    ++part.cases;
                    if (alpha[a | b] + n < alpha[a] + alpha[b])
                        part.first_bad = std::min(part.first_bad, a * space + b);
                }
            return part;
        },
        merge_partial);
    result.cases_checked = merged.cases;
    result.hypothesis_cases = merged.cases;
    result.pass = merged.first_bad == UINT64_MAX;
    if (!result.pass)
        result.counterexample = describe_graph(n, merged.first_bad / space) + " with " +
                                describe_graph(n, merged.first_bad % space);
    return result;
}

SuiteResult union_alpha_bound_random_suite(int n, uint64_t pairs, uint64_t seed) {
    SuiteResult result{"union alpha bound (random pairs)", n, false, 0, 0, ""};
    if (n < 1 || n > 8) throw BudgetExceeded("random union tier supports n <= 8");
    const uint64_t space = uint64_t{1} << pair_count(n);
    std::mt19937_64 rng(seed);
    result.pass = true;
    for (uint64_t k = 0; k < pairs; ++k) {
        const uint64_t a = rng() % space;
        const uint64_t b = rng() % space;
        ++result.cases_checked;
        const int aa = independence_number(Graph::from_mask(n, a));
        const int ab = independence_number(Graph::from_mask(n, b));
        const int au = independence_number(Graph::from_mask(n, a | b));
        if (au + n < aa + ab) {
            result.pass = false;
            result.counterexample = describe_graph(n, a) + " with " + describe_graph(n, b);
            break;
        }
    }
    result.hypothesis_cases = result.cases_checked;
    return result;
}

SuiteResult edge_addition_alpha_suite(int n, int threads) {
    SuiteResult result{"edge addition alpha step", n, false, 0, 0, ""};
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > 6) throw BudgetExceeded("edge addition suite is exhaustive for n <= 6 only");
    const int m = pair_count(n);
    const uint64_t space = uint64_t{1} << m;
    const std::vector<uint8_t> alpha = alpha_table_for(n);
    ScanPartial merged = parallel_reduce<ScanPartial>(
        0, space, threads, ScanPartial{},
        [m, &alpha](uint64_t lo, uint64_t hi) {
            ScanPartial part;
            for (uint64_t mask = lo; mask < hi; ++mask)
                for (int e = 0; e < m; ++e) {
                    if ((mask >> e) & 1) continue;
                    ++part.cases;
                    const int before = alpha[mask];
                    const int after = alpha[mask | (uint64_t{1} << e)];
                    if (after != before && after != before - 1)
                        part.first_bad = std::min(part.first_bad, mask * m + e);
                }
            return part;
        },
        merge_partial);
    result.cases_checked = merged.cases;
    result.hypothesis_cases = merged.cases;
    result.pass = merged.first_bad == UINT64_MAX;
    if (!result.pass)
        result.counterexample = describe_graph(n, merged.first_bad / m) + " adding edge index " +
                                std::to_string(merged.first_bad % m);
    return result;
}

}  // namespace preserver
