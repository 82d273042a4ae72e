#include "preserver/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "preserver/errors.hpp"

namespace preserver {

namespace {

int hex_digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

int parse_positive_int(const std::string& s, const char* what) {
    try {
        size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size() || v < 0) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(std::string("bad ") + what + ": '" + s + "'");
    }
}

}  // namespace

std::string to_g6lite(const Graph& g) {
    const int m = g.pair_bits();
    const int nibbles = (m + 3) / 4;
    std::string hex;
    hex.reserve(nibbles);
    for (int k = nibbles - 1; k >= 0; --k) {
        int digit = 0;
        for (int b = 0; b < 4; ++b) {
            const int idx = 4 * k + b;
            if (idx < m && g.edge_bit(idx)) digit |= 1 << b;
        }
        hex += "0123456789abcdef"[digit];
    }
    return std::to_string(g.order()) + ":" + std::to_string(m) + ":" + hex;
}

Graph graph_from_g6lite(const std::string& text) {
    const std::string s = trim(text);
    const auto c1 = s.find(':');
    const auto c2 = s.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw ParseError("g6-lite needs the form n:m:hex, got '" + s + "'");
    const int n = parse_positive_int(s.substr(0, c1), "vertex count");
    const int m = parse_positive_int(s.substr(c1 + 1, c2 - c1 - 1), "pair count");
    const std::string hex = s.substr(c2 + 1);
    if (n < 1 || n > kMaxVertices) throw ParseError("vertex count out of range");
    if (m != pair_count(n)) throw ParseError("pair count does not match n(n-1)/2");
    const int nibbles = (m + 3) / 4;
    if (static_cast<int>(hex.size()) != nibbles)
        throw ParseError("hex field must have " + std::to_string(nibbles) + " digits");
    Graph g(n);
    for (int k = 0; k < nibbles; ++k) {
        const int digit = hex_digit_value(hex[nibbles - 1 - k]);
        if (digit < 0) throw ParseError("bad hex digit in g6-lite");
        for (int b = 0; b < 4; ++b) {
            if (!((digit >> b) & 1)) continue;
            const int idx = 4 * k + b;
            if (idx >= m) throw ParseError("edge bit beyond pair count");
            g.set_edge_bit(idx);
        }
    }
    return g;
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [i, j] : g.edge_list()) edges.push_back({i, j});
    return json{{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    try {
        Graph g(j.at("n").get<int>());
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("edge entries must be pairs");
            g.add_edge(e[0].get<int>(), e[1].get<int>());
        }
        return g;
    } catch (const json::exception& ex) {
        throw ParseError(std::string("bad graph json: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw ParseError(std::string("bad graph json: ") + ex.what());
    }
}

json map_to_json(const GraphLinearMap& map) {
    const int n = map.order();
    json images = json::object();
    for (int e = 0; e < map.generator_count(); ++e) {
        const Graph& img = map.image(e);
        if (img.is_empty()) continue;
        const auto [i, j] = pair_from_index(n, e);
        json edges = json::array();
        for (const auto& [a, b] : img.edge_list()) edges.push_back({a, b});
        images[std::to_string(i) + "," + std::to_string(j)] = std::move(edges);
    }
    return json{{"n", n}, {"images", std::move(images)}};
}

GraphLinearMap map_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<Graph> images(pair_count(n), Graph(n));
        for (const auto& [key, edges] : j.at("images").items()) {
            const auto comma = key.find(',');
            if (comma == std::string::npos) throw ParseError("generator key must be 'i,j'");
            const int i = parse_positive_int(key.substr(0, comma), "generator vertex");
            const int jj = parse_positive_int(key.substr(comma + 1), "generator vertex");
            Graph img(n);
            for (const auto& e : edges) {
                if (!e.is_array() || e.size() != 2) throw ParseError("edge entries must be pairs");
                img.add_edge(e[0].get<int>(), e[1].get<int>());
            }
            images.at(pair_index(n, i, jj)) = std::move(img);
        }
        return GraphLinearMap(n, std::move(images));
    } catch (const json::exception& ex) {
        throw ParseError(std::string("bad map json: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw ParseError(std::string("bad map json: ") + ex.what());
    }
}

json matrix_to_json(const SymMatrix& a) {
    json ut = json::array();
    for (int k = 0; k < a.pair_bits(); ++k) ut.push_back(a.upper_entry(k).str());
    return json{{"n", a.order()}, {"ut", std::move(ut)}};
}

SymMatrix matrix_from_json(const json& j) {
    try {
        SymMatrix a(j.at("n").get<int>());
        const auto& ut = j.at("ut");
        if (static_cast<int>(ut.size()) != a.pair_bits())
            throw ParseError("ut must list all n(n-1)/2 entries");
        for (int k = 0; k < a.pair_bits(); ++k)
            a.set_upper_entry(k, Rational::parse(ut[k].get<std::string>()));
        return a;
    } catch (const json::exception& ex) {
        throw ParseError(std::string("bad matrix json: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw ParseError(std::string("bad matrix json: ") + ex.what());
    }
}

json matrix_map_to_json(const MatrixLinearMap& map) {
    const int m = map.generator_count();
    json rows = json::array();
    for (int r = 0; r < m; ++r) {
        json row = json::array();
        for (int c = 0; c < m; ++c) row.push_back(map.coeff(r, c).str());
        rows.push_back(std::move(row));
    }
    return json{{"n", map.order()}, {"coeffs", std::move(rows)}};
}

MatrixLinearMap matrix_map_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        const int m = pair_count(n);
        const auto& rows = j.at("coeffs");
        if (static_cast<int>(rows.size()) != m) throw ParseError("coeffs must have m rows");
        std::vector<Rational> coeffs(static_cast<size_t>(m) * m);
        for (int r = 0; r < m; ++r) {
            if (static_cast<int>(rows[r].size()) != m)
                throw ParseError("coeffs rows must have m entries");
            for (int c = 0; c < m; ++c)
                coeffs[static_cast<size_t>(r) * m + c] =
                    Rational::parse(rows[r][c].get<std::string>());
        }
        return MatrixLinearMap(n, std::move(coeffs));
    } catch (const json::exception& ex) {
        throw ParseError(std::string("bad matrix map json: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw ParseError(std::string("bad matrix map json: ") + ex.what());
    }
}

json turan_report_json(const TuranBoundReport& report) {
    return json{{"n", report.n},
                {"r", report.r},
                {"bound", report.bound.str()},
                {"min_size", report.min_size},
                {"alpha_class_count", report.alpha_class_count},
                {"extremal_count", report.extremal_count},
                {"pass", report.pass}};
}

json classification_summary_json(const ClassificationReport& report,
                                 const PermutationFamilyVerdict* family,
                                 const StructuralVerdict* structure) {
    json pruned = json::object();
    for (const auto& [rule, count] : report.nodes_pruned_by_rule) pruned[rule] = count;
    json out{
        {"schema_version", 1},
        {"command", "classify"},
        {"n", report.n},
        {"t", report.t},
        {"mode", report.mode == PreserverMode::independence ? "independence" : "clique"},
        {"pruning", report.pruning},
        {"symmetry_reduction", report.symmetry_reduction},
        {"satisfying_count", report.satisfying_maps.size()},
        {"vertex_permutations", report.vertex_permutation_count},
        {"edge_permutations", report.edge_permutation_count},
        {"other", report.other_count},
        {"nodes_expanded", report.nodes_expanded},
        {"leaves_visited", report.leaves_visited},
        {"nodes_pruned", std::move(pruned)},
        {"family_verdict", nullptr},
        {"structural_verdict", nullptr},
    };
    if (family != nullptr)
        out["family_verdict"] = json{{"expected_family", family->expected_family},
                                     {"expected_count", family->expected_count},
                                     {"actual_count", family->actual_count},
                                     {"pass", family->pass}};
    if (structure != nullptr)
        out["structural_verdict"] = json{{"maps_checked", structure->maps_checked},
                                         {"failures", structure->failures},
                                         {"pass", structure->pass}};
    return out;
}

std::string map_csv_header(int n) {
    std::string out;
    for (int e = 0; e < pair_count(n); ++e) {
        const auto [i, j] = pair_from_index(n, e);
        if (e) out += ",";
        out += "g" + std::to_string(i) + "-" + std::to_string(j);
    }
    return out;
}

std::string map_csv_row(const GraphLinearMap& map) {
    std::string out;
    for (int e = 0; e < map.generator_count(); ++e) {
        if (e) out += ",";
        const auto edges = map.image(e).edge_list();
        if (edges.empty()) {
            out += "-";
            continue;
        }
        for (size_t k = 0; k < edges.size(); ++k) {
            if (k) out += ";";
            out += std::to_string(edges[k].first) + "-" + std::to_string(edges[k].second);
        }
    }
    return out;
}

ParsedInput parse_input_text(const std::string& text) {
    const std::string s = trim(text);
    if (s.empty()) throw ParseError("empty input");
    ParsedInput out;
    if (s.front() == '{') {
        json j;
        try {
            j = json::parse(s);
        } catch (const json::exception& ex) {
            throw ParseError(std::string("bad json: ") + ex.what());
        }
        if (j.contains("edges"))
            out.graph = graph_from_json(j);
        else if (j.contains("ut"))
            out.matrix = matrix_from_json(j);
        else
            throw ParseError("json input needs an 'edges' (graph) or 'ut' (matrix) field");
        return out;
    }
    out.graph = graph_from_g6lite(s);
    return out;
}

}  // namespace preserver
