#pragma once

// Text and JSON forms for graphs, maps, and matrices. All forms are
// bit-exact round-trippable and emitted in canonical order so repeated
// runs produce identical bytes.

#include <optional>
#include <string>

#include <json.hpp>

#include "preserver/classifier.hpp"
#include "preserver/graph.hpp"
#include "preserver/linear_map.hpp"
#include "preserver/matrix.hpp"
#include "preserver/turan.hpp"

namespace preserver {

using json = nlohmann::ordered_json;

// "n:m:hex" with m = n(n-1)/2 and the edge bitset in hex, most
// significant nibble first.
std::string to_g6lite(const Graph& g);
Graph graph_from_g6lite(const std::string& text);

// {"n":5,"edges":[[1,2],[3,4]]}
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// {"n":4,"images":{"1,2":[[1,3]],...}}; omitted generators mean empty.
json map_to_json(const GraphLinearMap& map);
GraphLinearMap map_from_json(const json& j);

// {"n":3,"ut":["0","1/2","3"]} in canonical pair order.
json matrix_to_json(const SymMatrix& a);
SymMatrix matrix_from_json(const json& j);

// {"n":3,"coeffs":[["1","0",...],...]}, row = output generator.
json matrix_map_to_json(const MatrixLinearMap& map);
MatrixLinearMap matrix_map_from_json(const json& j);

json turan_report_json(const TuranBoundReport& report);

// Summary of a classification run; excludes wall time so files are
// byte-stable across reruns. The verdicts apply to independence mode and
// are emitted as null when absent (clique-mode results are reported, not
// measured against a fixed family).
json classification_summary_json(const ClassificationReport& report,
                                 const PermutationFamilyVerdict* family,
                                 const StructuralVerdict* structure);

std::string map_csv_header(int n);
std::string map_csv_row(const GraphLinearMap& map);

// Input sniffing for CLI commands that accept a graph or a matrix.
struct ParsedInput {
    std::optional<Graph> graph;
    std::optional<SymMatrix> matrix;
};
ParsedInput parse_input_text(const std::string& text);

}  // namespace preserver
