#pragma once

#include <string>
#include <string_view>

#include "metrize/graph.hpp"

namespace metrize {

// Edge-list text:
//   # comment to end of line
//   node <label>
//   edge <u> <v> <weight>
// Vertices mentioned only in edges are declared implicitly.
WeightedGraph parse_edge_list(std::string_view text);
/// Canonical edge-list text: every vertex as a `node` line, then edges sorted.
std::string to_edge_list(const WeightedGraph& g);

/// {"vertices": [labels], "edges": [[u, v, weight], ...]}
WeightedGraph parse_graph_json(std::string_view text);
std::string to_graph_json(const WeightedGraph& g);

/// Header row of labels, then one row per vertex; +inf written as `inf`.
std::string to_tsv(const DistanceMatrix& m);
DistanceMatrix parse_tsv(std::string_view text);

/// {"vertices": [labels], "matrix": [[...]]}; +inf written as the string "inf".
std::string to_matrix_json(const DistanceMatrix& m);
DistanceMatrix parse_matrix_json(std::string_view text);

/// Shortest decimal text that reads back to the same double; `inf` for +inf.
std::string format_number(double x);
/// Accepts decimal, scientific notation and `inf`. Throws ParseError.
double parse_number(std::string_view token, std::size_t line = 0);

}  // namespace metrize
