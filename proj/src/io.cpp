#include "metrize/io.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include <json.hpp>

namespace metrize {
namespace {

using nlohmann::json;

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

WeightedGraph build_or_rethrow(std::vector<std::string> labels, const std::vector<LabeledEdge>& edges) {
  try {
    return WeightedGraph(std::move(labels), edges);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

double parse_number(std::string_view token, std::size_t line) {
  if (token == "inf" || token == "+inf" || token == "Infinity") return kInf;
  std::string_view body = token;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc() || ptr != body.data() + body.size() || body.empty() || std::isnan(value)) {
    throw ParseError(line, "invalid number '" + std::string(token) + "'");
  }
  return value;
}

WeightedGraph parse_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::set<std::string, std::less<>> known;
  std::vector<LabeledEdge> edges;
  std::set<std::pair<std::string, std::string>> pairs;
  auto declare = [&](std::string_view label) {
    if (known.insert(std::string(label)).second) labels.emplace_back(label);
  };

  auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    std::size_t lineno = n + 1;
    auto line = lines[n];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] == "node") {
      if (tok.size() != 2) throw ParseError(lineno, "expected 'node <label>'");
      declare(tok[1]);
    } else if (tok[0] == "edge") {
      if (tok.size() != 4) throw ParseError(lineno, "expected 'edge <u> <v> <weight>'");
      double w = parse_number(tok[3], lineno) + 0.0;
      if (w < 0.0) throw ParseError(lineno, "negative weight " + std::string(tok[3]));
      if (!std::isfinite(w)) throw ParseError(lineno, "weight must be finite");
      if (tok[1] == tok[2]) throw ParseError(lineno, "self-loop at '" + std::string(tok[1]) + "'");
      std::pair<std::string, std::string> key(tok[1], tok[2]);
      if (key.second < key.first) std::swap(key.first, key.second);
      if (!pairs.insert(key).second) {
        throw ParseError(lineno, "duplicate edge " + key.first + "-" + key.second);
      }
      declare(tok[1]);
      declare(tok[2]);
      edges.push_back({std::string(tok[1]), std::string(tok[2]), w});
    } else {
      throw ParseError(lineno, "unknown directive '" + std::string(tok[0]) + "'");
    }
  }
  return build_or_rethrow(std::move(labels), edges);
}

std::string to_edge_list(const WeightedGraph& g) {
  std::string out;
  for (const auto& l : g.labels()) out += "node " + l + "\n";
  for (const auto& e : g.edges()) {
    out += "edge " + g.label(e.u) + " " + g.label(e.v) + " " + format_number(e.weight) + "\n";
  }
  return out;
}

WeightedGraph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError(0, "graph JSON must be an object");
  std::vector<std::string> labels;
  std::set<std::string> known;
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_array()) throw ParseError(0, "\"vertices\" must be an array");
    for (const auto& v : doc["vertices"]) {
      if (!v.is_string()) throw ParseError(0, "vertex labels must be strings");
      if (known.insert(v.get<std::string>()).second) labels.push_back(v.get<std::string>());
    }
  }
  std::vector<LabeledEdge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError(0, "\"edges\" must be an array");
    std::size_t idx = 0;
    for (const auto& e : doc["edges"]) {
      ++idx;
      if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() ||
          !e[2].is_number()) {
        throw ParseError(0, "edge #" + std::to_string(idx) + " must be [u, v, weight]");
      }
      auto u = e[0].get<std::string>();
      auto v = e[1].get<std::string>();
      if (known.insert(u).second) labels.push_back(u);
      if (known.insert(v).second) labels.push_back(v);
      edges.push_back({u, v, e[2].get<double>()});
    }
  }
  return build_or_rethrow(std::move(labels), edges);
}

std::string to_graph_json(const WeightedGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({g.label(e.u), g.label(e.v), e.weight});
  return json{{"vertices", g.labels()}, {"edges", edges}}.dump();
}

std::string to_tsv(const DistanceMatrix& m) {
  std::string out;
  const auto& l = m.labels();
  for (std::size_t j = 0; j < l.size(); ++j) {
    out += l[j];
    out += j + 1 < l.size() ? "\t" : "";
  }
  out += "\n";
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = 0; j < l.size(); ++j) {
      out += format_number(m.at(i, j));
      out += j + 1 < l.size() ? "\t" : "";
    }
    out += "\n";
  }
  return out;
}

DistanceMatrix parse_tsv(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t n = 0;
  while (n < lines.size() && split_ws(lines[n]).empty()) ++n;
  if (n == lines.size()) throw ParseError(0, "empty matrix");
  std::vector<std::string> labels;
  for (auto t : split_ws(lines[n])) labels.emplace_back(t);
  std::set<std::string> uniq(labels.begin(), labels.end());
  if (uniq.size() != labels.size()) throw ParseError(n + 1, "duplicate label in header");
  std::vector<std::vector<double>> rows;
  for (std::size_t i = n + 1; i < lines.size(); ++i) {
    auto tok = split_ws(lines[i]);
    if (tok.empty()) continue;
    if (tok.size() != labels.size()) {
      throw ParseError(i + 1, "expected " + std::to_string(labels.size()) + " entries");
    }
    std::vector<double> row;
    for (auto t : tok) row.push_back(parse_number(t, i + 1));
    rows.push_back(std::move(row));
  }
  if (rows.size() != labels.size()) throw ParseError(0, "matrix must be square");
  // Stored in the canonical (sorted) label order.
  std::vector<std::size_t> order(labels.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return labels[a] < labels[b]; });
  std::vector<std::string> sorted;
  for (auto i : order) sorted.push_back(labels[i]);
  DistanceMatrix m(sorted, 0.0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < order.size(); ++j) m.at(i, j) = rows[order[i]][order[j]];
  }
  return m;
}

std::string to_matrix_json(const DistanceMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (double x : m.row(i)) {
      if (std::isinf(x)) {
        row.push_back("inf");
      } else {
        row.push_back(x);
      }
    }
    rows.push_back(std::move(row));
  }
  return json{{"vertices", m.labels()}, {"matrix", rows}}.dump();
}

DistanceMatrix parse_matrix_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("matrix")) {
    throw ParseError(0, "matrix JSON needs \"vertices\" and \"matrix\"");
  }
  // Reuse the TSV path for reordering and validation.
  std::string tsv;
  for (const auto& l : doc["vertices"]) {
    if (!l.is_string()) throw ParseError(0, "vertex labels must be strings");
    tsv += l.get<std::string>() + "\t";
  }
  tsv += "\n";
  for (const auto& row : doc["matrix"]) {
    if (!row.is_array()) throw ParseError(0, "matrix rows must be arrays");
    for (const auto& x : row) {
      if (x.is_string() && x.get<std::string>() == "inf") {
        tsv += "inf\t";
      } else if (x.is_number()) {
        tsv += format_number(x.get<double>()) + "\t";
      } else {
        throw ParseError(0, "matrix entries must be numbers or \"inf\"");
      }
    }
    tsv += "\n";
  }
  return parse_tsv(tsv);
}

}  // namespace metrize
