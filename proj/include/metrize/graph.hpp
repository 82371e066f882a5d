#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace metrize {

using VertexId = std::size_t;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kDefaultEps = 1e-9;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text could not be parsed; carries the 1-based line number (0 when
/// the problem is not tied to a line).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

struct Edge {
  VertexId u;  // u < v
  VertexId v;
  double weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edge given by endpoint labels, as it appears in input files.
struct LabeledEdge {
  std::string u;
  std::string v;
  double weight;
};

/// Finite simple graph with nonnegative finite edge weights.
///
/// Vertices are identified by label and stored in lexicographic order, so a
/// VertexId is the rank of the label. Edges are stored with u < v, sorted by
/// (u, v). Immutable after construction.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Throws Error on self-loops, duplicate unordered pairs, unknown
  /// endpoints, duplicate labels, or negative / non-finite weights.
  WeightedGraph(std::vector<std::string> labels, std::span<const LabeledEdge> edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_.at(v); }
  std::optional<VertexId> find(std::string_view label) const;
  /// Like find() but throws PreconditionError for unknown labels.
  VertexId id(std::string_view label) const;

  const std::vector<Edge>& edges() const { return edges_; }

  /// Neighbours of v in increasing id order, with the weight of the edge.
  std::span<const std::pair<VertexId, double>> neighbors(VertexId v) const {
    return adjacency_.at(v);
  }

  bool adjacent(VertexId u, VertexId v) const { return weight(u, v).has_value(); }
  std::optional<double> weight(VertexId u, VertexId v) const;
  /// Index of edge {u, v} in edges(), if present.
  std::optional<std::size_t> edge_index(VertexId u, VertexId v) const;

  /// Copy of this graph without the given edges (by index into edges()).
  WeightedGraph without_edges(std::span<const std::size_t> removed) const;
  /// Induced subgraph on the given vertices.
  WeightedGraph induced(std::span<const VertexId> keep) const;
  /// Copy with the weight of one edge replaced.
  WeightedGraph reweighted(std::size_t edge, double weight) const;
  /// Copy with extra edges added.
  WeightedGraph with_edges(std::span<const LabeledEdge> extra) const;

  std::vector<LabeledEdge> labeled_edges() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<VertexId, double>>> adjacency_;
};

/// Maximal connected vertex sets; each sorted, list sorted by smallest member.
std::vector<std::vector<VertexId>> connected_components(const WeightedGraph& g);

/// Component index of every vertex, numbered as in connected_components().
std::vector<std::size_t> component_index(const WeightedGraph& g);

/// Symmetric nonnegative matrix over a labelled vertex set; +inf allowed.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::vector<std::string> labels, double fill);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  double& at(VertexId i, VertexId j) { return data_[i * labels_.size() + j]; }
  double at(VertexId i, VertexId j) const { return data_[i * labels_.size() + j]; }

  /// Sets both (i, j) and (j, i).
  void set_symmetric(VertexId i, VertexId j, double value) {
    at(i, j) = value;
    at(j, i) = value;
  }

  std::span<const double> row(VertexId i) const {
    return {data_.data() + i * labels_.size(), labels_.size()};
  }
  std::span<const double> data() const { return data_; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<double> data_;
};

/// Result of a check that either passes or names its first failure.
struct Verdict {
  bool ok = true;
  std::string violation;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

/// Symmetry and zero diagonal only; the triangle inequality is not checked.
Verdict validate_matrix_shape(const DistanceMatrix& m, double eps = 0.0);

/// Largest |a - b| over all entries; +inf entries must match exactly.
double max_abs_difference(const DistanceMatrix& a, const DistanceMatrix& b);

}  // namespace metrize
