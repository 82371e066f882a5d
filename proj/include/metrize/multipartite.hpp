#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "metrize/graph.hpp"

namespace metrize {

/// Parts of a complete multipartite graph: no edge inside a part, every
/// cross-part pair adjacent. Parts sorted internally and by smallest member.
struct Partition {
  std::vector<std::vector<VertexId>> parts;

  std::size_t k() const { return parts.size(); }
  /// Part index of every vertex.
  std::vector<std::size_t> part_of(std::size_t vertex_count) const;
};

/// Returns the classes of the non-adjacency relation when it is an
/// equivalence (the graph is complete multipartite), otherwise nullopt.
std::optional<Partition> detect_partition(const WeightedGraph& g);

/// Least member of the extension set, defined for complete k-partite graphs
/// with k >= 2 and metrizable w:
///   adjacent u, v:       w(u, v)
///   u != v in part X:    max over p outside X of |w(u, p) - w(p, v)|
/// Throws PreconditionError when the graph is not complete multipartite,
/// k < 2, or w is not metrizable.
DistanceMatrix least_pseudometric(const WeightedGraph& g, double eps = kDefaultEps);

namespace serial {

DistanceMatrix least_pseudometric(const WeightedGraph& g, double eps = kDefaultEps);

}  // namespace serial

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

/// [least(u, v), d_w(u, v)] for a distinct nonadjacent pair. Also checks that
/// d_w(u, v) equals the best two-edge path u-p-v and throws Error if not.
Interval greatest_vs_least_interval(const WeightedGraph& g, VertexId u, VertexId v,
                                    double eps = kDefaultEps);

enum class SandwichStatus {
  kMember,            // least <= f <= d_w and f is a member
  kOutsideSandwich,   // f escapes the bounds and is not a member
  kTheoremViolation,  // the two checks disagree; must never happen
};

struct SandwichResult {
  SandwichStatus status = SandwichStatus::kMember;
  std::string detail;
  bool ok() const { return status == SandwichStatus::kMember; }
};

/// Requires a complete k-partite graph (k >= 2) whose parts have at most two
/// vertices, metrizable w, and f symmetric with zero diagonal; each failed
/// precondition throws PreconditionError. Checks the sandwich bounds and
/// membership independently and reports whether they agree.
SandwichResult sandwich_validate(const WeightedGraph& g, const DistanceMatrix& f,
                                 double eps = kDefaultEps);

/// Random member: edge entries fixed to w, every nonadjacent pair drawn
/// uniformly from [least, d_w] with a per-pair stream derived from `seed`.
DistanceMatrix sandwich_sample(const WeightedGraph& g, std::uint64_t seed, double eps = kDefaultEps);

/// Complete bipartite with a singleton side (K_{1,n}, n >= 1).
bool is_star(const WeightedGraph& g);

/// Quadrilateral v1-v2-v3-v4-v1 with w(v1v2)=a, w(v2v3)=b, w(v3v4)=c, w(v4v1)=k.
struct QuadReport {
  double a = 0, b = 0, c = 0, k = 0;
  bool metrizable = false;
  Interval v1v3;
  Interval v2v4;
};

/// Throws PreconditionError on negative or non-finite input.
QuadReport analyze_quadrilateral(double a, double b, double c, double k);
WeightedGraph quadrilateral(double a, double b, double c, double k);

}  // namespace metrize
