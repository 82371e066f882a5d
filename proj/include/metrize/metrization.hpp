#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metrize/graph.hpp"

namespace metrize {

/// A cycle v0, v1, ..., v0 whose heaviest edge outweighs the rest of the
/// cycle: lhs = 2 * w(max_edge) > rhs = w(cycle).
struct CycleWitness {
  std::vector<VertexId> cycle;  // first == last
  Edge max_edge;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct MetrizabilityReport {
  bool metrizable = true;
  std::optional<CycleWitness> witness;  // present iff !metrizable
  std::size_t checked_edges = 0;
  /// max over edges of w(e) - d_w(e); 0 for edgeless graphs.
  double worst_slack = 0.0;
};

/// Decides whether w extends to a pseudometric: every edge must satisfy
/// w(u, v) - d_w(u, v) <= eps. On failure the first failing edge (in edge
/// order) is closed into a cycle by a shortest path of G minus that edge.
MetrizabilityReport check_metrizable(const WeightedGraph& g, double eps = kDefaultEps);

/// Edges lying on no cycle, in edge order. Iterative low-link DFS.
std::vector<Edge> bridges(const WeightedGraph& g);

/// True iff every listed edge (as indices into g.edges()) is a bridge, i.e.
/// those edges can be reweighted freely without losing metrizability.
/// Throws PreconditionError for an out-of-range index.
bool free_reweight_set(const WeightedGraph& g, std::span<const std::size_t> edge_set);

bool is_forest(const WeightedGraph& g);

struct MetricExistence {
  bool exists = false;
  std::string explanation;
};

/// Whether some metric (not only a pseudometric) agrees with w on every edge.
MetricExistence metric_exists(const WeightedGraph& g, double eps = kDefaultEps);

/// Is m a pseudometric on V(g) agreeing with w on every edge (within eps)?
/// Reports the first failing pair, edge, or triple. Throws PreconditionError
/// when m is not indexed by the vertices of g.
Verdict validate_membership(const WeightedGraph& g, const DistanceMatrix& m, double eps = kDefaultEps);

/// First (i, j, k) in lexicographic order with m(i,j) > m(i,k) + m(k,j) + eps.
/// Parallel over i.
std::optional<std::array<VertexId, 3>> find_triangle_violation(const DistanceMatrix& m, double eps);

namespace serial {

std::optional<std::array<VertexId, 3>> find_triangle_violation(const DistanceMatrix& m, double eps);

}  // namespace serial

/// Sum of edge weights along a closed vertex sequence.
double cycle_weight(const WeightedGraph& g, std::span<const VertexId> cycle);

}  // namespace metrize
