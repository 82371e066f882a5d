#pragma once

#include <optional>
#include <vector>

#include "metrize/graph.hpp"

namespace metrize {

/// A simple path and its total weight.
struct PathRecord {
  std::vector<VertexId> vertices;
  double weight = 0.0;
};

enum class ApspMethod {
  kDijkstra,  // one priority-queue run per source
  kDense,     // triple-loop relaxation
};

/// Distances from `source` to every vertex (+inf when unreachable). When
/// `skip_edge` is set, that edge (index into g.edges()) is treated as absent.
std::vector<double> single_source_distances(const WeightedGraph& g, VertexId source,
                                            std::optional<std::size_t> skip_edge = std::nullopt);

/// Weighted shortest-path pseudometric: entry (u, v) is the least total
/// weight of a u-v path, +inf across components. Sources run in parallel.
DistanceMatrix all_pairs_distance(const WeightedGraph& g, ApspMethod method = ApspMethod::kDijkstra);

/// Minimum-weight simple u-v path, ties broken by the lexicographically
/// smallest vertex sequence; nullopt when u and v are disconnected.
/// Throws PreconditionError if u or v is out of range.
std::optional<PathRecord> shortest_path_witness(const WeightedGraph& g, VertexId u, VertexId v,
                                                std::optional<std::size_t> skip_edge = std::nullopt);

namespace serial {

// Single-threaded references for the parallel kernels above.
DistanceMatrix all_pairs_distance(const WeightedGraph& g, ApspMethod method = ApspMethod::kDijkstra);

}  // namespace serial

}  // namespace metrize
