#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "metrize/graph.hpp"

// Exponential-time ground truth taken straight from the definitions: cycle
// enumeration, path enumeration, and the path-supremum form of the least
// pseudometric. Used by the tests and by `metrize oracle`.
namespace metrize::oracle {

inline constexpr std::size_t kDefaultSafetyBound = 10;

class SafetyBoundExceeded : public Error {
 public:
  using Error::Error;
};

struct Limits {
  std::size_t max_vertices = kDefaultSafetyBound;
  bool force = false;
};

/// Simple cycle as a closed vertex sequence (first == last). Canonical form:
/// starts at its smallest vertex, and the second vertex is smaller than the
/// second-to-last.
using Cycle = std::vector<VertexId>;

/// Calls `visit` once per simple cycle with at most `max_len` edges (0 means
/// no limit), in a fixed order. Returning false from `visit` stops early.
void for_each_cycle(const WeightedGraph& g, std::size_t max_len,
                    const std::function<bool(const Cycle&)>& visit, Limits limits = {});
std::vector<Cycle> enumerate_cycles(const WeightedGraph& g, std::size_t max_len = 0, Limits limits = {});

struct CycleCheck {
  bool holds = true;
  std::optional<Cycle> violation;
};

/// Checks 2 * max edge <= total weight (+ eps) on every cycle.
CycleCheck cycle_condition_holds(const WeightedGraph& g, double eps = kDefaultEps, Limits limits = {});

/// sup over simple u-v paths P of max over edges e of P of (2 w(e) - w(P))_+.
/// Throws PreconditionError for equal or adjacent u, v. With `prune`, path
/// prefixes that provably cannot raise the supremum are skipped; the result
/// is the same as the plain enumeration.
double rho0_path_sup(const WeightedGraph& g, VertexId u, VertexId v, Limits limits = {}, bool prune = true);

/// Infimum of path weights over every simple path; +inf when none.
DistanceMatrix exhaustive_all_pairs(const WeightedGraph& g, Limits limits = {});

/// For every edge, whether it lies on some enumerated cycle.
std::vector<bool> edges_on_cycles(const WeightedGraph& g, Limits limits = {});

/// Some distinct nonadjacent u, v and a p adjacent to exactly one of them:
/// the obstruction to being complete multipartite.
bool has_forbidden_triple(const WeightedGraph& g);

enum class GraphClass { kArbitrary, kConnected, kForest, kMultipartite };

struct InstanceGenerator {
  std::uint64_t seed = 0;
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 6;
  double max_weight = 10.0;
  double zero_probability = 0.0;  // chance that a weight is exactly 0
  double edge_probability = 0.5;  // arbitrary / connected classes
  GraphClass graph_class = GraphClass::kArbitrary;
  /// kMultipartite: explicit part sizes, or random k in [min_parts, max_parts]
  /// with sizes in [1, max_part_size] when empty.
  std::vector<std::size_t> part_sizes;
  std::size_t min_parts = 2;
  std::size_t max_parts = 4;
  std::size_t max_part_size = 3;
  /// Weights are |x_u - x_v| for random points x on [0, max_weight].
  bool metrizable = false;
};

/// Labels are "v" followed by a zero-padded index, so label order is index
/// order. Deterministic per seed.
WeightedGraph generate(const InstanceGenerator& spec);

}  // namespace metrize::oracle
