#pragma once

#include <string_view>
#include <vector>

#include "metrize/graph.hpp"

namespace metrize {

/// Anchors and constants for extending a weight across components.
/// Components are indexed as in connected_components().
struct CompletionSpec {
  std::vector<VertexId> anchors;  // anchors[i] lies in component i
  std::size_t base = 0;           // constants[base] == 0
  std::vector<double> constants;  // all >= 0
};

/// Anchor = smallest vertex of each component, base = component of the
/// smallest vertex, constant 1 for every other component.
CompletionSpec default_completion_spec(const WeightedGraph& g);

/// Throws PreconditionError unless spec fits the components of g.
void validate_completion_spec(const WeightedGraph& g, const CompletionSpec& spec);

/// Within a component: the component's shortest-path distance. Across
/// components i != j: a_i + a_j + d(u, anchor_i) + d(v, anchor_j).
/// Throws PreconditionError if w is not metrizable or the spec is invalid.
DistanceMatrix complete_disconnected(const WeightedGraph& g, const CompletionSpec& spec,
                                     double eps = kDefaultEps);

/// g plus an edge {anchor_i, anchor_base} of weight a_i for every i != base.
WeightedGraph star_supergraph(const WeightedGraph& g, const CompletionSpec& spec);

/// {"anchors": {rep: label}, "base": rep, "constants": {rep: number}}, where
/// rep is the smallest label of a component. Missing keys fall back to the
/// default spec.
CompletionSpec parse_completion_spec(const WeightedGraph& g, std::string_view json_text);
std::string to_completion_json(const WeightedGraph& g, const CompletionSpec& spec);

}  // namespace metrize
