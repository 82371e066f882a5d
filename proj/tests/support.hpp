#pragma once

#include <string>

#include "metrize/graph.hpp"
#include "metrize/io.hpp"
#include "metrize/oracle.hpp"

namespace metrize::test {

inline WeightedGraph graph(const std::string& edge_list) { return parse_edge_list(edge_list); }

inline VertexId id(const WeightedGraph& g, const std::string& label) { return g.id(label); }

// Mixed-class instance for property sweeps, deterministic in `seed`.
inline WeightedGraph mixed_instance(std::uint64_t seed, std::size_t max_vertices, double zero_prob = 0.1) {
  oracle::InstanceGenerator gen;
  gen.seed = seed;
  gen.min_vertices = 1;
  gen.max_vertices = max_vertices;
  gen.zero_probability = zero_prob;
  gen.edge_probability = 0.3 + 0.1 * static_cast<double>(seed % 6);
  static constexpr oracle::GraphClass classes[] = {oracle::GraphClass::kArbitrary,
                                                   oracle::GraphClass::kConnected,
                                                   oracle::GraphClass::kForest,
                                                   oracle::GraphClass::kMultipartite};
  gen.graph_class = classes[seed % 4];
  gen.max_part_size = 2;
  gen.max_parts = 3;
  gen.metrizable = (seed / 4) % 3 == 0;
  return oracle::generate(gen);
}

inline WeightedGraph multipartite_instance(std::uint64_t seed, std::size_t max_part_size,
                                           std::size_t max_parts = 4) {
  oracle::InstanceGenerator gen;
  gen.seed = seed;
  gen.graph_class = oracle::GraphClass::kMultipartite;
  gen.min_parts = 2;
  gen.max_parts = max_parts;
  gen.max_part_size = max_part_size;
  gen.metrizable = true;
  return oracle::generate(gen);
}

}  // namespace metrize::test
