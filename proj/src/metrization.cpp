#include "metrize/metrization.hpp"

#include <algorithm>
#include <cmath>

#include "metrize/io.hpp"
#include "metrize/shortest_path.hpp"

namespace metrize {
namespace {

std::string pair_name(const std::vector<std::string>& l, VertexId i, VertexId j) {
  return "(" + l[i] + "," + l[j] + ")";
}

std::optional<std::array<VertexId, 3>> first_violation_in_row(const DistanceMatrix& m, VertexId i,
                                                               double eps) {
  const std::size_t n = m.size();
  for (VertexId j = i + 1; j < n; ++j) {
    double ij = m.at(i, j);
    for (VertexId k = 0; k < n; ++k) {
      if (ij > m.at(i, k) + m.at(k, j) + eps) return std::array{i, j, k};
    }
  }
  return std::nullopt;
}

}  // namespace

double cycle_weight(const WeightedGraph& g, std::span<const VertexId> cycle) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
    auto w = g.weight(cycle[i], cycle[i + 1]);
    if (!w) throw PreconditionError("cycle uses a non-edge");
    total += *w;
  }
  return total;
}

MetrizabilityReport check_metrizable(const WeightedGraph& g, double eps) {
  if (eps < 0.0) throw PreconditionError("eps must be nonnegative");
  MetrizabilityReport report;
  report.checked_edges = g.edge_count();
  if (g.edge_count() == 0) return report;

  const DistanceMatrix d = all_pairs_distance(g);
  std::optional<std::size_t> failing;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    double slack = e.weight - d.at(e.u, e.v);
    report.worst_slack = std::max(report.worst_slack, slack);
    if (slack > eps && !failing) failing = i;
  }
  if (!failing) return report;

  // The shortest u-v path avoiding the edge itself closes the witness cycle.
  const Edge& e = g.edges()[*failing];
  auto path = shortest_path_witness(g, e.u, e.v, failing);
  if (!path) throw Error("check_metrizable: violating edge has no alternative path");
  CycleWitness w;
  w.cycle = path->vertices;
  w.cycle.push_back(e.u);
  w.max_edge = e;
  w.lhs = 2.0 * e.weight;
  w.rhs = e.weight + path->weight;
  report.metrizable = false;
  report.witness = std::move(w);
  return report;
}

std::vector<Edge> bridges(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order(n, unset), low(n, 0);
  std::vector<bool> is_bridge(g.edge_count(), false);
  std::size_t clock = 0;

  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next;  // position in neighbour list
  };
  std::vector<Frame> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (order[root] != unset) continue;
    order[root] = low[root] = clock++;
    stack.push_back({root, root, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        VertexId y = nb[f.next++].first;
        if (y == f.parent) continue;  // simple graph: one edge back to the parent
        if (order[y] == unset) {
          order[y] = low[y] = clock++;
          stack.push_back({y, f.v, 0});
        } else {
          low[f.v] = std::min(low[f.v], order[y]);
        }
        continue;
      }
      VertexId v = f.v;
      VertexId p = f.parent;
      stack.pop_back();
      if (v == p) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] > order[p]) is_bridge[*g.edge_index(p, v)] = true;
    }
  }
  std::vector<Edge> out;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (is_bridge[i]) out.push_back(g.edges()[i]);
  }
  return out;
}

bool free_reweight_set(const WeightedGraph& g, std::span<const std::size_t> edge_set) {
  for (auto i : edge_set) {
    if (i >= g.edge_count()) throw PreconditionError("edge is not in the graph");
  }
  auto br = bridges(g);
  return std::all_of(edge_set.begin(), edge_set.end(), [&](std::size_t i) {
    return std::find(br.begin(), br.end(), g.edges()[i]) != br.end();
  });
}

bool is_forest(const WeightedGraph& g) {
  return g.edge_count() + connected_components(g).size() == g.vertex_count();
}

MetricExistence metric_exists(const WeightedGraph& g, double eps) {
  if (!check_metrizable(g, eps).metrizable) return {false, "not metrizable"};
  const DistanceMatrix d = all_pairs_distance(g);
  const auto comp = component_index(g);
  const auto& l = g.labels();
  for (VertexId i = 0; i < g.vertex_count(); ++i) {
    for (VertexId j = i + 1; j < g.vertex_count(); ++j) {
      if (comp[i] == comp[j] && d.at(i, j) <= eps) {
        return {false, "shortest-path distance " + pair_name(l, i, j) + " is " +
                           format_number(d.at(i, j)) + ", so every extension identifies them"};
      }
    }
  }
  auto k = connected_components(g).size();
  if (k <= 1) return {true, "shortest-path pseudometric is a metric"};
  return {true, "shortest-path pseudometric is a metric on each of " + std::to_string(k) +
                    " components; positive cross-component constants complete it to a metric"};
}

std::optional<std::array<VertexId, 3>> find_triangle_violation(const DistanceMatrix& m, double eps) {
  const auto n = static_cast<std::ptrdiff_t>(m.size());
  std::vector<std::optional<std::array<VertexId, 3>>> per_row(m.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    per_row[i] = first_violation_in_row(m, static_cast<VertexId>(i), eps);
  }
  for (auto& r : per_row) {
    if (r) return r;
  }
  return std::nullopt;
}

namespace serial {

std::optional<std::array<VertexId, 3>> find_triangle_violation(const DistanceMatrix& m, double eps) {
  for (VertexId i = 0; i < m.size(); ++i) {
    if (auto r = first_violation_in_row(m, i, eps)) return r;
  }
  return std::nullopt;
}

}  // namespace serial

Verdict validate_membership(const WeightedGraph& g, const DistanceMatrix& m, double eps) {
  if (m.size() != g.vertex_count()) throw PreconditionError("matrix dimension does not match the graph");
  if (m.labels() != g.labels()) throw PreconditionError("matrix labels do not match the graph vertices");
  const auto& l = g.labels();
  for (VertexId i = 0; i < m.size(); ++i) {
    for (VertexId j = 0; j < m.size(); ++j) {
      double x = m.at(i, j);
      if (!std::isfinite(x)) return Verdict::fail("entry " + pair_name(l, i, j) + " is not finite");
      if (x < 0.0) return Verdict::fail("entry " + pair_name(l, i, j) + " is negative");
    }
  }
  if (auto shape = validate_matrix_shape(m, eps); !shape) return shape;
  for (const auto& e : g.edges()) {
    if (std::fabs(m.at(e.u, e.v) - e.weight) > eps) {
      return Verdict::fail("edge " + pair_name(l, e.u, e.v) + " has entry " +
                           format_number(m.at(e.u, e.v)) + " but weight " + format_number(e.weight));
    }
  }
  if (auto t = find_triangle_violation(m, eps)) {
    auto [i, j, k] = *t;
    return Verdict::fail("triangle inequality fails for " + pair_name(l, i, j) + " via " + l[k] +
                         ": " + format_number(m.at(i, j)) + " > " + format_number(m.at(i, k)) + " + " +
                         format_number(m.at(k, j)));
  }
  return Verdict::pass();
}

}  // namespace metrize
