#include "metrize/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace metrize {

WeightedGraph::WeightedGraph(std::vector<std::string> labels, std::span<const LabeledEdge> edges)
    : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  if (auto dup = std::adjacent_find(labels_.begin(), labels_.end()); dup != labels_.end()) {
    throw Error("duplicate vertex '" + *dup + "'");
  }
  for (const auto& e : edges) {
    auto u = find(e.u);
    auto v = find(e.v);
    if (!u) throw Error("edge endpoint '" + e.u + "' is not a vertex");
    if (!v) throw Error("edge endpoint '" + e.v + "' is not a vertex");
    if (*u == *v) throw Error("self-loop at '" + e.u + "'");
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw Error("weight of edge " + e.u + "-" + e.v + " must be finite and nonnegative");
    }
    edges_.push_back({std::min(*u, *v), std::max(*u, *v), e.weight});
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v) {
      throw Error("duplicate edge " + labels_[edges_[i].u] + "-" + labels_[edges_[i].v]);
    }
  }
  adjacency_.resize(labels_.size());
  for (const auto& e : edges_) {
    adjacency_[e.u].emplace_back(e.v, e.weight);
    adjacency_[e.v].emplace_back(e.u, e.weight);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

std::optional<VertexId> WeightedGraph::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

VertexId WeightedGraph::id(std::string_view label) const {
  auto v = find(label);
  if (!v) throw PreconditionError("unknown vertex '" + std::string(label) + "'");
  return *v;
}

std::optional<double> WeightedGraph::weight(VertexId u, VertexId v) const {
  const auto& nb = adjacency_.at(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v,
                             [](const auto& p, VertexId x) { return p.first < x; });
  if (it == nb.end() || it->first != v) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> WeightedGraph::edge_index(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(u, v),
                             [](const Edge& e, const std::pair<VertexId, VertexId>& key) {
                               return std::pair(e.u, e.v) < key;
                             });
  if (it == edges_.end() || it->u != u || it->v != v) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<LabeledEdge> WeightedGraph::labeled_edges() const {
  std::vector<LabeledEdge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({labels_[e.u], labels_[e.v], e.weight});
  return out;
}

WeightedGraph WeightedGraph::without_edges(std::span<const std::size_t> removed) const {
  std::vector<bool> drop(edges_.size(), false);
  for (auto i : removed) drop.at(i) = true;
  std::vector<LabeledEdge> kept;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!drop[i]) kept.push_back({labels_[edges_[i].u], labels_[edges_[i].v], edges_[i].weight});
  }
  return WeightedGraph(labels_, kept);
}

WeightedGraph WeightedGraph::induced(std::span<const VertexId> keep) const {
  std::vector<bool> in(labels_.size(), false);
  std::vector<std::string> labels;
  for (auto v : keep) {
    if (!in.at(v)) labels.push_back(labels_[v]);
    in[v] = true;
  }
  std::vector<LabeledEdge> kept;
  for (const auto& e : edges_) {
    if (in[e.u] && in[e.v]) kept.push_back({labels_[e.u], labels_[e.v], e.weight});
  }
  return WeightedGraph(std::move(labels), kept);
}

WeightedGraph WeightedGraph::reweighted(std::size_t edge, double weight) const {
  auto all = labeled_edges();
  all.at(edge).weight = weight;
  return WeightedGraph(labels_, all);
}

WeightedGraph WeightedGraph::with_edges(std::span<const LabeledEdge> extra) const {
  auto all = labeled_edges();
  all.insert(all.end(), extra.begin(), extra.end());
  return WeightedGraph(labels_, all);
}

std::vector<std::size_t> component_index(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, unset);
  std::size_t next = 0;
  std::vector<VertexId> stack;
  // Scanning roots in id order numbers components by smallest member.
  for (VertexId root = 0; root < n; ++root) {
    if (comp[root] != unset) continue;
    comp[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (auto [y, w] : g.neighbors(x)) {
        if (comp[y] == unset) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::vector<std::vector<VertexId>> connected_components(const WeightedGraph& g) {
  auto comp = component_index(g);
  std::size_t count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<VertexId>> out(count);
  for (VertexId v = 0; v < comp.size(); ++v) out[comp[v]].push_back(v);
  return out;
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels, double fill)
    : labels_(std::move(labels)), data_(labels_.size() * labels_.size(), fill) {
  for (std::size_t i = 0; i < labels_.size(); ++i) at(i, i) = 0.0;
}

Verdict validate_matrix_shape(const DistanceMatrix& m, double eps) {
  const auto& l = m.labels();
  for (VertexId i = 0; i < m.size(); ++i) {
    if (!(std::fabs(m.at(i, i)) <= eps)) {
      return Verdict::fail("diagonal entry at " + l[i] + " is not zero");
    }
  }
  for (VertexId i = 0; i < m.size(); ++i) {
    for (VertexId j = i + 1; j < m.size(); ++j) {
      double a = m.at(i, j);
      double b = m.at(j, i);
      if (a == b) continue;
      if (std::isinf(a) || std::isinf(b) || !(std::fabs(a - b) <= eps)) {
        return Verdict::fail("asymmetric entries at (" + l[i] + "," + l[j] + ")");
      }
    }
  }
  return Verdict::pass();
}

double max_abs_difference(const DistanceMatrix& a, const DistanceMatrix& b) {
  if (a.labels() != b.labels()) throw PreconditionError("matrices are over different vertex sets");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    double x = a.data()[i];
    double y = b.data()[i];
    if (x == y) continue;
    worst = std::max(worst, std::isinf(x) || std::isinf(y) ? kInf : std::fabs(x - y));
  }
  return worst;
}

}  // namespace metrize
