#include "metrize/shortest_path.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>

namespace metrize {
namespace {

bool skipped(const WeightedGraph& g, std::optional<std::size_t> skip, VertexId x, VertexId y) {
  if (!skip) return false;
  const Edge& e = g.edges()[*skip];
  return (e.u == x && e.v == y) || (e.u == y && e.v == x);
}

void fill_row(const WeightedGraph& g, VertexId s, DistanceMatrix& out) {
  auto d = single_source_distances(g, s);
  for (VertexId t = 0; t < d.size(); ++t) out.at(s, t) = d[t];
}

void symmetrize_min(DistanceMatrix& m) {
  // Dijkstra rows from opposite ends may differ in the last ulp.
  for (VertexId i = 0; i < m.size(); ++i) {
    for (VertexId j = i + 1; j < m.size(); ++j) {
      m.set_symmetric(i, j, std::min(m.at(i, j), m.at(j, i)));
    }
  }
}

DistanceMatrix dense_init(const WeightedGraph& g) {
  DistanceMatrix m(g.labels(), kInf);
  for (const auto& e : g.edges()) m.set_symmetric(e.u, e.v, e.weight);
  return m;
}

}  // namespace

std::vector<double> single_source_distances(const WeightedGraph& g, VertexId source,
                                            std::optional<std::size_t> skip_edge) {
  const std::size_t n = g.vertex_count();
  if (source >= n) throw PreconditionError("source vertex out of range");
  std::vector<double> dist(n, kInf);
  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d > dist[x]) continue;
    for (auto [y, w] : g.neighbors(x)) {
      if (skipped(g, skip_edge, x, y)) continue;
      double cand = d + w;
      if (cand < dist[y]) {
        dist[y] = cand;
        heap.emplace(cand, y);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distance(const WeightedGraph& g, ApspMethod method) {
  const auto n = static_cast<std::ptrdiff_t>(g.vertex_count());
  if (method == ApspMethod::kDense) {
    DistanceMatrix m = dense_init(g);
    for (std::ptrdiff_t k = 0; k < n; ++k) {
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        double ik = m.at(i, k);
        if (std::isinf(ik)) continue;
        for (std::ptrdiff_t j = 0; j < n; ++j) {
          double cand = ik + m.at(k, j);
          if (cand < m.at(i, j)) m.at(i, j) = cand;
        }
      }
    }
    symmetrize_min(m);
    return m;
  }
  DistanceMatrix m(g.labels(), kInf);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t s = 0; s < n; ++s) fill_row(g, static_cast<VertexId>(s), m);
  symmetrize_min(m);
  return m;
}

namespace serial {

DistanceMatrix all_pairs_distance(const WeightedGraph& g, ApspMethod method) {
  const std::size_t n = g.vertex_count();
  if (method == ApspMethod::kDense) {
    DistanceMatrix m = dense_init(g);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          m.at(i, j) = std::min(m.at(i, j), m.at(i, k) + m.at(k, j));
        }
      }
    }
    symmetrize_min(m);
    return m;
  }
  DistanceMatrix m(g.labels(), kInf);
  for (std::size_t s = 0; s < n; ++s) fill_row(g, s, m);
  symmetrize_min(m);
  return m;
}

}  // namespace serial

std::optional<PathRecord> shortest_path_witness(const WeightedGraph& g, VertexId u, VertexId v,
                                                std::optional<std::size_t> skip_edge) {
  const std::size_t n = g.vertex_count();
  if (u >= n || v >= n) throw PreconditionError("vertex out of range");
  if (u == v) return PathRecord{{u}, 0.0};
  auto to_v = single_source_distances(g, v, skip_edge);
  if (std::isinf(to_v[u])) return std::nullopt;

  // Edge x->y is tight when it starts a shortest x-v path. Every tight walk
  // telescopes to the shortest distance, and every minimum-weight path is tight.
  auto tight = [&](VertexId x, VertexId y, double w) {
    if (skipped(g, skip_edge, x, y)) return false;
    double tol = 1e-12 * std::max(1.0, to_v[x]);
    return std::fabs(to_v[x] - (w + to_v[y])) <= tol;
  };

  std::vector<bool> used(n, false);
  std::vector<bool> seen(n, false);
  // Can `from` reach v along tight edges avoiding used vertices?
  auto reaches = [&](VertexId from) {
    std::fill(seen.begin(), seen.end(), false);
    std::vector<VertexId> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      if (x == v) return true;
      for (auto [y, w] : g.neighbors(x)) {
        if (!seen[y] && !used[y] && tight(x, y, w)) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    return false;
  };

  PathRecord path{{u}, 0.0};
  used[u] = true;
  VertexId x = u;
  while (x != v) {
    bool advanced = false;
    for (auto [y, w] : g.neighbors(x)) {
      if (used[y] || !tight(x, y, w) || !reaches(y)) continue;
      path.vertices.push_back(y);
      path.weight += w;
      used[y] = true;
      x = y;
      advanced = true;
      break;
    }
    if (!advanced) throw Error("shortest_path_witness: no tight continuation (numerical trouble)");
  }
  return path;
}

}  // namespace metrize
