#include "metrize/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace metrize::oracle {
namespace {

void guard(const WeightedGraph& g, Limits limits) {
  if (!limits.force && g.vertex_count() > limits.max_vertices) {
    throw SafetyBoundExceeded("exhaustive enumeration refused: " + std::to_string(g.vertex_count()) +
                              " vertices exceeds the bound of " + std::to_string(limits.max_vertices) +
                              " (use force to override)");
  }
}

// Depth-first enumeration of simple paths starting at `from`. `visit` gets the
// current path and its weight list each time a vertex is appended.
template <typename Visit>
void walk_paths(const WeightedGraph& g, VertexId from, Visit&& visit) {
  std::vector<VertexId> path{from};
  std::vector<double> weights;
  std::vector<bool> on(g.vertex_count(), false);
  on[from] = true;
  auto rec = [&](auto&& self) -> void {
    for (auto [y, w] : g.neighbors(path.back())) {
      if (on[y]) continue;
      path.push_back(y);
      weights.push_back(w);
      on[y] = true;
      if (visit(path, weights)) self(self);
      on[y] = false;
      weights.pop_back();
      path.pop_back();
    }
  };
  rec(rec);
}

double sum(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s;
}

struct Rng {
  std::mt19937_64 gen;
  double unit() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(gen() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(double p) { return unit() < p; }
};

std::string vertex_label(std::size_t i, std::size_t n) {
  std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
  std::string digits = std::to_string(i);
  return "v" + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

void for_each_cycle(const WeightedGraph& g, std::size_t max_len,
                    const std::function<bool(const Cycle&)>& visit, Limits limits) {
  guard(g, limits);
  const std::size_t n = g.vertex_count();
  bool stop = false;
  for (VertexId s = 0; s < n && !stop; ++s) {
    std::vector<VertexId> path{s};
    std::vector<bool> on(n, false);
    on[s] = true;
    auto rec = [&](auto&& self) -> void {
      VertexId x = path.back();
      for (auto [y, w] : g.neighbors(x)) {
        if (stop) return;
        if (y == s && path.size() >= 3 && path[1] < path.back()) {
          Cycle c = path;
          c.push_back(s);
          if (!visit(c)) stop = true;
          continue;
        }
        if (y <= s || on[y]) continue;
        if (max_len != 0 && path.size() + 1 > max_len) continue;
        path.push_back(y);
        on[y] = true;
        self(self);
        on[y] = false;
        path.pop_back();
      }
    };
    rec(rec);
  }
}

std::vector<Cycle> enumerate_cycles(const WeightedGraph& g, std::size_t max_len, Limits limits) {
  std::vector<Cycle> out;
  for_each_cycle(g, max_len, [&](const Cycle& c) {
    out.push_back(c);
    return true;
  }, limits);
  return out;
}

CycleCheck cycle_condition_holds(const WeightedGraph& g, double eps, Limits limits) {
  CycleCheck result;
  for_each_cycle(g, 0, [&](const Cycle& c) {
    double total = 0.0;
    double heaviest = 0.0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      double w = *g.weight(c[i], c[i + 1]);
      total += w;
      heaviest = std::max(heaviest, w);
    }
    if (2.0 * heaviest - total > eps) {
      result.holds = false;
      result.violation = c;
      return false;
    }
    return true;
  }, limits);
  return result;
}

double rho0_path_sup(const WeightedGraph& g, VertexId u, VertexId v, Limits limits, bool prune) {
  guard(g, limits);
  if (u >= g.vertex_count() || v >= g.vertex_count()) throw PreconditionError("vertex out of range");
  if (u == v || g.adjacent(u, v)) throw PreconditionError("path supremum needs distinct nonadjacent vertices");
  double heaviest_edge = 0.0;
  for (const auto& e : g.edges()) heaviest_edge = std::max(heaviest_edge, e.weight);

  // Extending a prefix of weight W and max edge M can reach at most
  // max(2M - W, heaviest_edge - W), so such prefixes are cut once that bound
  // cannot beat the best value found.
  double best = 0.0;
  std::vector<bool> on(g.vertex_count(), false);
  on[u] = true;
  auto rec = [&](auto&& self, VertexId x, double total, double heaviest) -> void {
    for (auto [y, w] : g.neighbors(x)) {
      if (on[y]) continue;
      double t = total + w;
      double m = std::max(heaviest, w);
      if (y == v) {
        best = std::max(best, 2.0 * m - t);
        continue;
      }
      if (prune && std::max(2.0 * m - t, heaviest_edge - t) <= best) continue;
      on[y] = true;
      self(self, y, t, m);
      on[y] = false;
    }
  };
  rec(rec, u, 0.0, 0.0);
  return best;
}

DistanceMatrix exhaustive_all_pairs(const WeightedGraph& g, Limits limits) {
  guard(g, limits);
  DistanceMatrix m(g.labels(), kInf);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    walk_paths(g, s, [&](const std::vector<VertexId>& path, const std::vector<double>& w) {
      double& cell = m.at(s, path.back());
      cell = std::min(cell, sum(w));
      return true;
    });
  }
  for (VertexId i = 0; i < m.size(); ++i) {
    for (VertexId j = i + 1; j < m.size(); ++j) m.set_symmetric(i, j, std::min(m.at(i, j), m.at(j, i)));
  }
  return m;
}

std::vector<bool> edges_on_cycles(const WeightedGraph& g, Limits limits) {
  std::vector<bool> on(g.edge_count(), false);
  for_each_cycle(g, 0, [&](const Cycle& c) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i) on[*g.edge_index(c[i], c[i + 1])] = true;
    return true;
  }, limits);
  return on;
}

bool has_forbidden_triple(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      for (VertexId p = 0; p < n; ++p) {
        if (p == u || p == v) continue;
        if (g.adjacent(u, p) != g.adjacent(v, p)) return true;
      }
    }
  }
  return false;
}

WeightedGraph generate(const InstanceGenerator& spec) {
  Rng rng{std::mt19937_64(spec.seed)};
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t n = 0;

  if (spec.graph_class == GraphClass::kMultipartite) {
    std::vector<std::size_t> sizes = spec.part_sizes;
    if (sizes.empty()) {
      std::size_t k = rng.between(spec.min_parts, spec.max_parts);
      for (std::size_t i = 0; i < k; ++i) sizes.push_back(rng.between(1, spec.max_part_size));
    }
    n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
    std::vector<std::size_t> part;
    for (std::size_t a = 0; a < sizes.size(); ++a) part.insert(part.end(), sizes[a], a);
    std::shuffle(part.begin(), part.end(), rng.gen);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (part[i] != part[j]) pairs.emplace_back(i, j);
      }
    }
  } else {
    n = rng.between(spec.min_vertices, std::max(spec.min_vertices, spec.max_vertices));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng.gen);
    std::vector<bool> taken(n * n, false);
    auto add = [&](std::size_t a, std::size_t b) {
      if (a > b) std::swap(a, b);
      if (a == b || taken[a * n + b]) return;
      taken[a * n + b] = true;
      pairs.emplace_back(a, b);
    };
    switch (spec.graph_class) {
      case GraphClass::kForest:
        for (std::size_t i = 1; i < n; ++i) {
          if (rng.chance(0.8)) add(perm[i], perm[rng.below(i)]);
        }
        break;
      case GraphClass::kConnected:
        for (std::size_t i = 1; i < n; ++i) add(perm[i], perm[rng.below(i)]);
        [[fallthrough]];
      default:
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i + 1; j < n; ++j) {
            if (rng.chance(spec.edge_probability)) add(i, j);
          }
        }
        break;
    }
    std::sort(pairs.begin(), pairs.end());
  }

  std::vector<double> point(n);
  for (std::size_t i = 0; i < n; ++i) {
    point[i] = rng.unit() * spec.max_weight;
    if (i > 0 && rng.chance(spec.zero_probability)) point[i] = point[rng.below(i)];
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(vertex_label(i, n));
  std::vector<LabeledEdge> edges;
  for (auto [a, b] : pairs) {
    double w;
    if (spec.metrizable) {
      w = std::fabs(point[a] - point[b]);
    } else {
      w = rng.chance(spec.zero_probability) ? 0.0 : rng.unit() * spec.max_weight;
    }
    edges.push_back({labels[a], labels[b], w});
  }
  return WeightedGraph(std::move(labels), edges);
}

}  // namespace metrize::oracle
