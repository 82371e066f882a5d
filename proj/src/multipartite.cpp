#include "metrize/multipartite.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "metrize/io.hpp"
#include "metrize/metrization.hpp"
#include "metrize/shortest_path.hpp"

namespace metrize {
namespace {

// Dense weight table; +inf marks non-edges.
std::vector<double> weight_table(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<double> w(n * n, kInf);
  for (const auto& e : g.edges()) {
    w[e.u * n + e.v] = e.weight;
    w[e.v * n + e.u] = e.weight;
  }
  return w;
}

struct Prepared {
  Partition partition;
  std::vector<std::size_t> part;
  std::vector<double> w;
};

Prepared prepare(const WeightedGraph& g, double eps) {
  auto partition = detect_partition(g);
  if (!partition) throw PreconditionError("graph is not complete multipartite");
  if (partition->k() < 2) throw PreconditionError("graph is 1-partite (edgeless); need k >= 2");
  if (!check_metrizable(g, eps).metrizable) throw PreconditionError("weight is not metrizable");
  auto part = partition->part_of(g.vertex_count());
  return {std::move(*partition), std::move(part), weight_table(g)};
}

double least_entry(const Prepared& p, std::size_t n, VertexId u, VertexId v) {
  double best = 0.0;
  for (VertexId x = 0; x < n; ++x) {
    if (p.part[x] == p.part[u]) continue;
    best = std::max(best, std::fabs(p.w[u * n + x] - p.w[x * n + v]));
  }
  return best;
}

void fill_least_row(const Prepared& p, std::size_t n, VertexId u, DistanceMatrix& out) {
  for (VertexId v = u + 1; v < n; ++v) {
    double e = p.w[u * n + v];
    out.set_symmetric(u, v, std::isinf(e) ? least_entry(p, n, u, v) : e);
  }
}

void require_small_parts(const Prepared& p) {
  for (const auto& part : p.partition.parts) {
    if (part.size() > 2) throw PreconditionError("sandwich bounds need every part to have at most 2 vertices");
  }
}

// Independent stream per unordered pair, so entries do not depend on
// evaluation order.
double unit_draw(std::uint64_t seed, VertexId i, VertexId j) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
  std::mt19937_64 gen(seq);
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// First entry of f outside [lower, upper] widened by tol, if any.
std::optional<std::string> sandwich_escape(const DistanceMatrix& f, const DistanceMatrix& lower,
                                           const DistanceMatrix& upper, double tol) {
  const auto& l = f.labels();
  for (VertexId i = 0; i < f.size(); ++i) {
    for (VertexId j = i + 1; j < f.size(); ++j) {
      double x = f.at(i, j);
      if (x < lower.at(i, j) - tol || x > upper.at(i, j) + tol) {
        return "entry (" + l[i] + "," + l[j] + ")=" + format_number(x) + " outside [" +
               format_number(lower.at(i, j)) + ", " + format_number(upper.at(i, j)) + "]";
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::size_t> Partition::part_of(std::size_t vertex_count) const {
  std::vector<std::size_t> out(vertex_count, 0);
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (auto v : parts[a]) out.at(v) = a;
  }
  return out;
}

std::optional<Partition> detect_partition(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> adj(n * n, 0);
  for (const auto& e : g.edges()) adj[e.u * n + e.v] = adj[e.v * n + e.u] = 1;

  // Components of the complement graph.
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> part(n, unset);
  Partition out;
  for (VertexId root = 0; root < n; ++root) {
    if (part[root] != unset) continue;
    std::size_t id = out.parts.size();
    out.parts.emplace_back();
    std::vector<VertexId> stack{root};
    part[root] = id;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      out.parts[id].push_back(x);
      for (VertexId y = 0; y < n; ++y) {
        if (y != x && part[y] == unset && !adj[x * n + y]) {
          part[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(out.parts[id].begin(), out.parts[id].end());
  }
  // Cross-part pairs are adjacent by construction; non-adjacency is an
  // equivalence iff no edge joins two vertices of the same class.
  for (const auto& e : g.edges()) {
    if (part[e.u] == part[e.v]) return std::nullopt;
  }
  return out;
}

DistanceMatrix least_pseudometric(const WeightedGraph& g, double eps) {
  const Prepared p = prepare(g, eps);
  const auto n = static_cast<std::ptrdiff_t>(g.vertex_count());
  DistanceMatrix out(g.labels(), 0.0);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t u = 0; u < n; ++u) {
    fill_least_row(p, static_cast<std::size_t>(n), static_cast<VertexId>(u), out);
  }
  return out;
}

namespace serial {

DistanceMatrix least_pseudometric(const WeightedGraph& g, double eps) {
  const Prepared p = prepare(g, eps);
  const std::size_t n = g.vertex_count();
  DistanceMatrix out(g.labels(), 0.0);
  for (VertexId u = 0; u < n; ++u) fill_least_row(p, n, u, out);
  return out;
}

}  // namespace serial

Interval greatest_vs_least_interval(const WeightedGraph& g, VertexId u, VertexId v, double eps) {
  const std::size_t n = g.vertex_count();
  if (u >= n || v >= n) throw PreconditionError("vertex out of range");
  if (u == v) throw PreconditionError("interval needs two distinct vertices");
  if (g.adjacent(u, v)) throw PreconditionError("interval needs a nonadjacent pair");
  const Prepared p = prepare(g, eps);

  Interval out;
  out.lower = least_entry(p, n, u, v);
  out.upper = single_source_distances(g, u)[v];
  double two_path = kInf;
  for (VertexId x = 0; x < n; ++x) {
    if (p.part[x] != p.part[u]) two_path = std::min(two_path, p.w[u * n + x] + p.w[x * n + v]);
  }
  if (std::fabs(two_path - out.upper) > eps + 1e-12 * std::max(1.0, two_path)) {
    throw Error("internal: shortest path " + format_number(out.upper) +
                " differs from best two-edge path " + format_number(two_path));
  }
  return out;
}

SandwichResult sandwich_validate(const WeightedGraph& g, const DistanceMatrix& f, double eps) {
  const Prepared p = prepare(g, eps);
  require_small_parts(p);
  if (f.labels() != g.labels()) throw PreconditionError("matrix labels do not match the graph vertices");
  if (auto shape = validate_matrix_shape(f, eps); !shape) throw PreconditionError(shape.violation);

  const DistanceMatrix lower = least_pseudometric(g, eps);
  const DistanceMatrix upper = all_pairs_distance(g);
  // Rounding propagates through at most three entries of a triangle, so each
  // side gets a 3*eps margin before a disagreement counts as real.
  auto escape = sandwich_escape(f, lower, upper, eps);
  if (!escape) {
    Verdict member = validate_membership(g, f, 3 * eps);
    if (member) return {SandwichStatus::kMember, ""};
    return {SandwichStatus::kTheoremViolation, "inside the bounds but not a member: " + member.violation};
  }
  Verdict member = validate_membership(g, f, eps);
  if (member && sandwich_escape(f, lower, upper, 3 * eps)) {
    return {SandwichStatus::kTheoremViolation, "member outside the bounds: " + *escape};
  }
  return {SandwichStatus::kOutsideSandwich, *escape};
}

DistanceMatrix sandwich_sample(const WeightedGraph& g, std::uint64_t seed, double eps) {
  const Prepared p = prepare(g, eps);
  require_small_parts(p);
  const DistanceMatrix lower = least_pseudometric(g, eps);
  const DistanceMatrix upper = all_pairs_distance(g);
  const std::size_t n = g.vertex_count();
  DistanceMatrix out(g.labels(), 0.0);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (auto w = g.weight(i, j)) {
        out.set_symmetric(i, j, *w);
        continue;
      }
      double lo = lower.at(i, j);
      double hi = upper.at(i, j);
      double x = lo == hi ? lo : std::clamp(lo + unit_draw(seed, i, j) * (hi - lo), lo, hi);
      out.set_symmetric(i, j, x);
    }
  }
  return out;
}

bool is_star(const WeightedGraph& g) {
  auto p = detect_partition(g);
  if (!p || p->k() != 2) return false;
  return p->parts[0].size() == 1 || p->parts[1].size() == 1;
}

WeightedGraph quadrilateral(double a, double b, double c, double k) {
  std::vector<LabeledEdge> edges{{"v1", "v2", a}, {"v2", "v3", b}, {"v3", "v4", c}, {"v4", "v1", k}};
  return WeightedGraph({"v1", "v2", "v3", "v4"}, edges);
}

QuadReport analyze_quadrilateral(double a, double b, double c, double k) {
  for (double x : {a, b, c, k}) {
    if (!std::isfinite(x) || x < 0.0) throw PreconditionError("quadrilateral weights must be finite and nonnegative");
  }
  QuadReport r{a, b, c, k, false, {}, {}};
  r.metrizable = 2.0 * std::max({a, b, c, k}) <= a + b + c + k;
  r.v1v3 = {std::max(std::fabs(a - b), std::fabs(c - k)), std::min(a + b, c + k)};
  r.v2v4 = {std::max(std::fabs(b - c), std::fabs(a - k)), std::min(b + c, a + k)};
  return r;
}

}  // namespace metrize
