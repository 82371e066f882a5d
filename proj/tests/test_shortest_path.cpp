#include <doctest.h>

#include <cmath>

#include "metrize/multipartite.hpp"
#include "metrize/oracle.hpp"
#include "metrize/shortest_path.hpp"
#include "support.hpp"

using namespace metrize;

TEST_CASE("quadrilateral distances match the closed forms") {
  // a=1, b=2, c=3, k=4: d(v1,v3) = min(a+b, c+k), d(v2,v4) = min(b+c, a+k)
  auto q = quadrilateral(1, 2, 3, 4);
  auto d = all_pairs_distance(q);
  CHECK(d.at(q.id("v1"), q.id("v3")) == 3.0);
  CHECK(d.at(q.id("v2"), q.id("v4")) == 5.0);
  CHECK(max_abs_difference(d, oracle::exhaustive_all_pairs(q)) == 0.0);
}

TEST_CASE("disconnected pairs are infinite, zero edges give zero distance") {
  auto iso = test::graph("node a\nnode b");
  CHECK(std::isinf(all_pairs_distance(iso).at(0, 1)));
  auto zero = test::graph("edge a b 0");
  CHECK(all_pairs_distance(zero).at(0, 1) == 0.0);
  CHECK(all_pairs_distance(WeightedGraph{}).size() == 0);
}

TEST_CASE("serial, parallel and dense kernels agree") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = test::mixed_instance(seed, 12);
    auto par = all_pairs_distance(g);
    CHECK(par == serial::all_pairs_distance(g));
    CHECK(max_abs_difference(par, all_pairs_distance(g, ApspMethod::kDense)) <= 1e-12);
    CHECK(max_abs_difference(par, serial::all_pairs_distance(g, ApspMethod::kDense)) <= 1e-12);
  }
}

TEST_CASE("shortest-path distances agree with exhaustive path enumeration") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto g = test::mixed_instance(seed, 7);
    CHECK(max_abs_difference(all_pairs_distance(g), oracle::exhaustive_all_pairs(g)) <= 1e-12);
  }
}

TEST_CASE("distances form a pseudometric bounded by edge weights") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = test::mixed_instance(seed, 9);
    auto d = all_pairs_distance(g);
    const std::size_t n = g.vertex_count();
    for (VertexId i = 0; i < n; ++i) {
      CHECK(d.at(i, i) == 0.0);
      for (VertexId j = 0; j < n; ++j) {
        CHECK(d.at(i, j) == d.at(j, i));
        for (VertexId k = 0; k < n; ++k) CHECK(d.at(i, j) <= d.at(i, k) + d.at(k, j) + 1e-12);
      }
    }
    for (const auto& e : g.edges()) CHECK(d.at(e.u, e.v) <= e.weight);
  }
}

TEST_CASE("shortest_path_witness") {
  auto q = quadrilateral(1, 2, 3, 4);
  auto p = shortest_path_witness(q, q.id("v1"), q.id("v3"));
  REQUIRE(p);
  CHECK(p->vertices == std::vector<VertexId>{q.id("v1"), q.id("v2"), q.id("v3")});
  CHECK(p->weight == 3.0);

  auto self = shortest_path_witness(q, 2, 2);
  REQUIRE(self);
  CHECK(self->vertices == std::vector<VertexId>{2});
  CHECK(self->weight == 0.0);

  auto iso = test::graph("node a\nnode b");
  CHECK_FALSE(shortest_path_witness(iso, 0, 1));
  CHECK_THROWS_AS(shortest_path_witness(iso, 0, 7), PreconditionError);
}

TEST_CASE("witness ties break to the lexicographically smallest sequence") {
  // Three equal-weight routes a-x-d, a-b-d, a-c-d; plus a zero-weight detour.
  auto g = test::graph("edge a x 1\nedge x d 1\nedge a c 1\nedge c d 1\nedge a b 1\nedge b d 1");
  auto p = shortest_path_witness(g, g.id("a"), g.id("d"));
  REQUIRE(p);
  CHECK(p->vertices == std::vector<VertexId>{g.id("a"), g.id("b"), g.id("d")});

  // Zero-weight edge b-c: a-b-c-d has the same weight as a-c-d and is smaller.
  auto z = test::graph("edge a b 1\nedge b c 0\nedge a c 1\nedge c d 1\nedge b e 5");
  p = shortest_path_witness(z, z.id("a"), z.id("d"));
  REQUIRE(p);
  CHECK(p->vertices == std::vector<VertexId>{z.id("a"), z.id("b"), z.id("c"), z.id("d")});
  CHECK(p->weight == 2.0);

  // Greedy must not walk into a dead end: from a, b is smallest and tight
  // (zero edge) but its only onward route runs back through a.
  auto dead = test::graph("edge a b 0\nedge a c 1\nedge c d 1");
  p = shortest_path_witness(dead, dead.id("a"), dead.id("d"));
  REQUIRE(p);
  CHECK(p->vertices == std::vector<VertexId>{dead.id("a"), dead.id("c"), dead.id("d")});
}

TEST_CASE("witness paths are simple and realize the distance") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = test::mixed_instance(seed, 7, 0.3);
    auto d = all_pairs_distance(g);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto p = shortest_path_witness(g, u, v);
        if (std::isinf(d.at(u, v))) {
          CHECK_FALSE(p);
          continue;
        }
        REQUIRE(p);
        auto sorted = p->vertices;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < p->vertices.size(); ++i) {
          auto w = g.weight(p->vertices[i], p->vertices[i + 1]);
          REQUIRE(w);
          total += *w;
        }
        CHECK(std::fabs(total - d.at(u, v)) <= 1e-12);
      }
    }
  }
}
