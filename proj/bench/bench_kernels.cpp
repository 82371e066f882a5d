// Serial vs OpenMP timings for the data-parallel kernels.
//
//   bench_kernels [n] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "metrize/metrization.hpp"
#include "metrize/multipartite.hpp"
#include "metrize/oracle.hpp"
#include "metrize/shortest_path.hpp"

using namespace metrize;
using h_clock = std::chrono::high_resolution_clock;

template <typename F>
double best_ms(int repeats, F&& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    auto t0 = h_clock::now();
    f();
    std::chrono::duration<double, std::milli> dt = h_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.2f %10.2f %8.2fx\n", name, serial_ms, parallel_ms, serial_ms / parallel_ms);
}

int main(int argc, char** argv) {
  std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 400;
  int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

  oracle::InstanceGenerator sparse{.seed = 1, .min_vertices = n, .max_vertices = n,
                                   .edge_probability = 8.0 / static_cast<double>(n),
                                   .graph_class = oracle::GraphClass::kConnected, .metrizable = true};
  auto g = oracle::generate(sparse);
  std::size_t half = n / 2;
  oracle::InstanceGenerator multi{.seed = 2, .graph_class = oracle::GraphClass::kMultipartite,
                                  .part_sizes = {half / 2, half / 2, half / 2, half / 2}, .metrizable = true};
  auto mp = oracle::generate(multi);

  std::printf("threads=%d  n=%zu  edges=%zu  multipartite n=%zu\n", omp_get_max_threads(), g.vertex_count(),
              g.edge_count(), mp.vertex_count());
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");

  row("apsp dijkstra", best_ms(repeats, [&] { serial::all_pairs_distance(g); }),
      best_ms(repeats, [&] { all_pairs_distance(g); }));
  row("apsp dense", best_ms(repeats, [&] { serial::all_pairs_distance(g, ApspMethod::kDense); }),
      best_ms(repeats, [&] { all_pairs_distance(g, ApspMethod::kDense); }));

  auto d = all_pairs_distance(g);
  row("triangle scan", best_ms(repeats, [&] { serial::find_triangle_violation(d, 1e-9); }),
      best_ms(repeats, [&] { find_triangle_violation(d, 1e-9); }));
  row("least pseudometric", best_ms(repeats, [&] { serial::least_pseudometric(mp); }),
      best_ms(repeats, [&] { least_pseudometric(mp); }));
  return 0;
}
