// Times the serial reference implementation of each data-parallel kernel
// against its OpenMP path on one large instance per kernel, and checks that
// both produce identical results.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mrta/baselines.hpp"
#include "mrta/bench.hpp"
#include "mrta/metrics.hpp"
#include "mrta/solution_io.hpp"

using namespace mrta;

namespace {

double time_best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    best = std::min(best, s);
  }
  return best;
}

void row(const std::string& kernel, const std::string& instance,
         double serial_s, double parallel_s, bool identical) {
  std::printf("%-24s %-28s %10.2f %10.2f %7.2fx   %s\n", kernel.c_str(),
              instance.c_str(), serial_s * 1e3, parallel_s * 1e3,
              serial_s / parallel_s, identical ? "identical" : "MISMATCH");
}

bool matrices_equal(const CostMatrix& a, const CostMatrix& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

std::string solution_key(const Solution& sol, const Scenario& sc) {
  auto j = solution_to_json(sol, sc);
  j.erase("solve_time_s");
  return j.dump();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; the parallel path runs serially\n");
#endif
  std::printf("%-24s %-28s %10s %10s %9s\n", "kernel", "instance",
              "serial ms", "parallel ms", "speedup");

  {
    const Scenario sc = generate_scenario(2001, 4, 1000, 1000, {0, 0}, 1e6, 1);
    CostMatrix out_s, out_p;
    const double ts = time_best_of(3, [&] {
      out_s = euclidean_cost_matrix(sc.depot, sc.sites, Exec::serial);
    });
    const double tp = time_best_of(3, [&] {
      out_p = euclidean_cost_matrix(sc.depot, sc.sites, Exec::parallel);
    });
    row("euclidean_cost_matrix", "2000 sites", ts, tp,
        matrices_equal(out_s, out_p));
  }

  {
    const GridMap map = GridMap::open(201, 201, 0.5);
    const Scenario sc = generate_grid_scenario(151, 4, map, {0, 0}, 1e6, 2);
    CostMatrix out_s, out_p;
    const double ts = time_best_of(3, [&] {
      out_s = dijkstra_cost_matrix(map, sc.depot, sc.sites, Exec::serial);
    });
    const double tp = time_best_of(3, [&] {
      out_p = dijkstra_cost_matrix(map, sc.depot, sc.sites, Exec::parallel);
    });
    row("dijkstra_cost_matrix", "150 sites, 201x201 grid", ts, tp,
        matrices_equal(out_s, out_p));
  }

  {
    const Scenario sc = generate_scenario(20001, 8, 1000, 1000, {0, 0}, 1e6, 3);
    KMeansConfig cfg;
    cfg.k = 8;
    cfg.seed = 3;
    ClusterAssignment out_s, out_p;
    const double ts = time_best_of(3, [&] {
      out_s = kmeans_partition(sc.sites, cfg, Exec::serial);
    });
    const double tp = time_best_of(3, [&] {
      out_p = kmeans_partition(sc.sites, cfg, Exec::parallel);
    });
    row("kmeans_partition", "20000 sites, k=8", ts, tp,
        out_s.labels == out_p.labels && out_s.wcm_trace == out_p.wcm_trace);
  }

  {
    const Scenario sc = generate_scenario(3001, 8, 200, 200, {0, 0}, 1e6, 4);
    const CostMatrix costs = build_cost_matrix(sc);
    KMeansConfig cfg;
    cfg.k = 8;
    cfg.seed = 4;
    Solution out_s, out_p;
    const double ts = time_best_of(3, [&] {
      out_s = solve_clustered(sc, costs, cfg, Exec::serial);
    });
    const double tp = time_best_of(3, [&] {
      out_p = solve_clustered(sc, costs, cfg, Exec::parallel);
    });
    row("solve_clustered routing", "3000 sites, 8 robots", ts, tp,
        solution_key(out_s, sc) == solution_key(out_p, sc));
  }

  {
    const Scenario sc = generate_scenario(201, 4, 100, 100, {0, 0}, 1e6, 5);
    const CostMatrix costs = build_cost_matrix(sc);
    GAConfig cfg;
    cfg.population_size = 200;
    cfg.generations = 150;
    cfg.seed = 5;
    Solution out_s, out_p;
    const double ts = time_best_of(3, [&] {
      out_s = ga_allocate(sc, costs, cfg, nullptr, Exec::serial);
    });
    const double tp = time_best_of(3, [&] {
      out_p = ga_allocate(sc, costs, cfg, nullptr, Exec::parallel);
    });
    row("ga_allocate fitness", "200 tasks, pop 200", ts, tp,
        solution_key(out_s, sc) == solution_key(out_p, sc));
  }

  {
    const Scenario sc = generate_scenario(1201, 8, 100, 100, {0, 0}, 1e6, 6);
    const CostMatrix costs = build_cost_matrix(sc);
    const Solution sol = greedy_allocate(sc, costs);
    long long out_s = 0, out_p = 0;
    const double ts = time_best_of(3, [&] {
      out_s = collision_count(sol, sc, 1.0, Exec::serial);
    });
    const double tp = time_best_of(3, [&] {
      out_p = collision_count(sol, sc, 1.0, Exec::parallel);
    });
    row("collision_count", "1200 tasks, 8 robots", ts, tp, out_s == out_p);
  }

  return 0;
}
