#pragma once

#include <chrono>
#include <utility>
#include <vector>

#include "mrta/allocator.hpp"

namespace mrta {

struct MetricsReport {
  double total_cost = 0.0;
  double solve_time_s = 0.0;
  double load_balance = 0.0;       // population std dev of per-robot costs
  long long collision_count = 0;   // inter-robot path intersections
  std::vector<double> per_robot_cost;
};

double total_mission_cost(const Solution& solution);

// Population standard deviation of the per-robot route costs.
double load_balance(const std::vector<double>& per_robot_costs);
double load_balance(const Solution& solution);

// Counts intersections between distinct robots' path legs. Legs incident to
// the depot are not counted: every route meets there by construction, and
// the metric measures conflicts between the robots' operating zones. Point
// intersections within depot_exclusion_radius of the depot are likewise
// dropped; collinear overlaps count once per overlapping segment pair. On
// the grid backend legs are the polylines of the grid paths.
long long collision_count(const Solution& solution, const Scenario& scenario,
                          double depot_exclusion_radius = 1.0,
                          Exec exec = Exec::parallel);

MetricsReport compute_metrics(const Solution& solution,
                              const Scenario& scenario,
                              double depot_exclusion_radius = 1.0,
                              Exec exec = Exec::parallel);

// Wall-clock seconds around the call only.
template <typename F>
auto timed(F&& f) -> std::pair<decltype(f()), double> {
  const auto t0 = std::chrono::steady_clock::now();
  auto result = f();
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return {std::move(result), seconds};
}

}  // namespace mrta
