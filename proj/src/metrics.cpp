#include "mrta/metrics.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mrta {

namespace {

// inner legs of one robot's route as elementary segments
std::vector<Segment> route_segments(const Tour& tour, const Scenario& scenario) {
  std::vector<Segment> segments;
  const auto location = [&](std::size_t idx) {
    return idx == 0 ? scenario.depot : scenario.sites[idx - 1];
  };
  for (std::size_t i = 0; i + 1 < tour.order.size(); ++i) {
    const std::size_t a = tour.order[i];
    const std::size_t b = tour.order[i + 1];
    if (a == 0 || b == 0) continue;  // depot-incident leg
    if (scenario.cost_backend == CostBackend::grid) {
      const std::vector<Point> poly =
          grid_path(*scenario.grid, location(a), location(b));
      for (std::size_t p = 0; p + 1 < poly.size(); ++p) {
        segments.push_back(Segment{poly[p], poly[p + 1]});
      }
    } else {
      segments.push_back(Segment{location(a), location(b)});
    }
  }
  return segments;
}

long long count_pair(const std::vector<Segment>& a,
                     const std::vector<Segment>& b, const Point& depot,
                     double radius) {
  long long count = 0;
  for (const Segment& s1 : a) {
    for (const Segment& s2 : b) {
      const SegmentIntersection hit = segments_intersect(s1, s2);
      if (hit.kind == IntersectKind::point) {
        if (distance(hit.point, depot) > radius) ++count;
      } else if (hit.kind == IntersectKind::overlap) {
        const double far = std::max(distance(hit.overlap.p, depot),
                                    distance(hit.overlap.q, depot));
        if (far > radius) ++count;
      }
    }
  }
  return count;
}

}  // namespace

double total_mission_cost(const Solution& solution) {
  return std::accumulate(solution.per_robot_cost.begin(),
                         solution.per_robot_cost.end(), 0.0);
}

double load_balance(const std::vector<double>& per_robot_costs) {
  if (per_robot_costs.empty()) {
    throw std::invalid_argument("load_balance: need at least one robot");
  }
  const double n = static_cast<double>(per_robot_costs.size());
  const double mean =
      std::accumulate(per_robot_costs.begin(), per_robot_costs.end(), 0.0) / n;
  double var = 0.0;
  for (double c : per_robot_costs) var += (c - mean) * (c - mean);
  return std::sqrt(var / n);
}

double load_balance(const Solution& solution) {
  return load_balance(solution.per_robot_cost);
}

long long collision_count(const Solution& solution, const Scenario& scenario,
                          double depot_exclusion_radius, Exec exec) {
  const std::size_t n_robots = solution.routes.size();
  if (n_robots < 2) return 0;

  std::vector<std::vector<Segment>> legs(n_robots);
  for (std::size_t k = 0; k < n_robots; ++k) {
    legs[k] = route_segments(solution.routes[k], scenario);
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n_robots; ++a) {
    for (std::size_t b = a + 1; b < n_robots; ++b) pairs.emplace_back(a, b);
  }

  long long count = 0;
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) reduction(+ : count)
    for (long long p = 0; p < static_cast<long long>(pairs.size()); ++p) {
      count += count_pair(legs[pairs[p].first], legs[pairs[p].second],
                          scenario.depot, depot_exclusion_radius);
    }
  } else {
    for (const auto& [a, b] : pairs) {
      count += count_pair(legs[a], legs[b], scenario.depot,
                          depot_exclusion_radius);
    }
  }
  return count;
}

MetricsReport compute_metrics(const Solution& solution,
                              const Scenario& scenario,
                              double depot_exclusion_radius, Exec exec) {
  MetricsReport report;
  report.total_cost = total_mission_cost(solution);
  report.solve_time_s = solution.solve_time_s;
  report.load_balance = load_balance(solution);
  report.collision_count =
      collision_count(solution, scenario, depot_exclusion_radius, exec);
  report.per_robot_cost = solution.per_robot_cost;
  return report;
}

}  // namespace mrta
