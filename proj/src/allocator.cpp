#include "mrta/allocator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mrta {

namespace {

constexpr double kCostTol = 1e-9;

}  // namespace

std::vector<std::size_t> cluster_to_robot_mapping(
    const ClusterAssignment& assignment, const std::vector<Robot>& robots) {
  if (assignment.centroids.size() != robots.size()) {
    throw std::invalid_argument("mapping: cluster count != robot count");
  }
  std::vector<std::size_t> mapping(robots.size());
  std::iota(mapping.begin(), mapping.end(), std::size_t{0});
  return mapping;
}

std::vector<std::size_t> cluster_to_robot_mapping(
    const ClusterAssignment& assignment, const std::vector<Robot>& robots,
    const std::vector<Point>& robot_homes) {
  if (assignment.centroids.size() != robots.size()) {
    throw std::invalid_argument("mapping: cluster count != robot count");
  }
  if (robot_homes.size() != robots.size()) {
    throw std::invalid_argument("mapping: home count != robot count");
  }
  if (robots.size() > 8) {
    throw std::invalid_argument(
        "mapping: exhaustive matching limited to 8 robots");
  }
  std::vector<std::size_t> perm(robots.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::size_t> best = perm;
  double best_cost = std::numeric_limits<double>::max();
  do {
    double cost = 0.0;
    for (std::size_t k = 0; k < robots.size(); ++k) {
      cost += distance(robot_homes[k], assignment.centroids[perm[k]]);
    }
    if (cost < best_cost) {
      best_cost = cost;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Solution solve_clustered(const Scenario& scenario, const CostMatrix& costs,
                         const KMeansConfig& config, Exec exec) {
  if (scenario.robots.empty()) {
    throw std::invalid_argument("solve_clustered: no robots");
  }
  if (scenario.sites.size() < scenario.robots.size()) {
    throw std::invalid_argument("solve_clustered: fewer sites than robots");
  }
  if (costs.size() != scenario.location_count()) {
    throw std::invalid_argument("solve_clustered: cost matrix size mismatch");
  }
  if (config.k != scenario.robots.size()) {
    throw std::invalid_argument("solve_clustered: config.k != robot count");
  }

  const auto t0 = std::chrono::steady_clock::now();

  Solution sol;
  sol.method = "clustered";
  sol.assignment = kmeans_partition(scenario.sites, config, exec);
  const std::vector<std::size_t> mapping =
      cluster_to_robot_mapping(sol.assignment, scenario.robots);

  const std::size_t n_robots = scenario.robots.size();
  sol.routes.resize(n_robots);
  sol.two_opt_traces.resize(n_robots);

  // routes are independent once the clusters are fixed
  const auto route_robot = [&](std::size_t k) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < scenario.sites.size(); ++i) {
      if (sol.assignment.labels[i] == mapping[k]) members.push_back(i + 1);
    }
    TwoOptResult r = two_opt(nearest_neighbor_tour(costs, members), costs);
    sol.routes[k] = std::move(r.tour);
    sol.two_opt_traces[k] = std::move(r.cost_trace);
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long k = 0; k < static_cast<long long>(n_robots); ++k) {
      route_robot(static_cast<std::size_t>(k));
    }
  } else {
    for (std::size_t k = 0; k < n_robots; ++k) route_robot(k);
  }

  sol.per_robot_cost.resize(n_robots);
  sol.feasible.resize(n_robots);
  sol.total_cost = 0.0;
  for (std::size_t k = 0; k < n_robots; ++k) {
    sol.per_robot_cost[k] = sol.routes[k].cost;
    sol.total_cost += sol.routes[k].cost;
    sol.feasible[k] = sol.routes[k].cost <= scenario.robots[k].budget;
  }

  sol.solve_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return sol;
}

ClusterAssignment assignment_from_routes(const std::vector<Tour>& routes,
                                         const Scenario& scenario) {
  ClusterAssignment a;
  a.labels.assign(scenario.sites.size(), 0);
  a.centroids.assign(routes.size(), scenario.depot);
  for (std::size_t k = 0; k < routes.size(); ++k) {
    Point sum{0.0, 0.0};
    std::size_t count = 0;
    for (std::size_t idx : routes[k].order) {
      if (idx == 0) continue;
      a.labels[idx - 1] = k;
      sum.x += scenario.sites[idx - 1].x;
      sum.y += scenario.sites[idx - 1].y;
      ++count;
    }
    if (count > 0) {
      a.centroids[k] = Point{sum.x / static_cast<double>(count),
                             sum.y / static_cast<double>(count)};
    }
  }
  return a;
}

void validate_solution(const Solution& sol, const Scenario& scenario,
                       const CostMatrix& costs) {
  const std::size_t n_robots = scenario.robots.size();
  const std::size_t n_sites = scenario.sites.size();
  if (sol.routes.size() != n_robots) {
    throw std::runtime_error("solution: route count != robot count");
  }
  if (sol.per_robot_cost.size() != n_robots ||
      sol.feasible.size() != n_robots) {
    throw std::runtime_error("solution: per-robot vectors sized wrong");
  }

  std::vector<std::size_t> owner(n_sites, n_robots);
  for (std::size_t k = 0; k < n_robots; ++k) {
    const Tour& t = sol.routes[k];
    if (t.order.size() < 2 || t.order.front() != 0 || t.order.back() != 0) {
      throw std::runtime_error("solution: route " + std::to_string(k) +
                               " does not start and end at the depot");
    }
    for (std::size_t i = 1; i + 1 < t.order.size(); ++i) {
      const std::size_t idx = t.order[i];
      if (idx == 0 || idx > n_sites) {
        throw std::runtime_error("solution: route " + std::to_string(k) +
                                 " has an invalid location index");
      }
      if (owner[idx - 1] != n_robots) {
        throw std::runtime_error("solution: site " + std::to_string(idx) +
                                 " appears in more than one route");
      }
      owner[idx - 1] = k;
    }
    const double recomputed = tour_cost(costs, t.order);
    if (std::abs(recomputed - t.cost) > kCostTol) {
      throw std::runtime_error("solution: route " + std::to_string(k) +
                               " cost field does not match its order");
    }
    if (std::abs(sol.per_robot_cost[k] - t.cost) > kCostTol) {
      throw std::runtime_error("solution: per_robot_cost[" +
                               std::to_string(k) + "] mismatch");
    }
    const bool fits = sol.per_robot_cost[k] <= scenario.robots[k].budget;
    if (sol.feasible[k] != fits) {
      throw std::runtime_error("solution: feasible[" + std::to_string(k) +
                               "] flag inconsistent with budget");
    }
  }
  for (std::size_t i = 0; i < n_sites; ++i) {
    if (owner[i] == n_robots) {
      throw std::runtime_error("solution: site " + std::to_string(i + 1) +
                               " not served by any route");
    }
  }
  const double total =
      std::accumulate(sol.per_robot_cost.begin(), sol.per_robot_cost.end(), 0.0);
  if (std::abs(total - sol.total_cost) > kCostTol * (1.0 + total)) {
    throw std::runtime_error("solution: total_cost != sum of per-robot costs");
  }
  if (sol.assignment.labels.size() != n_sites) {
    throw std::runtime_error("solution: assignment labels sized wrong");
  }
  for (std::size_t i = 0; i < n_sites; ++i) {
    if (sol.assignment.labels[i] != owner[i]) {
      throw std::runtime_error("solution: assignment label of site " +
                               std::to_string(i + 1) +
                               " disagrees with the serving route");
    }
  }
}

}  // namespace mrta
