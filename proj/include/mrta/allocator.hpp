#pragma once

#include <string>
#include <vector>

#include "mrta/clustering.hpp"
#include "mrta/routing.hpp"
#include "mrta/scenario.hpp"

namespace mrta {

struct Solution {
  std::string method;            // "clustered" | "ga" | "greedy"
  ClusterAssignment assignment;  // labels index the serving robot
  std::vector<Tour> routes;      // one depot-anchored tour per robot
  std::vector<double> per_robot_cost;
  double total_cost = 0.0;
  std::vector<bool> feasible;    // per robot: cost <= budget
  double solve_time_s = 0.0;
  std::vector<std::vector<double>> two_opt_traces;  // per robot, may be empty
};

// Robot k <- cluster k (all robots share the depot, so the mapping is
// cost-neutral).
std::vector<std::size_t> cluster_to_robot_mapping(
    const ClusterAssignment& assignment, const std::vector<Robot>& robots);

// Exhaustive matching minimizing the summed home-to-centroid distance;
// limited to 8 robots.
std::vector<std::size_t> cluster_to_robot_mapping(
    const ClusterAssignment& assignment, const std::vector<Robot>& robots,
    const std::vector<Point>& robot_homes);

// Full pipeline: k-means partition, one cluster per robot, 2-opt over
// {depot} u cluster. Budget violations are flagged, never repaired.
Solution solve_clustered(const Scenario& scenario, const CostMatrix& costs,
                         const KMeansConfig& config, Exec exec = Exec::parallel);

// Shared validator for every allocator's output: partition of the sites,
// depot-anchored routes, consistent costs and feasibility flags. Throws
// std::runtime_error describing the first violation.
void validate_solution(const Solution& solution, const Scenario& scenario,
                       const CostMatrix& costs);

// Labels/centroids reconstructed from routes; used by allocators that do
// not cluster (GA, greedy) so every Solution carries an assignment.
ClusterAssignment assignment_from_routes(const std::vector<Tour>& routes,
                                         const Scenario& scenario);

}  // namespace mrta
