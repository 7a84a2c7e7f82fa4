#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mrta/common.hpp"
#include "mrta/geometry.hpp"

namespace mrta {

struct Robot {
  std::size_t id = 0;
  double budget = 0.0;  // max travel cost B_k, meters
};

struct Task {
  std::size_t site = 0;  // location index; never the depot (0)
  std::size_t measurement_type = 0;
};

enum class CostBackend { euclidean, grid };

std::string to_string(CostBackend backend);
CostBackend cost_backend_from_string(const std::string& name);

struct Scenario {
  static constexpr int kSchemaVersion = 1;
  static constexpr double kSpeedMps = 1.0;  // cost in meters == cost in seconds

  double width = 100.0;
  double height = 100.0;
  Point depot;
  std::vector<Point> sites;  // task sites; depot is location index 0
  std::vector<Robot> robots;
  std::vector<Task> tasks;
  std::uint64_t seed = 0;
  CostBackend cost_backend = CostBackend::euclidean;
  std::optional<GridMap> grid;  // present iff cost_backend == grid
  std::string grid_file;        // file name the grid is persisted under

  std::size_t location_count() const { return sites.size() + 1; }
};

bool operator==(const Scenario& a, const Scenario& b);

// Uniform-random scenario: n_sites counts the depot, so n_sites - 1 task
// sites are drawn with rejection to keep a 1e-3 m minimum spacing (also
// against the depot). Requires n_sites - 1 >= n_robots.
Scenario generate_scenario(std::size_t n_sites, std::size_t n_robots,
                           double width, double height, Point depot,
                           double budget, std::uint64_t seed);

// Grid-backend variant: depot and sites are placed on distinct unblocked
// cell centers of `map`.
Scenario generate_grid_scenario(std::size_t n_sites, std::size_t n_robots,
                                const GridMap& map, Point depot, double budget,
                                std::uint64_t seed);

// Throws std::runtime_error naming the offending field on any violation.
void validate_scenario(const Scenario& scenario);

Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& scenario, const std::string& path);

CostMatrix build_cost_matrix(const Scenario& scenario,
                             Exec exec = Exec::parallel);

}  // namespace mrta
