#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mrta/baselines.hpp"
#include "mrta/metrics.hpp"

namespace mrta {

struct MethodRun {
  std::string method;
  std::uint64_t seed = 0;
  std::size_t rep = 0;
  std::size_t n_sites = 0;   // task sites
  std::size_t n_robots = 0;
  double total_cost = 0.0;
  double time_s = 0.0;
  double load_balance = 0.0;
  long long collisions = 0;
  bool all_feasible = true;

  static std::string csv_header();
  std::string csv_row() const;
};

struct ExperimentConfig {
  std::vector<std::string> methods{"clustered", "ga", "greedy"};
  std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4};
  std::size_t repetitions = 5;

  std::string scenario_path;  // when set, generation parameters are ignored
  std::size_t n_sites = 50;   // counts the depot
  std::size_t n_robots = 4;
  double width = 100.0;
  double height = 100.0;
  double budget = 500.0;
  CostBackend backend = CostBackend::euclidean;
  double cell_size = 1.0;

  GAConfig ga;
  std::size_t kmeans_max_iterations = 100;
  double kmeans_tolerance = 1e-4;
  KMeansInit kmeans_init = KMeansInit::uniform_random_sites;
  double depot_exclusion_radius = 1.0;

  std::string output_dir = "bench_out";
  bool emit_plots = false;
};

Scenario scenario_for_seed(const ExperimentConfig& config, std::uint64_t seed);

// One solver invocation; time_s wraps the solve call only.
Solution run_method(const std::string& method, const Scenario& scenario,
                    const CostMatrix& costs, std::uint64_t seed,
                    const ExperimentConfig& config, double* time_s = nullptr,
                    Exec exec = Exec::parallel);

// Full (method x seed x repetition) grid; rows in deterministic order.
std::vector<MethodRun> run_bench(const ExperimentConfig& config,
                                 std::ostream& log);

// Scalability protocol: n_sites sweep for each robot-team size.
std::vector<MethodRun> run_sweep(const ExperimentConfig& config,
                                 const std::vector<std::size_t>& site_counts,
                                 const std::vector<std::size_t>& robot_counts,
                                 std::ostream& log);

struct MethodSummary {
  std::string method;
  std::size_t n_sites = 0;
  std::size_t n_robots = 0;
  double median_cost = 0.0;
  double median_time_s = 0.0;
  double median_load_balance = 0.0;
  double median_collisions = 0.0;

  static std::string csv_header();
  std::string csv_row() const;
};

// Medians per (method, n_sites, n_robots) cell.
std::vector<MethodSummary> summarize(const std::vector<MethodRun>& rows);

double median(std::vector<double> values);

}  // namespace mrta
