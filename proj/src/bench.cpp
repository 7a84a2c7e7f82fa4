#include "mrta/bench.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace mrta {

namespace {

std::string csv_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string MethodRun::csv_header() {
  return "method,seed,rep,n_sites,n_robots,total_cost,time_s,load_balance,"
         "collisions,feasible";
}

std::string MethodRun::csv_row() const {
  std::ostringstream os;
  os << method << ',' << seed << ',' << rep << ',' << n_sites << ','
     << n_robots << ',' << csv_double(total_cost) << ',' << csv_double(time_s)
     << ',' << csv_double(load_balance) << ',' << collisions << ','
     << (all_feasible ? 1 : 0);
  return os.str();
}

std::string MethodSummary::csv_header() {
  return "method,n_sites,n_robots,median_cost,median_time_s,"
         "median_load_balance,median_collisions";
}

std::string MethodSummary::csv_row() const {
  std::ostringstream os;
  os << method << ',' << n_sites << ',' << n_robots << ','
     << csv_double(median_cost) << ',' << csv_double(median_time_s) << ','
     << csv_double(median_load_balance) << ',' << csv_double(median_collisions);
  return os.str();
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of empty set");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2]
                    : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

Scenario scenario_for_seed(const ExperimentConfig& config, std::uint64_t seed) {
  if (!config.scenario_path.empty()) {
    return load_scenario(config.scenario_path);
  }
  if (config.backend == CostBackend::grid) {
    const std::size_t cells_w =
        static_cast<std::size_t>(config.width / config.cell_size) + 1;
    const std::size_t cells_h =
        static_cast<std::size_t>(config.height / config.cell_size) + 1;
    const GridMap map = GridMap::open(cells_w, cells_h, config.cell_size);
    return generate_grid_scenario(config.n_sites, config.n_robots, map,
                                  Point{0.0, 0.0}, config.budget, seed);
  }
  return generate_scenario(config.n_sites, config.n_robots, config.width,
                           config.height, Point{0.0, 0.0}, config.budget,
                           seed);
}

Solution run_method(const std::string& method, const Scenario& scenario,
                    const CostMatrix& costs, std::uint64_t seed,
                    const ExperimentConfig& config, double* time_s, Exec exec) {
  const auto run = [&]() -> Solution {
    if (method == "clustered") {
      KMeansConfig kc;
      kc.k = scenario.robots.size();
      kc.max_iterations = config.kmeans_max_iterations;
      kc.tolerance = config.kmeans_tolerance;
      kc.seed = seed;
      kc.init = config.kmeans_init;
      return solve_clustered(scenario, costs, kc, exec);
    }
    if (method == "ga") {
      GAConfig gc = config.ga;
      gc.seed = seed;
      return ga_allocate(scenario, costs, gc, nullptr, exec);
    }
    if (method == "greedy") {
      return greedy_allocate(scenario, costs);
    }
    throw std::invalid_argument("unknown method '" + method + "'");
  };
  auto [solution, seconds] = timed(run);
  if (time_s) *time_s = seconds;
  return solution;
}

std::vector<MethodRun> run_bench(const ExperimentConfig& config,
                                 std::ostream& log) {
  if (config.methods.empty()) {
    throw std::invalid_argument("bench: methods list is empty");
  }
  if (config.repetitions < 1) {
    throw std::invalid_argument("bench: repetitions must be >= 1");
  }

  std::vector<MethodRun> rows;
  for (const std::uint64_t seed : config.seeds) {
    const Scenario scenario = scenario_for_seed(config, seed);
    const CostMatrix costs = build_cost_matrix(scenario);
    for (const std::string& method : config.methods) {
      for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
        double seconds = 0.0;
        const Solution sol =
            run_method(method, scenario, costs, seed, config, &seconds);
        const MetricsReport m = compute_metrics(
            sol, scenario, config.depot_exclusion_radius);
        MethodRun row;
        row.method = method;
        row.seed = seed;
        row.rep = rep;
        row.n_sites = scenario.sites.size();
        row.n_robots = scenario.robots.size();
        row.total_cost = m.total_cost;
        row.time_s = seconds;
        row.load_balance = m.load_balance;
        row.collisions = m.collision_count;
        row.all_feasible = std::all_of(sol.feasible.begin(), sol.feasible.end(),
                                       [](bool f) { return f; });
        rows.push_back(row);
      }
      log << "seed " << seed << " " << method << ": cost "
          << rows.back().total_cost << ", collisions "
          << rows.back().collisions << "\n";
    }
  }
  return rows;
}

std::vector<MethodRun> run_sweep(const ExperimentConfig& config,
                                 const std::vector<std::size_t>& site_counts,
                                 const std::vector<std::size_t>& robot_counts,
                                 std::ostream& log) {
  if (site_counts.empty() || robot_counts.empty()) {
    throw std::invalid_argument("sweep: empty size list");
  }
  std::vector<MethodRun> rows;
  for (const std::size_t robots : robot_counts) {
    for (const std::size_t sites : site_counts) {
      ExperimentConfig cell = config;
      cell.scenario_path.clear();
      cell.n_sites = sites + 1;  // `sites` counts tasks in the sweep protocol
      cell.n_robots = robots;
      log << "sweep cell: " << sites << " tasks, " << robots << " robots\n";
      std::vector<MethodRun> cell_rows = run_bench(cell, log);
      rows.insert(rows.end(), cell_rows.begin(), cell_rows.end());
    }
  }
  return rows;
}

std::vector<MethodSummary> summarize(const std::vector<MethodRun>& rows) {
  std::map<std::tuple<std::string, std::size_t, std::size_t>,
           std::vector<const MethodRun*>>
      cells;
  for (const MethodRun& r : rows) {
    cells[{r.method, r.n_sites, r.n_robots}].push_back(&r);
  }
  std::vector<MethodSummary> out;
  for (const auto& [key, group] : cells) {
    MethodSummary s;
    s.method = std::get<0>(key);
    s.n_sites = std::get<1>(key);
    s.n_robots = std::get<2>(key);
    std::vector<double> cost, time, lb, col;
    for (const MethodRun* r : group) {
      cost.push_back(r->total_cost);
      time.push_back(r->time_s);
      lb.push_back(r->load_balance);
      col.push_back(static_cast<double>(r->collisions));
    }
    s.median_cost = median(cost);
    s.median_time_s = median(time);
    s.median_load_balance = median(lb);
    s.median_collisions = median(col);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace mrta
