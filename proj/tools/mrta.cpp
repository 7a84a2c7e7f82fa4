#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mrta/bench.hpp"
#include "mrta/plots.hpp"
#include "mrta/solution_io.hpp"

namespace {

namespace fs = std::filesystem;
using namespace mrta;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

// raised for semantic argument errors; maps to the usage exit code
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<std::uint64_t> env_seed_override() {
  const char* env = std::getenv("MRTA_SEED");
  if (!env || *env == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0') {
    throw UsageError("MRTA_SEED is not a valid unsigned integer");
  }
  return static_cast<std::uint64_t>(v);
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::string>& rows, bool append) {
  const bool fresh = !append || !fs::exists(path);
  std::ofstream out(path, append ? std::ios::app : std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  if (fresh) out << header << '\n';
  for (const std::string& r : rows) out << r << '\n';
}

KMeansInit parse_init(const std::string& name) {
  if (name == "random") return KMeansInit::uniform_random_sites;
  if (name == "spread") return KMeansInit::spread_seeding;
  throw UsageError("unknown k-means init '" + name + "'");
}

struct GenArgs {
  std::size_t sites = 50;
  std::size_t robots = 4;
  std::vector<double> workspace{100.0, 100.0};
  std::vector<double> depot{0.0, 0.0};
  double budget = 500.0;
  std::uint64_t seed = 0;
  std::string backend = "euclidean";
  double cell_size = 1.0;
  std::string output;
};

int cmd_gen(const GenArgs& a) {
  std::uint64_t seed = a.seed;
  if (const auto env = env_seed_override()) seed = *env;

  Scenario sc;
  const Point depot{a.depot[0], a.depot[1]};
  if (cost_backend_from_string(a.backend) == CostBackend::grid) {
    const auto cells_w =
        static_cast<std::size_t>(a.workspace[0] / a.cell_size) + 1;
    const auto cells_h =
        static_cast<std::size_t>(a.workspace[1] / a.cell_size) + 1;
    const GridMap map = GridMap::open(cells_w, cells_h, a.cell_size);
    sc = generate_grid_scenario(a.sites, a.robots, map, depot, a.budget, seed);
  } else {
    sc = generate_scenario(a.sites, a.robots, a.workspace[0], a.workspace[1],
                           depot, a.budget, seed);
  }
  save_scenario(sc, a.output);
  std::cout << "wrote " << a.output << ": " << sc.sites.size()
            << " task sites, " << sc.robots.size() << " robots, budget "
            << a.budget << ", seed " << seed << ", backend "
            << to_string(sc.cost_backend) << "\n";
  return kExitOk;
}

struct SolveArgs {
  std::string scenario;
  std::string method = "clustered";
  std::optional<std::uint64_t> seed;
  std::string output = "solution.json";
  std::string csv;
  bool strict = false;
  bool serial = false;
  std::string kmeans_init = "random";
  double radius = 1.0;
  GAConfig ga;
};

int cmd_solve(const SolveArgs& a) {
  const Scenario sc = load_scenario(a.scenario);
  std::uint64_t seed = a.seed.value_or(sc.seed);
  if (const auto env = env_seed_override()) seed = *env;

  ExperimentConfig cfg;
  cfg.ga = a.ga;
  cfg.kmeans_init = parse_init(a.kmeans_init);
  cfg.depot_exclusion_radius = a.radius;
  const Exec exec = a.serial ? Exec::serial : Exec::parallel;

  const CostMatrix costs = build_cost_matrix(sc, exec);
  double seconds = 0.0;
  const Solution sol =
      run_method(a.method, sc, costs, seed, cfg, &seconds, exec);
  validate_solution(sol, sc, costs);
  save_solution(sol, sc, a.output);

  const MetricsReport m = compute_metrics(sol, sc, a.radius, exec);
  MethodRun row;
  row.method = a.method;
  row.seed = seed;
  row.rep = 0;
  row.n_sites = sc.sites.size();
  row.n_robots = sc.robots.size();
  row.total_cost = m.total_cost;
  row.time_s = seconds;
  row.load_balance = m.load_balance;
  row.collisions = m.collision_count;
  row.all_feasible = std::all_of(sol.feasible.begin(), sol.feasible.end(),
                                 [](bool f) { return f; });
  if (!a.csv.empty()) {
    write_csv(a.csv, MethodRun::csv_header(), {row.csv_row()}, true);
  }

  std::cout << "method " << a.method << ": total_cost " << m.total_cost
            << ", load_balance " << m.load_balance << ", collisions "
            << m.collision_count << ", time " << seconds << " s, feasible "
            << (row.all_feasible ? "yes" : "no") << "\n";
  std::cout << "wrote " << a.output << "\n";

  if (a.strict && !row.all_feasible) {
    std::cerr << "error: budget exceeded for at least one robot\n";
    return kExitInfeasible;
  }
  return kExitOk;
}

struct BenchArgs {
  ExperimentConfig cfg;
  std::vector<double> workspace{100.0, 100.0};
  std::string backend = "euclidean";
  std::string kmeans_init = "random";
  std::vector<std::size_t> sizes{20, 50, 100, 200};     // sweep only
  std::vector<std::size_t> robot_counts{4};             // sweep only
};

void apply_common(BenchArgs& a) {
  a.cfg.width = a.workspace[0];
  a.cfg.height = a.workspace[1];
  a.cfg.backend = cost_backend_from_string(a.backend);
  a.cfg.kmeans_init = parse_init(a.kmeans_init);
  if (a.cfg.methods.empty()) throw UsageError("methods list is empty");
  if (const auto env = env_seed_override()) a.cfg.seeds = {*env};
  fs::create_directories(a.cfg.output_dir);
}

void print_summary(const std::vector<MethodSummary>& summary,
                   std::ostream& out) {
  out << "\nmethod       sites robots  med_cost  med_time_s  med_lb  med_col\n";
  for (const MethodSummary& s : summary) {
    out << s.method;
    for (std::size_t i = s.method.size(); i < 13; ++i) out << ' ';
    out << s.n_sites << "    " << s.n_robots << "      " << s.median_cost
        << "  " << s.median_time_s << "  " << s.median_load_balance << "  "
        << s.median_collisions << "\n";
  }
}

int cmd_bench(BenchArgs& a) {
  apply_common(a);
  const std::vector<MethodRun> rows = run_bench(a.cfg, std::cout);

  std::vector<std::string> lines;
  for (const MethodRun& r : rows) lines.push_back(r.csv_row());
  const std::string results = a.cfg.output_dir + "/results.csv";
  write_csv(results, MethodRun::csv_header(), lines, false);

  const std::vector<MethodSummary> summary = summarize(rows);
  std::vector<std::string> summary_lines;
  for (const MethodSummary& s : summary) summary_lines.push_back(s.csv_row());
  write_csv(a.cfg.output_dir + "/summary.csv", MethodSummary::csv_header(),
            summary_lines, false);
  print_summary(summary, std::cout);

  if (a.cfg.emit_plots) {
    for (const std::uint64_t seed : a.cfg.seeds) {
      const Scenario sc = scenario_for_seed(a.cfg, seed);
      const CostMatrix costs = build_cost_matrix(sc);
      for (const std::string& method : a.cfg.methods) {
        const Solution sol = run_method(method, sc, costs, seed, a.cfg);
        write_routes_svg(sol, sc,
                         a.cfg.output_dir + "/routes_" + method + "_s" +
                             std::to_string(seed) + ".svg");
      }
    }
  }
  std::cout << "wrote " << results << "\n";
  return kExitOk;
}

int cmd_sweep(BenchArgs& a) {
  apply_common(a);
  const std::vector<MethodRun> rows =
      run_sweep(a.cfg, a.sizes, a.robot_counts, std::cout);

  std::vector<std::string> lines;
  for (const MethodRun& r : rows) lines.push_back(r.csv_row());
  write_csv(a.cfg.output_dir + "/sweep.csv", MethodRun::csv_header(), lines,
            false);

  const std::vector<MethodSummary> summary = summarize(rows);
  std::vector<std::string> summary_lines;
  for (const MethodSummary& s : summary) summary_lines.push_back(s.csv_row());
  write_csv(a.cfg.output_dir + "/sweep_summary.csv",
            MethodSummary::csv_header(), summary_lines, false);
  print_summary(summary, std::cout);

  // time-vs-size curves, one chart per team size
  for (const std::size_t robots : a.robot_counts) {
    std::vector<NamedSeries> curves;
    for (const std::string& method : a.cfg.methods) {
      NamedSeries s;
      s.name = method;
      for (const std::size_t sites : a.sizes) {
        for (const MethodSummary& sum : summary) {
          if (sum.method == method && sum.n_sites == sites &&
              sum.n_robots == robots) {
            s.x.push_back(static_cast<double>(sites));
            s.y.push_back(sum.median_time_s);
          }
        }
      }
      curves.push_back(std::move(s));
    }
    write_curves_svg(curves, "Median solve time vs task count (" +
                                 std::to_string(robots) + " robots)",
                     "tasks", "time [s]",
                     a.cfg.output_dir + "/sweep_time_r" +
                         std::to_string(robots) + ".svg");
  }
  std::cout << "wrote " << a.cfg.output_dir << "/sweep.csv\n";
  return kExitOk;
}

struct PlotArgs {
  std::string solution;
  std::string output_dir = "plots";
};

int cmd_plot(const PlotArgs& a) {
  const SolutionFile sf = load_solution(a.solution);
  fs::create_directories(a.output_dir);
  int written = 0;

  write_routes_svg(sf.solution, sf.scenario, a.output_dir + "/routes.svg");
  ++written;

  if (sf.solution.assignment.wcm_trace.empty()) {
    std::cerr << "warning: solution has no wcm_trace; skipping wcm.svg\n";
  } else {
    write_series_svg(sf.solution.assignment.wcm_trace,
                     "K-means within-cluster variance", "WCM [m^2]",
                     a.output_dir + "/wcm.svg");
    ++written;
  }

  if (sf.solution.two_opt_traces.empty()) {
    std::cerr << "warning: solution has no two_opt_traces; "
                 "skipping per-robot cost charts\n";
  } else {
    for (std::size_t k = 0; k < sf.solution.two_opt_traces.size(); ++k) {
      const auto& trace = sf.solution.two_opt_traces[k];
      if (trace.empty()) continue;
      write_series_svg(trace,
                       "2-opt cost, robot " + std::to_string(k), "cost [m]",
                       a.output_dir + "/two_opt_robot_" + std::to_string(k) +
                           ".svg");
      ++written;
    }
  }
  std::cout << "wrote " << written << " SVG file(s) to " << a.output_dir
            << "\n";
  return kExitOk;
}

void add_ga_options(CLI::App* cmd, GAConfig& ga) {
  cmd->add_option("--ga-pop", ga.population_size, "GA population size");
  cmd->add_option("--ga-gens", ga.generations, "GA generations");
  cmd->add_option("--ga-crossover", ga.crossover_rate, "GA crossover rate");
  cmd->add_option("--ga-mutation", ga.mutation_rate, "GA mutation rate");
  cmd->add_option("--ga-tournament", ga.tournament_size, "GA tournament size");
  cmd->add_option("--ga-penalty", ga.budget_penalty_weight,
                  "GA budget penalty weight");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spatial-clustering multi-robot task allocation benchmark"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a random scenario");
  gen_cmd->add_option("--sites", gen.sites, "Total sites incl. the depot");
  gen_cmd->add_option("--robots", gen.robots, "Robot count");
  gen_cmd->add_option("--workspace", gen.workspace, "Workspace W H [m]")
      ->expected(2);
  gen_cmd->add_option("--depot", gen.depot, "Depot X Y [m]")->expected(2);
  gen_cmd->add_option("--budget", gen.budget, "Per-robot budget [m]");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--backend", gen.backend, "euclidean | grid");
  gen_cmd->add_option("--cell-size", gen.cell_size, "Grid cell size [m]");
  gen_cmd->add_option("-o,--output", gen.output, "Scenario file")->required();

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve one scenario");
  solve_cmd->add_option("--scenario", solve.scenario, "Scenario file")
      ->required();
  solve_cmd->add_option("--method", solve.method, "clustered | ga | greedy");
  std::uint64_t solve_seed = 0;
  CLI::Option* solve_seed_opt =
      solve_cmd->add_option("--seed", solve_seed, "Solver seed");
  solve_cmd->add_option("-o,--output", solve.output, "Solution file");
  solve_cmd->add_option("--csv", solve.csv, "Append a metrics row here");
  solve_cmd->add_flag("--strict", solve.strict,
                      "Exit 1 when any robot exceeds its budget");
  solve_cmd->add_flag("--serial", solve.serial, "Use the serial kernels");
  solve_cmd->add_option("--kmeans-init", solve.kmeans_init, "random | spread");
  solve_cmd->add_option("--radius", solve.radius,
                        "Depot exclusion radius for the collision metric");
  add_ga_options(solve_cmd, solve.ga);

  BenchArgs bench;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Compare methods over seeds");
  bench_cmd->add_option("--scenario", bench.cfg.scenario_path,
                        "Fixed scenario file (otherwise generated per seed)");
  bench_cmd->add_option("--sites", bench.cfg.n_sites,
                        "Total sites incl. the depot");
  bench_cmd->add_option("--robots", bench.cfg.n_robots, "Robot count");
  bench_cmd->add_option("--workspace", bench.workspace, "Workspace W H [m]")
      ->expected(2);
  bench_cmd->add_option("--budget", bench.cfg.budget, "Per-robot budget [m]");
  bench_cmd->add_option("--backend", bench.backend, "euclidean | grid");
  bench_cmd->add_option("--cell-size", bench.cfg.cell_size, "Grid cell size");
  bench_cmd->add_option("--methods", bench.cfg.methods,
                        "Subset of: clustered ga greedy");
  bench_cmd->add_option("--seeds", bench.cfg.seeds, "Seed list");
  bench_cmd->add_option("--reps", bench.cfg.repetitions,
                        "Repetitions per (method, seed)");
  bench_cmd->add_option("-o,--output-dir", bench.cfg.output_dir, "Output dir");
  bench_cmd->add_flag("--emit-plots", bench.cfg.emit_plots,
                      "Write route SVGs per (method, seed)");
  bench_cmd->add_option("--kmeans-init", bench.kmeans_init, "random | spread");
  add_ga_options(bench_cmd, bench.cfg.ga);

  BenchArgs sweep;
  sweep.cfg.repetitions = 3;
  sweep.cfg.seeds = {0, 1, 2};
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Scalability sweep over task counts");
  sweep_cmd->add_option("--sizes", sweep.sizes, "Task counts");
  sweep_cmd->add_option("--robots-list", sweep.robot_counts, "Team sizes");
  sweep_cmd->add_option("--budget", sweep.cfg.budget, "Per-robot budget [m]");
  sweep_cmd->add_option("--workspace", sweep.workspace, "Workspace W H [m]")
      ->expected(2);
  sweep_cmd->add_option("--backend", sweep.backend, "euclidean | grid");
  sweep_cmd->add_option("--cell-size", sweep.cfg.cell_size, "Grid cell size");
  sweep_cmd->add_option("--methods", sweep.cfg.methods,
                        "Subset of: clustered ga greedy");
  sweep_cmd->add_option("--seeds", sweep.cfg.seeds, "Seed list");
  sweep_cmd->add_option("--reps", sweep.cfg.repetitions, "Repetitions");
  sweep_cmd->add_option("-o,--output-dir", sweep.cfg.output_dir, "Output dir");
  sweep_cmd->add_option("--kmeans-init", sweep.kmeans_init, "random | spread");
  add_ga_options(sweep_cmd, sweep.cfg.ga);

  PlotArgs plot;
  CLI::App* plot_cmd =
      app.add_subcommand("plot", "Render SVGs from a solution file");
  plot_cmd->add_option("--solution", plot.solution, "Solution file")
      ->required();
  plot_cmd->add_option("-o,--output-dir", plot.output_dir, "Output dir");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen);
    if (solve_cmd->parsed()) {
      if (solve_seed_opt->count() > 0) solve.seed = solve_seed;
      return cmd_solve(solve);
    }
    if (bench_cmd->parsed()) return cmd_bench(bench);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep);
    if (plot_cmd->parsed()) return cmd_plot(plot);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
