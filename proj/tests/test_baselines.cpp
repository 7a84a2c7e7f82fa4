#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mrta/baselines.hpp"
#include "mrta/solution_io.hpp"

using namespace mrta;

namespace {

Scenario tiny_scenario(const std::vector<Point>& sites, std::size_t robots,
                       double budget) {
  Scenario sc;
  sc.width = 200;
  sc.height = 200;
  sc.depot = {0, 0};
  sc.sites = sites;
  for (std::size_t k = 0; k < robots; ++k) sc.robots.push_back({k, budget});
  for (std::size_t i = 0; i < sites.size(); ++i) sc.tasks.push_back({i + 1, 0});
  return sc;
}

}  // namespace

TEST_CASE("ga finds the collinear optimum") {
  const Scenario sc = tiny_scenario({{1, 0}, {2, 0}, {3, 0}}, 1, 100);
  const CostMatrix c = build_cost_matrix(sc);
  GAConfig cfg;
  cfg.population_size = 40;
  cfg.generations = 120;
  cfg.seed = 5;
  const Solution sol = ga_allocate(sc, c, cfg);
  validate_solution(sol, sc, c);
  CHECK(sol.total_cost == doctest::Approx(6.0));
  CHECK(sol.total_cost ==
        doctest::Approx(brute_force_tsp(c, {1, 2, 3}).cost));
}

TEST_CASE("zero generations returns the best random individual") {
  const Scenario sc = tiny_scenario({{1, 0}, {2, 0}, {3, 0}}, 1, 100);
  const CostMatrix c = build_cost_matrix(sc);
  GAConfig cfg;
  cfg.population_size = 10;
  cfg.generations = 0;
  cfg.seed = 9;
  GaStats stats;
  const Solution sol = ga_allocate(sc, c, cfg, &stats);
  validate_solution(sol, sc, c);
  CHECK(stats.best_fitness_trace.size() == 1);
  CHECK(sol.total_cost >= brute_force_tsp(c, {1, 2, 3}).cost - 1e-9);
}

TEST_CASE("ga config validation") {
  const Scenario sc = tiny_scenario({{1, 0}, {2, 0}}, 1, 100);
  const CostMatrix c = build_cost_matrix(sc);
  GAConfig cfg;
  cfg.population_size = 2;
  cfg.tournament_size = 3;
  CHECK_THROWS_AS(ga_allocate(sc, c, cfg), std::invalid_argument);
  cfg.tournament_size = 0;
  CHECK_THROWS_AS(ga_allocate(sc, c, cfg), std::invalid_argument);
  cfg = GAConfig{};
  cfg.mutation_rate = 1.5;
  CHECK_THROWS_AS(ga_allocate(sc, c, cfg), std::invalid_argument);
  cfg = GAConfig{};
  cfg.population_size = 0;
  CHECK_THROWS_AS(ga_allocate(sc, c, cfg), std::invalid_argument);
}

TEST_CASE("elitist best fitness never rises") {
  const Scenario sc = generate_scenario(25, 3, 100, 100, {0, 0}, 500, 33);
  const CostMatrix c = build_cost_matrix(sc);
  GAConfig cfg;
  cfg.population_size = 30;
  cfg.generations = 60;
  cfg.seed = 33;
  GaStats stats;
  const Solution sol = ga_allocate(sc, c, cfg, &stats);
  validate_solution(sol, sc, c);
  REQUIRE(stats.best_fitness_trace.size() == 61);
  for (std::size_t g = 0; g + 1 < stats.best_fitness_trace.size(); ++g) {
    CHECK(stats.best_fitness_trace[g + 1] <=
          stats.best_fitness_trace[g] + 1e-9);
  }
}

TEST_CASE("ga is deterministic per seed") {
  const Scenario sc = generate_scenario(20, 2, 100, 100, {0, 0}, 500, 8);
  const CostMatrix c = build_cost_matrix(sc);
  GAConfig cfg;
  cfg.population_size = 20;
  cfg.generations = 25;
  cfg.seed = 4;
  auto ja = solution_to_json(ga_allocate(sc, c, cfg), sc);
  auto jb = solution_to_json(ga_allocate(sc, c, cfg), sc);
  ja.erase("solve_time_s");
  jb.erase("solve_time_s");
  CHECK(ja.dump() == jb.dump());
}

TEST_CASE("ga respects budgets through the penalty when possible") {
  // two clusters of work, budgets sized so each robot can serve one side
  const Scenario sc =
      tiny_scenario({{10, 0}, {12, 0}, {0, 10}, {0, 12}}, 2, 30);
  const CostMatrix c = build_cost_matrix(sc);
  GAConfig cfg;
  cfg.population_size = 60;
  cfg.generations = 150;
  cfg.seed = 2;
  const Solution sol = ga_allocate(sc, c, cfg);
  validate_solution(sol, sc, c);
  CHECK(std::all_of(sol.feasible.begin(), sol.feasible.end(),
                    [](bool f) { return f; }));
}

TEST_CASE("greedy forced allocation") {
  const Scenario sc = tiny_scenario({{3, 4}}, 1, 100);
  const CostMatrix c = build_cost_matrix(sc);
  const Solution sol = greedy_allocate(sc, c);
  validate_solution(sol, sc, c);
  CHECK(sol.total_cost == doctest::Approx(10.0));
}

TEST_CASE("greedy splits the two nearest sites") {
  const Scenario sc = tiny_scenario({{1, 0}, {0, 1}}, 2, 100);
  const CostMatrix c = build_cost_matrix(sc);
  const Solution sol = greedy_allocate(sc, c);
  validate_solution(sol, sc, c);
  CHECK(sol.total_cost == doctest::Approx(4.0));
  // one site each
  CHECK(sol.routes[0].order.size() == 3);
  CHECK(sol.routes[1].order.size() == 3);
}

TEST_CASE("greedy covers every site exactly once") {
  const Scenario sc = generate_scenario(35, 4, 100, 100, {0, 0}, 500, 77);
  const CostMatrix c = build_cost_matrix(sc);
  const Solution sol = greedy_allocate(sc, c);
  validate_solution(sol, sc, c);  // includes the exactly-once partition check

  std::vector<std::size_t> visited;
  for (const Tour& t : sol.routes) {
    for (std::size_t idx : t.order) {
      if (idx != 0) visited.push_back(idx);
    }
  }
  std::sort(visited.begin(), visited.end());
  std::vector<std::size_t> expected(sc.sites.size());
  for (std::size_t i = 0; i < expected.size(); ++i) expected[i] = i + 1;
  CHECK(visited == expected);
}

TEST_CASE("greedy is deterministic") {
  const Scenario sc = generate_scenario(30, 3, 100, 100, {0, 0}, 500, 55);
  const CostMatrix c = build_cost_matrix(sc);
  auto ja = solution_to_json(greedy_allocate(sc, c), sc);
  auto jb = solution_to_json(greedy_allocate(sc, c), sc);
  ja.erase("solve_time_s");
  jb.erase("solve_time_s");
  CHECK(ja.dump() == jb.dump());
}
