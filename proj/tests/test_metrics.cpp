#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mrta/baselines.hpp"
#include "mrta/metrics.hpp"
#include "mrta/rng.hpp"

using namespace mrta;

namespace {

// scenario + solution assembled by hand: route orders given per robot
struct Fixture {
  Scenario scenario;
  Solution solution;
};

Fixture make_fixture(const Point& depot, const std::vector<Point>& sites,
                     const std::vector<std::vector<std::size_t>>& orders,
                     double budget = 1e6) {
  Fixture f;
  f.scenario.width = 1000;
  f.scenario.height = 1000;
  f.scenario.depot = depot;
  f.scenario.sites = sites;
  for (std::size_t k = 0; k < orders.size(); ++k) {
    f.scenario.robots.push_back({k, budget});
  }
  for (std::size_t i = 0; i < sites.size(); ++i) {
    f.scenario.tasks.push_back({i + 1, 0});
  }
  const CostMatrix c = build_cost_matrix(f.scenario);
  f.solution.method = "fixture";
  for (const auto& order : orders) {
    Tour t;
    t.order = order;
    t.cost = tour_cost(c, order);
    f.solution.routes.push_back(t);
    f.solution.per_robot_cost.push_back(t.cost);
    f.solution.total_cost += t.cost;
    f.solution.feasible.push_back(t.cost <= budget);
  }
  f.solution.assignment = assignment_from_routes(f.solution.routes, f.scenario);
  return f;
}

}  // namespace

TEST_CASE("total mission cost") {
  SUBCASE("empty routes cost nothing") {
    const Fixture f =
        make_fixture({0, 0}, {{1, 1}}, {{0, 1, 0}, {0, 0}});
    Solution idle = f.solution;
    idle.routes = {{std::vector<std::size_t>{0, 0}, 0.0},
                   {std::vector<std::size_t>{0, 0}, 0.0}};
    idle.per_robot_cost = {0.0, 0.0};
    CHECK(total_mission_cost(idle) == 0.0);
  }
  SUBCASE("costs add up") {
    Solution s;
    s.per_robot_cost = {10.0, 15.0};
    CHECK(total_mission_cost(s) == doctest::Approx(25.0));
  }
  SUBCASE("stored total matches an independent re-summation") {
    const Fixture f = make_fixture(
        {0, 0}, {{5, 0}, {0, 5}, {5, 5}}, {{0, 1, 3, 0}, {0, 2, 0}});
    double resum = 0.0;
    for (double c : f.solution.per_robot_cost) resum += c;
    CHECK(total_mission_cost(f.solution) ==
          doctest::Approx(resum).epsilon(1e-12));
    CHECK(std::abs(resum - f.solution.total_cost) < 1e-9);
  }
}

TEST_CASE("load balance") {
  CHECK(load_balance(std::vector<double>{4.0, 4.0, 4.0}) == 0.0);
  CHECK(load_balance(std::vector<double>{10.0, 20.0}) == doctest::Approx(5.0));
  CHECK_THROWS_AS(load_balance(std::vector<double>{}), std::invalid_argument);

  SUBCASE("permutation invariant, scales linearly") {
    RandomEngine rng(3);
    for (int it = 0; it < 50; ++it) {
      std::vector<double> costs;
      for (int i = 0; i < 5; ++i) costs.push_back(rng.next_uniform(0, 100));
      const double base = load_balance(costs);
      std::vector<double> shuffled = costs;
      rng.shuffle(shuffled);
      CHECK(load_balance(shuffled) == doctest::Approx(base).epsilon(1e-12));
      std::vector<double> scaled = costs;
      for (double& v : scaled) v *= 3.5;
      CHECK(load_balance(scaled) == doctest::Approx(3.5 * base).epsilon(1e-12));
    }
  }
}

TEST_CASE("collision counting") {
  SUBCASE("disjoint half planes never intersect") {
    const Fixture f = make_fixture(
        {50, 0}, {{10, 10}, {20, 10}, {80, 10}, {90, 10}},
        {{0, 1, 2, 0}, {0, 3, 4, 0}});
    CHECK(collision_count(f.solution, f.scenario) == 0);
  }
  SUBCASE("a single crossing counts once") {
    // inner legs 1->2 and 3->4 form an X far from the depot
    const Fixture f = make_fixture(
        {0, 0}, {{10, 10}, {20, 20}, {10, 20}, {20, 10}},
        {{0, 1, 2, 0}, {0, 3, 4, 0}});
    CHECK(collision_count(f.solution, f.scenario) == 1);
  }
  SUBCASE("depot approach legs are not counted") {
    // robot A's depot leg would cross robot B's inner leg at (15,15)
    const Fixture f = make_fixture(
        {0, 0}, {{20, 20}, {10, 20}, {20, 10}}, {{0, 1, 0}, {0, 2, 3, 0}});
    CHECK(collision_count(f.solution, f.scenario) == 0);
  }
  SUBCASE("intersections inside the exclusion radius are dropped") {
    // inner legs cross at (15,15); the depot sits sqrt(2) away
    const Fixture f = make_fixture(
        {14, 14}, {{10, 10}, {20, 20}, {10, 20}, {20, 10}},
        {{0, 1, 2, 0}, {0, 3, 4, 0}});
    CHECK(collision_count(f.solution, f.scenario, 1.0) == 1);
    CHECK(collision_count(f.solution, f.scenario, 10.0) == 0);
  }
  SUBCASE("collinear overlap counts once per pair") {
    const Fixture f = make_fixture(
        {0, 0}, {{10, 5}, {30, 5}, {15, 5}, {25, 5}},
        {{0, 1, 2, 0}, {0, 3, 4, 0}});
    CHECK(collision_count(f.solution, f.scenario) == 1);
  }
  SUBCASE("single robot has no collision by definition") {
    const Fixture f =
        make_fixture({0, 0}, {{1, 1}, {2, 2}}, {{0, 1, 2, 0}});
    CHECK(collision_count(f.solution, f.scenario) == 0);
  }
}

TEST_CASE("collision count invariances") {
  RandomEngine rng(99);
  for (int it = 0; it < 40; ++it) {
    Scenario sc;
    sc.width = 100;
    sc.height = 100;
    sc.depot = {0, 0};
    const std::size_t n = 6 + rng.next_index(6);
    const std::size_t robots = 2 + rng.next_index(3);
    for (std::size_t i = 0; i < n; ++i) {
      sc.sites.push_back({rng.next_uniform(1, 99), rng.next_uniform(1, 99)});
    }
    for (std::size_t k = 0; k < robots; ++k) sc.robots.push_back({k, 1e6});
    for (std::size_t i = 0; i < n; ++i) sc.tasks.push_back({i + 1, 0});
    if (sc.sites.size() < sc.robots.size()) continue;
    const CostMatrix c = build_cost_matrix(sc);
    const Solution sol = greedy_allocate(sc, c);
    const long long base = collision_count(sol, sc);

    // robot relabeling: reverse the route order
    Solution relabeled = sol;
    std::reverse(relabeled.routes.begin(), relabeled.routes.end());
    std::reverse(relabeled.per_robot_cost.begin(),
                 relabeled.per_robot_cost.end());
    relabeled.assignment = assignment_from_routes(relabeled.routes, sc);
    CHECK(collision_count(relabeled, sc) == base);

    // translation of every coordinate
    const double dx = rng.next_uniform(-40, 40);
    const double dy = rng.next_uniform(-40, 40);
    Scenario moved = sc;
    moved.width = 1e9;  // keep translated sites inside some workspace
    moved.height = 1e9;
    moved.depot = {sc.depot.x + dx, sc.depot.y + dy};
    for (Point& p : moved.sites) {
      p.x += dx;
      p.y += dy;
    }
    CHECK(collision_count(sol, moved) == base);
  }
}

TEST_CASE("grid backend counts crossings of the grid polylines") {
  const GridMap map = GridMap::open(7, 7, 1.0);
  Scenario sc;
  sc.width = 6;
  sc.height = 6;
  sc.depot = {0, 0};
  // robot A travels the corridor y=1; robot B descends the column x=3
  sc.sites = {{4, 1}, {1, 1}, {3, 3}, {3, 0}};
  sc.robots = {{0, 1e6}, {1, 1e6}};
  sc.tasks = {{1, 0}, {2, 0}, {3, 0}, {4, 0}};
  sc.cost_backend = CostBackend::grid;
  sc.grid = map;
  const CostMatrix c = build_cost_matrix(sc);
  Solution sol;
  sol.method = "fixture";
  Tour a;
  a.order = {0, 2, 1, 0};  // inner leg (1,1) -> (4,1)
  a.cost = tour_cost(c, a.order);
  Tour b;
  b.order = {0, 3, 4, 0};  // inner leg (3,3) -> (3,0)
  b.cost = tour_cost(c, b.order);
  sol.routes = {a, b};
  sol.per_robot_cost = {a.cost, b.cost};
  sol.total_cost = a.cost + b.cost;
  sol.feasible = {true, true};
  sol.assignment = assignment_from_routes(sol.routes, sc);
  CHECK(collision_count(sol, sc) == 1);  // the polylines cross at (3,1)

  Scenario euclid = sc;
  euclid.cost_backend = CostBackend::euclidean;
  euclid.grid.reset();
  CHECK(collision_count(sol, euclid) == 1);
}

TEST_CASE("timed wraps the call") {
  const auto [value, seconds] = timed([] {
    volatile double x = 0;
    for (int i = 0; i < 100000; ++i) x = x + 1.0;
    return 42;
  });
  CHECK(value == 42);
  CHECK(seconds > 0.0);
}
