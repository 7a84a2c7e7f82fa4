#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mrta/routing.hpp"
#include "mrta/rng.hpp"

using namespace mrta;

namespace {

CostMatrix matrix_for(const Point& depot, const std::vector<Point>& sites) {
  return euclidean_cost_matrix(depot, sites);
}

std::vector<Point> random_sites(std::size_t n, std::uint64_t seed) {
  RandomEngine rng(seed);
  std::vector<Point> sites;
  for (std::size_t i = 0; i < n; ++i) {
    sites.push_back({rng.next_uniform(0, 100), rng.next_uniform(0, 100)});
  }
  return sites;
}

}  // namespace

TEST_CASE("nearest neighbor tour") {
  SUBCASE("single site out and back") {
    const CostMatrix c = matrix_for({0, 0}, {{3, 4}});
    const Tour t = nearest_neighbor_tour(c, {1});
    CHECK(t.order == std::vector<std::size_t>{0, 1, 0});
    CHECK(t.cost == doctest::Approx(10.0));
  }
  SUBCASE("collinear sites are visited in order") {
    const CostMatrix c = matrix_for({0, 0}, {{1, 0}, {2, 0}, {3, 0}});
    const Tour t = nearest_neighbor_tour(c, {1, 2, 3});
    CHECK(t.order == std::vector<std::size_t>{0, 1, 2, 3, 0});
    CHECK(t.cost == doctest::Approx(6.0));
    // greedy result matches the best of all 3! orders here
    const Tour best = brute_force_tsp(c, {1, 2, 3});
    CHECK(t.cost == doctest::Approx(best.cost));
  }
  SUBCASE("empty member set degenerates") {
    const CostMatrix c = matrix_for({0, 0}, {{1, 1}});
    const Tour t = nearest_neighbor_tour(c, {});
    CHECK(t.order == std::vector<std::size_t>{0, 0});
    CHECK(t.cost == 0.0);
  }
  SUBCASE("bad members rejected") {
    const CostMatrix c = matrix_for({0, 0}, {{1, 1}});
    CHECK_THROWS_AS(nearest_neighbor_tour(c, {0}), std::invalid_argument);
    CHECK_THROWS_AS(nearest_neighbor_tour(c, {2}), std::invalid_argument);
    CHECK_THROWS_AS(nearest_neighbor_tour(c, {1, 1}), std::invalid_argument);
  }
}

TEST_CASE("two opt") {
  const std::vector<Point> square{{0, 10}, {10, 10}, {10, 0}};
  const CostMatrix c = matrix_for({0, 0}, square);

  SUBCASE("crossing square tour is repaired to the perimeter") {
    Tour crossed;
    crossed.order = {0, 2, 1, 3, 0};
    crossed.cost = tour_cost(c, crossed.order);
    CHECK(crossed.cost == doctest::Approx(48.284271247461902));

    const TwoOptResult r = two_opt(crossed, c);
    CHECK(r.tour.cost == doctest::Approx(40.0));
    CHECK(brute_force_tsp(c, {1, 2, 3}).cost == doctest::Approx(40.0));
    CHECK(!has_improving_two_opt_move(r.tour, c));
    CHECK(r.cost_trace.front() == doctest::Approx(crossed.cost));
    for (std::size_t i = 0; i + 1 < r.cost_trace.size(); ++i) {
      CHECK(r.cost_trace[i + 1] <= r.cost_trace[i] + 1e-9);
    }
  }
  SUBCASE("already optimal tour is unchanged") {
    Tour best;
    best.order = {0, 1, 2, 3, 0};
    best.cost = tour_cost(c, best.order);
    const TwoOptResult r = two_opt(best, c);
    CHECK(r.tour.order == best.order);
    CHECK(r.tour.cost == doctest::Approx(best.cost));
  }
  SUBCASE("malformed tours rejected") {
    CHECK_THROWS_AS(two_opt(Tour{{1, 2, 0}, 0.0}, c), std::invalid_argument);
    CHECK_THROWS_AS(two_opt(Tour{{0}, 0.0}, c), std::invalid_argument);
    CHECK_THROWS_AS(two_opt(Tour{{0, 1, 1, 0}, 0.0}, c), std::invalid_argument);
  }
}

TEST_CASE("two opt properties on random instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 2 + seed % 8;
    const std::vector<Point> sites = random_sites(n, 500 + seed);
    const CostMatrix c = matrix_for({0, 0}, sites);
    std::vector<std::size_t> members(n);
    for (std::size_t i = 0; i < n; ++i) members[i] = i + 1;

    const Tour nn = nearest_neighbor_tour(c, members);
    const TwoOptResult r = two_opt(nn, c);

    CHECK(r.tour.cost <= nn.cost + 1e-9);
    CHECK(!has_improving_two_opt_move(r.tour, c));
    CHECK(r.tour.order.front() == 0);
    CHECK(r.tour.order.back() == 0);
    CHECK(std::abs(tour_cost(c, r.tour.order) - r.tour.cost) < 1e-9);
    std::vector<std::size_t> interior(r.tour.order.begin() + 1,
                                      r.tour.order.end() - 1);
    std::sort(interior.begin(), interior.end());
    CHECK(interior == members);
  }
}

TEST_CASE("three or fewer sites solve exactly") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 1 + seed % 3;
    const std::vector<Point> sites = random_sites(n, 900 + seed);
    const CostMatrix c = matrix_for({0, 0}, sites);
    std::vector<std::size_t> members(n);
    for (std::size_t i = 0; i < n; ++i) members[i] = i + 1;
    const TwoOptResult r = two_opt(nearest_neighbor_tour(c, members), c);
    const Tour best = brute_force_tsp(c, members);
    CHECK(r.tour.cost == doctest::Approx(best.cost).epsilon(1e-9));
  }
}

TEST_CASE("brute force tsp") {
  SUBCASE("single member") {
    CostMatrix c(2);
    c(0, 1) = c(1, 0) = 7.0;
    const Tour t = brute_force_tsp(c, {1});
    CHECK(t.cost == doctest::Approx(14.0));
    CHECK(t.order == std::vector<std::size_t>{0, 1, 0});
  }
  SUBCASE("symmetric pair ties break lexicographically") {
    CostMatrix c(3);
    c(0, 1) = c(1, 0) = 3.0;
    c(0, 2) = c(2, 0) = 4.0;
    c(1, 2) = c(2, 1) = 2.0;
    const Tour t = brute_force_tsp(c, {1, 2});
    CHECK(t.cost == doctest::Approx(9.0));
    CHECK(t.order == std::vector<std::size_t>{0, 1, 2, 0});
  }
  SUBCASE("size limit enforced") {
    const std::vector<Point> sites = random_sites(11, 77);
    const CostMatrix c = matrix_for({0, 0}, sites);
    std::vector<std::size_t> members(11);
    for (std::size_t i = 0; i < 11; ++i) members[i] = i + 1;
    CHECK_THROWS_AS(brute_force_tsp(c, members), std::length_error);
  }
  SUBCASE("empty members degenerate") {
    CostMatrix c(1);
    const Tour t = brute_force_tsp(c, {});
    CHECK(t.order == std::vector<std::size_t>{0, 0});
    CHECK(t.cost == 0.0);
  }
}

TEST_CASE("two opt gap to the exact optimum stays small") {
  double worst = 0.0;
  double mean = 0.0;
  const int runs = 25;
  for (int seed = 0; seed < runs; ++seed) {
    const std::vector<Point> sites = random_sites(7, 7000 + seed);
    const CostMatrix c = matrix_for({0, 0}, sites);
    std::vector<std::size_t> members(7);
    for (std::size_t i = 0; i < 7; ++i) members[i] = i + 1;
    const TwoOptResult r = two_opt(nearest_neighbor_tour(c, members), c);
    const Tour best = brute_force_tsp(c, members);
    const double gap = (r.tour.cost - best.cost) / best.cost;
    CHECK(gap >= -1e-12);
    worst = std::max(worst, gap);
    mean += gap / runs;
  }
  CHECK(mean <= 0.05);
  CHECK(worst <= 0.15);
}
