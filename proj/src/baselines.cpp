#include "mrta/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mrta/rng.hpp"

namespace mrta {

namespace {

struct Decoded {
  std::vector<Tour> routes;
  double total_cost = 0.0;
  double fitness = 0.0;
};

Decoded decode(const Chromosome& ch, const CostMatrix& costs,
               const std::vector<Robot>& robots, double penalty_weight) {
  Decoded d;
  d.routes.resize(robots.size());
  std::size_t start = 0;
  for (std::size_t k = 0; k < robots.size(); ++k) {
    const std::size_t end =
        k + 1 < robots.size() ? ch.breaks[k] : ch.permutation.size();
    Tour& t = d.routes[k];
    t.order.reserve(end - start + 2);
    t.order.push_back(0);
    for (std::size_t i = start; i < end; ++i) {
      t.order.push_back(ch.permutation[i]);
    }
    t.order.push_back(0);
    t.cost = tour_cost(costs, t.order);
    d.total_cost += t.cost;
    d.fitness += t.cost + penalty_weight * std::max(0.0, t.cost - robots[k].budget);
    start = end;
  }
  return d;
}

// fitness without materializing the routes; keeps the hot evaluation loop
// allocation-free
double chromosome_fitness(const Chromosome& ch, const CostMatrix& costs,
                          const std::vector<Robot>& robots,
                          double penalty_weight) {
  double fitness = 0.0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < robots.size(); ++k) {
    const std::size_t end =
        k + 1 < robots.size() ? ch.breaks[k] : ch.permutation.size();
    double cost = 0.0;
    if (start < end) {
      cost += costs(0, ch.permutation[start]);
      for (std::size_t i = start; i + 1 < end; ++i) {
        cost += costs(ch.permutation[i], ch.permutation[i + 1]);
      }
      cost += costs(ch.permutation[end - 1], 0);
    }
    fitness += cost + penalty_weight * std::max(0.0, cost - robots[k].budget);
    start = end;
  }
  return fitness;
}

std::vector<std::size_t> random_breaks(RandomEngine& rng, std::size_t n_sites,
                                       std::size_t n_robots) {
  std::vector<std::size_t> breaks(n_robots - 1);
  for (std::size_t& b : breaks) b = rng.next_index(n_sites + 1);
  std::sort(breaks.begin(), breaks.end());
  return breaks;
}

// order crossover: copy a slice of parent a, fill the rest in parent b order
std::vector<std::size_t> order_crossover(const std::vector<std::size_t>& a,
                                         const std::vector<std::size_t>& b,
                                         RandomEngine& rng) {
  const std::size_t n = a.size();
  std::size_t lo = rng.next_index(n);
  std::size_t hi = rng.next_index(n);
  if (lo > hi) std::swap(lo, hi);

  std::vector<std::size_t> child(n, 0);
  std::vector<bool> used(n + 2, false);
  for (std::size_t i = lo; i <= hi; ++i) {
    child[i] = a[i];
    used[a[i]] = true;
  }
  std::size_t fill = (hi + 1) % n;
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t v = b[(hi + 1 + step) % n];
    if (used[v]) continue;
    while (fill >= lo && fill <= hi) fill = (fill + 1) % n;
    child[fill] = v;
    fill = (fill + 1) % n;
  }
  return child;
}

}  // namespace

Solution ga_allocate(const Scenario& scenario, const CostMatrix& costs,
                     const GAConfig& config, GaStats* stats, Exec exec) {
  if (scenario.robots.empty()) throw std::invalid_argument("ga: no robots");
  if (scenario.sites.size() < scenario.robots.size()) {
    throw std::invalid_argument("ga: fewer sites than robots");
  }
  if (config.population_size < 1) {
    throw std::invalid_argument("ga: population_size must be >= 1");
  }
  if (config.tournament_size < 1 ||
      config.tournament_size > config.population_size) {
    throw std::invalid_argument("ga: population smaller than tournament size");
  }
  if (config.crossover_rate < 0.0 || config.crossover_rate > 1.0 ||
      config.mutation_rate < 0.0 || config.mutation_rate > 1.0) {
    throw std::invalid_argument("ga: rates must lie in [0, 1]");
  }

  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = scenario.sites.size();
  const std::size_t n_robots = scenario.robots.size();
  const std::size_t pop_size = config.population_size;
  RandomEngine rng(config.seed);

  std::vector<Chromosome> population(pop_size);
  for (Chromosome& ch : population) {
    ch.permutation.resize(n);
    std::iota(ch.permutation.begin(), ch.permutation.end(), std::size_t{1});
    rng.shuffle(ch.permutation);
    if (n_robots > 1) ch.breaks = random_breaks(rng, n, n_robots);
  }

  std::vector<double> fitness(pop_size);
  const auto evaluate_all = [&]() {
    // fitness of each individual is independent of the others
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
      for (long long i = 0; i < static_cast<long long>(pop_size); ++i) {
        fitness[i] = chromosome_fitness(population[i], costs, scenario.robots,
                                        config.budget_penalty_weight);
      }
    } else {
      for (std::size_t i = 0; i < pop_size; ++i) {
        fitness[i] = chromosome_fitness(population[i], costs, scenario.robots,
                                        config.budget_penalty_weight);
      }
    }
  };
  const auto best_index = [&]() {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop_size; ++i) {
      if (fitness[i] < fitness[best]) best = i;
    }
    return best;
  };
  const auto tournament = [&]() -> const Chromosome& {
    std::size_t winner = rng.next_index(pop_size);
    for (std::size_t t = 1; t < config.tournament_size; ++t) {
      const std::size_t challenger = rng.next_index(pop_size);
      if (fitness[challenger] < fitness[winner]) winner = challenger;
    }
    return population[winner];
  };

  evaluate_all();
  if (stats) stats->best_fitness_trace.push_back(fitness[best_index()]);

  for (std::size_t gen = 0; gen < config.generations; ++gen) {
    std::vector<Chromosome> next;
    next.reserve(pop_size);
    next.push_back(population[best_index()]);  // 1-elitism
    while (next.size() < pop_size) {
      const Chromosome& p1 = tournament();
      const Chromosome& p2 = tournament();
      Chromosome child;
      if (n > 1 && rng.next_double() < config.crossover_rate) {
        child.permutation = order_crossover(p1.permutation, p2.permutation, rng);
        child.breaks = p1.breaks;
      } else {
        child = p1;
      }
      if (rng.next_double() < config.mutation_rate) {
        const std::size_t i = rng.next_index(n);
        const std::size_t j = rng.next_index(n);
        std::swap(child.permutation[i], child.permutation[j]);
        if (n_robots > 1) child.breaks = random_breaks(rng, n, n_robots);
      }
      next.push_back(std::move(child));
    }
    population = std::move(next);
    evaluate_all();
    if (stats) stats->best_fitness_trace.push_back(fitness[best_index()]);
  }

  const Decoded best = decode(population[best_index()], costs, scenario.robots,
                              config.budget_penalty_weight);
  Solution sol;
  sol.method = "ga";
  sol.routes = best.routes;
  sol.total_cost = best.total_cost;
  sol.per_robot_cost.resize(n_robots);
  sol.feasible.resize(n_robots);
  for (std::size_t k = 0; k < n_robots; ++k) {
    sol.per_robot_cost[k] = sol.routes[k].cost;
    sol.feasible[k] = sol.routes[k].cost <= scenario.robots[k].budget;
  }
  sol.assignment = assignment_from_routes(sol.routes, scenario);
  sol.solve_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return sol;
}

Solution greedy_allocate(const Scenario& scenario, const CostMatrix& costs) {
  if (scenario.robots.empty()) throw std::invalid_argument("greedy: no robots");
  if (costs.size() != scenario.location_count()) {
    throw std::invalid_argument("greedy: cost matrix size mismatch");
  }

  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n_robots = scenario.robots.size();

  std::vector<std::size_t> position(n_robots, 0);
  std::vector<std::vector<std::size_t>> claimed(n_robots);
  for (std::size_t site = 1; site <= scenario.sites.size(); ++site) {
    std::size_t robot = 0;
    double best = std::numeric_limits<double>::max();
    for (std::size_t k = 0; k < n_robots; ++k) {
      const double d = costs(position[k], site);
      if (d < best) {
        best = d;
        robot = k;
      }
    }
    claimed[robot].push_back(site);
    position[robot] = site;
  }

  Solution sol;
  sol.method = "greedy";
  sol.routes.resize(n_robots);
  sol.per_robot_cost.resize(n_robots);
  sol.feasible.resize(n_robots);
  for (std::size_t k = 0; k < n_robots; ++k) {
    Tour& t = sol.routes[k];
    t.order.push_back(0);
    t.order.insert(t.order.end(), claimed[k].begin(), claimed[k].end());
    t.order.push_back(0);
    t.cost = tour_cost(costs, t.order);
    sol.per_robot_cost[k] = t.cost;
    sol.total_cost += t.cost;
    sol.feasible[k] = t.cost <= scenario.robots[k].budget;
  }
  sol.assignment = assignment_from_routes(sol.routes, scenario);
  sol.solve_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return sol;
}

}  // namespace mrta
