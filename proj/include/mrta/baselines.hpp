#pragma once

#include <cstdint>
#include <vector>

#include "mrta/allocator.hpp"

namespace mrta {

struct GAConfig {
  std::size_t population_size = 100;
  std::size_t generations = 500;
  double crossover_rate = 0.9;
  double mutation_rate = 0.05;
  std::size_t tournament_size = 3;
  double budget_penalty_weight = 10.0;  // cost units per violated meter
  std::uint64_t seed = 0;
};

// Permutation of all non-depot sites plus |R|-1 sorted split positions
// cutting it into per-robot segments (segments may be empty).
struct Chromosome {
  std::vector<std::size_t> permutation;
  std::vector<std::size_t> breaks;
};

struct GaStats {
  std::vector<double> best_fitness_trace;  // per generation, elitist
};

// Unclustered GA over permutation-and-breaks chromosomes: order crossover,
// swap mutation with break re-draw, tournament selection, 1-elitism.
// Fitness is total route cost plus budget_penalty_weight per violated meter.
Solution ga_allocate(const Scenario& scenario, const CostMatrix& costs,
                     const GAConfig& config, GaStats* stats = nullptr,
                     Exec exec = Exec::parallel);

// Tasks scanned in site order; each is claimed by the robot whose current
// position is nearest (ties toward the lower robot index), and the robot
// moves there. All robots return to the depot at the end.
Solution greedy_allocate(const Scenario& scenario, const CostMatrix& costs);

}  // namespace mrta
