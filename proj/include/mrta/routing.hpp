#pragma once

#include <vector>

#include "mrta/geometry.hpp"

namespace mrta {

// Depot-anchored route: order starts and ends at location 0 and visits each
// member exactly once; cost is the sum of consecutive-pair costs.
struct Tour {
  std::vector<std::size_t> order;
  double cost = 0.0;
};

double tour_cost(const CostMatrix& costs, const std::vector<std::size_t>& order);

// Greedy chain from the depot through `members`, closed back to the depot.
// Empty members give the degenerate [0, 0] tour. Ties break on lowest index.
Tour nearest_neighbor_tour(const CostMatrix& costs,
                           const std::vector<std::size_t>& members);

struct TwoOptResult {
  Tour tour;
  std::vector<double> cost_trace;  // cost before the first pass, then per pass
};

// First-improvement 2-opt sweeps until no move shortens the tour by more
// than 1e-9. Depot endpoints stay fixed.
TwoOptResult two_opt(const Tour& tour, const CostMatrix& costs);

// True if some segment reversal would still shorten the tour by > 1e-9.
bool has_improving_two_opt_move(const Tour& tour, const CostMatrix& costs);

// Exact minimum-cost tour by enumeration; members limited to 10. Among
// cost ties the lexicographically smallest order wins.
Tour brute_force_tsp(const CostMatrix& costs,
                     const std::vector<std::size_t>& members);

}  // namespace mrta
