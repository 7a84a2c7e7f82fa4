#include "mrta/routing.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace mrta {

namespace {

constexpr double kImprovementEps = 1e-9;

void validate_members(const CostMatrix& costs,
                      const std::vector<std::size_t>& members) {
  std::vector<bool> seen(costs.size(), false);
  for (std::size_t m : members) {
    if (m == 0) throw std::invalid_argument("tour members must exclude depot");
    if (m >= costs.size()) {
      throw std::invalid_argument("tour member out of cost matrix range");
    }
    if (seen[m]) throw std::invalid_argument("duplicate tour member");
    seen[m] = true;
  }
}

void validate_tour(const CostMatrix& costs, const Tour& tour) {
  if (tour.order.size() < 2 || tour.order.front() != 0 || tour.order.back() != 0) {
    throw std::invalid_argument("malformed tour: must start and end at depot");
  }
  std::vector<bool> seen(costs.size(), false);
  for (std::size_t i = 1; i + 1 < tour.order.size(); ++i) {
    const std::size_t v = tour.order[i];
    if (v == 0 || v >= costs.size() || seen[v]) {
      throw std::invalid_argument("malformed tour: bad interior location");
    }
    seen[v] = true;
  }
}

}  // namespace

double tour_cost(const CostMatrix& costs, const std::vector<std::size_t>& order) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    sum += costs(order[i], order[i + 1]);
  }
  return sum;
}

Tour nearest_neighbor_tour(const CostMatrix& costs,
                           const std::vector<std::size_t>& members) {
  validate_members(costs, members);
  Tour tour;
  tour.order.push_back(0);
  std::vector<std::size_t> left(members.begin(), members.end());
  std::sort(left.begin(), left.end());
  std::size_t current = 0;
  while (!left.empty()) {
    std::size_t pick = 0;
    double best = std::numeric_limits<double>::max();
    for (std::size_t i = 0; i < left.size(); ++i) {
      const double d = costs(current, left[i]);
      if (d < best) {
        best = d;
        pick = i;
      }
    }
    current = left[pick];
    tour.order.push_back(current);
    left.erase(left.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  tour.order.push_back(0);
  tour.cost = tour_cost(costs, tour.order);
  return tour;
}

TwoOptResult two_opt(const Tour& tour, const CostMatrix& costs) {
  validate_tour(costs, tour);
  TwoOptResult result;
  auto& order = result.tour.order;
  order = tour.order;
  const std::size_t last = order.size() - 1;  // index of the closing depot
  result.cost_trace.push_back(tour_cost(costs, order));

  bool improvement = order.size() > 3;
  while (improvement) {
    improvement = false;
    for (std::size_t i = 0; i + 1 < last; ++i) {
      for (std::size_t j = i + 1; j < last; ++j) {
        const double removed = costs(order[i], order[i + 1]) +
                               costs(order[j], order[j + 1]);
        const double added = costs(order[i], order[j]) +
                             costs(order[i + 1], order[j + 1]);
        if (removed - added > kImprovementEps) {
          std::reverse(order.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                       order.begin() + static_cast<std::ptrdiff_t>(j) + 1);
          improvement = true;
        }
      }
    }
    result.cost_trace.push_back(tour_cost(costs, order));
  }
  result.tour.cost = result.cost_trace.back();
  return result;
}

bool has_improving_two_opt_move(const Tour& tour, const CostMatrix& costs) {
  const auto& order = tour.order;
  if (order.size() < 4) return false;
  const std::size_t last = order.size() - 1;
  for (std::size_t i = 0; i + 1 < last; ++i) {
    for (std::size_t j = i + 1; j < last; ++j) {
      const double removed =
          costs(order[i], order[i + 1]) + costs(order[j], order[j + 1]);
      const double added =
          costs(order[i], order[j]) + costs(order[i + 1], order[j + 1]);
      if (removed - added > kImprovementEps) return true;
    }
  }
  return false;
}

Tour brute_force_tsp(const CostMatrix& costs,
                     const std::vector<std::size_t>& members) {
  validate_members(costs, members);
  if (members.size() > 10) {
    throw std::length_error("brute_force_tsp: more than 10 members");
  }
  std::vector<std::size_t> perm(members.begin(), members.end());
  std::sort(perm.begin(), perm.end());

  Tour best;
  best.order = {0, 0};
  best.cost = 0.0;
  if (perm.empty()) return best;

  best.cost = std::numeric_limits<double>::max();
  do {
    std::vector<std::size_t> order;
    order.reserve(perm.size() + 2);
    order.push_back(0);
    order.insert(order.end(), perm.begin(), perm.end());
    order.push_back(0);
    const double c = tour_cost(costs, order);
    if (c < best.cost) {
      best.cost = c;
      best.order = order;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace mrta
