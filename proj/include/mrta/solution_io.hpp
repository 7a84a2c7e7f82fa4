#pragma once

#include <string>

#include <json.hpp>

#include "mrta/allocator.hpp"

namespace mrta {

struct SolutionFile {
  Solution solution;
  Scenario scenario;
};

// Solution files embed the scenario they were solved against (grid text
// inline), so downstream consumers (plots, reports) need no side files.
nlohmann::json solution_to_json(const Solution& solution,
                                const Scenario& scenario);
SolutionFile solution_from_json(const nlohmann::json& j);

void save_solution(const Solution& solution, const Scenario& scenario,
                   const std::string& path);
SolutionFile load_solution(const std::string& path);

}  // namespace mrta
