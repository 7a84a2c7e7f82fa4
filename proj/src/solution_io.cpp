#include "mrta/solution_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mrta {

namespace {

using nlohmann::json;

json scenario_to_embedded_json(const Scenario& sc) {
  json j;
  j["version"] = Scenario::kSchemaVersion;
  j["workspace"] = {{"w", sc.width}, {"h", sc.height}};
  j["depot"] = {sc.depot.x, sc.depot.y};
  json sites = json::array();
  for (const Point& p : sc.sites) sites.push_back({p.x, p.y});
  j["sites"] = sites;
  json robots = json::array();
  for (const Robot& r : sc.robots) {
    robots.push_back({{"id", r.id}, {"budget", r.budget}});
  }
  j["robots"] = robots;
  j["seed"] = sc.seed;
  j["cost_backend"] = to_string(sc.cost_backend);
  if (sc.grid.has_value()) j["grid_text"] = sc.grid->to_text();
  return j;
}

Scenario scenario_from_embedded_json(const json& j) {
  Scenario sc;
  sc.width = j.at("workspace").at("w").get<double>();
  sc.height = j.at("workspace").at("h").get<double>();
  sc.depot = Point{j.at("depot").at(0).get<double>(),
                   j.at("depot").at(1).get<double>()};
  for (const json& s : j.at("sites")) {
    sc.sites.push_back(Point{s.at(0).get<double>(), s.at(1).get<double>()});
  }
  for (const json& r : j.at("robots")) {
    sc.robots.push_back(
        Robot{r.at("id").get<std::size_t>(), r.at("budget").get<double>()});
  }
  sc.seed = j.at("seed").get<std::uint64_t>();
  sc.cost_backend =
      cost_backend_from_string(j.at("cost_backend").get<std::string>());
  for (std::size_t i = 0; i < sc.sites.size(); ++i) {
    sc.tasks.push_back(Task{i + 1, 0});
  }
  if (j.contains("grid_text")) {
    std::istringstream in(j.at("grid_text").get<std::string>());
    sc.grid = GridMap::parse(in);
  }
  validate_scenario(sc);
  return sc;
}

json assignment_to_json(const ClusterAssignment& a) {
  json j;
  j["labels"] = a.labels;
  json centroids = json::array();
  for (const Point& c : a.centroids) centroids.push_back({c.x, c.y});
  j["centroids"] = centroids;
  j["wcm_trace"] = a.wcm_trace;
  return j;
}

ClusterAssignment assignment_from_json(const json& j) {
  ClusterAssignment a;
  a.labels = j.at("labels").get<std::vector<std::size_t>>();
  for (const json& c : j.at("centroids")) {
    a.centroids.push_back(Point{c.at(0).get<double>(), c.at(1).get<double>()});
  }
  a.wcm_trace = j.at("wcm_trace").get<std::vector<double>>();
  a.iterations_used = a.wcm_trace.size();
  a.converged = !a.wcm_trace.empty();
  return a;
}

}  // namespace

json solution_to_json(const Solution& sol, const Scenario& sc) {
  json j;
  j["version"] = 1;
  j["method"] = sol.method;
  j["scenario"] = scenario_to_embedded_json(sc);
  j["assignment"] = assignment_to_json(sol.assignment);
  json routes = json::array();
  for (const Tour& t : sol.routes) {
    routes.push_back({{"order", t.order}, {"cost", t.cost}});
  }
  j["routes"] = routes;
  j["per_robot_cost"] = sol.per_robot_cost;
  j["total_cost"] = sol.total_cost;
  json feasible = json::array();
  for (bool f : sol.feasible) feasible.push_back(f);
  j["feasible"] = feasible;
  j["solve_time_s"] = sol.solve_time_s;
  j["two_opt_traces"] = sol.two_opt_traces;
  return j;
}

SolutionFile solution_from_json(const json& j) {
  SolutionFile out;
  try {
    if (j.at("version").get<int>() != 1) {
      throw std::runtime_error("solution: unsupported schema version");
    }
    out.scenario = scenario_from_embedded_json(j.at("scenario"));
    Solution& sol = out.solution;
    sol.method = j.at("method").get<std::string>();
    sol.assignment = assignment_from_json(j.at("assignment"));
    for (const json& r : j.at("routes")) {
      Tour t;
      t.order = r.at("order").get<std::vector<std::size_t>>();
      t.cost = r.at("cost").get<double>();
      sol.routes.push_back(std::move(t));
    }
    sol.per_robot_cost = j.at("per_robot_cost").get<std::vector<double>>();
    sol.total_cost = j.at("total_cost").get<double>();
    for (const json& f : j.at("feasible")) sol.feasible.push_back(f.get<bool>());
    sol.solve_time_s = j.at("solve_time_s").get<double>();
    sol.two_opt_traces =
        j.at("two_opt_traces").get<std::vector<std::vector<double>>>();
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("solution: ") + e.what());
  }
  return out;
}

void save_solution(const Solution& sol, const Scenario& sc,
                   const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("solution: cannot write " + path);
  out << solution_to_json(sol, sc).dump(2) << '\n';
}

SolutionFile load_solution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("solution: cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("solution: " + path + ": " + e.what());
  }
  return solution_from_json(j);
}

}  // namespace mrta
