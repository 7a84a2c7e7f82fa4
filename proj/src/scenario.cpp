#include "mrta/scenario.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "mrta/rng.hpp"

namespace mrta {

namespace {

using nlohmann::json;

constexpr double kMinSiteSpacing = 1e-3;  // meters
constexpr std::size_t kMaxAttemptsPerSite = 1000;

void check_gen_args(std::size_t n_sites, std::size_t n_robots, double budget) {
  if (n_robots < 1) throw std::invalid_argument("generate: need >= 1 robot");
  if (n_sites < n_robots + 1) {
    throw std::invalid_argument(
        "generate: n_sites counts the depot; need n_sites - 1 >= n_robots");
  }
  if (!(budget > 0.0)) throw std::invalid_argument("generate: budget must be positive");
}

std::vector<Robot> make_fleet(std::size_t n_robots, double budget) {
  std::vector<Robot> robots(n_robots);
  for (std::size_t k = 0; k < n_robots; ++k) robots[k] = Robot{k, budget};
  return robots;
}

std::vector<Task> make_tasks(std::size_t n_sites) {
  std::vector<Task> tasks(n_sites);
  for (std::size_t i = 0; i < n_sites; ++i) tasks[i] = Task{i + 1, 0};
  return tasks;
}

}  // namespace

std::string to_string(CostBackend backend) {
  return backend == CostBackend::euclidean ? "euclidean" : "grid";
}

CostBackend cost_backend_from_string(const std::string& name) {
  if (name == "euclidean") return CostBackend::euclidean;
  if (name == "grid") return CostBackend::grid;
  throw std::runtime_error("scenario: cost_backend: unknown value '" + name + "'");
}

bool operator==(const Scenario& a, const Scenario& b) {
  const auto robots_equal = [](const Robot& x, const Robot& y) {
    return x.id == y.id && x.budget == y.budget;
  };
  const auto tasks_equal = [](const Task& x, const Task& y) {
    return x.site == y.site && x.measurement_type == y.measurement_type;
  };
  if (!(a.width == b.width && a.height == b.height && a.depot == b.depot &&
        a.sites == b.sites && a.seed == b.seed &&
        a.cost_backend == b.cost_backend &&
        a.robots.size() == b.robots.size() && a.tasks.size() == b.tasks.size() &&
        a.grid.has_value() == b.grid.has_value())) {
    return false;
  }
  for (std::size_t i = 0; i < a.robots.size(); ++i) {
    if (!robots_equal(a.robots[i], b.robots[i])) return false;
  }
  for (std::size_t i = 0; i < a.tasks.size(); ++i) {
    if (!tasks_equal(a.tasks[i], b.tasks[i])) return false;
  }
  if (a.grid.has_value()) {
    if (a.grid->width != b.grid->width || a.grid->height != b.grid->height ||
        a.grid->cell_size != b.grid->cell_size ||
        a.grid->blocked != b.grid->blocked) {
      return false;
    }
  }
  return true;
}

Scenario generate_scenario(std::size_t n_sites, std::size_t n_robots,
                           double width, double height, Point depot,
                           double budget, std::uint64_t seed) {
  check_gen_args(n_sites, n_robots, budget);
  if (!(width > 0.0) || !(height > 0.0)) {
    throw std::invalid_argument("generate: workspace must have positive area");
  }

  Scenario sc;
  sc.width = width;
  sc.height = height;
  sc.depot = depot;
  sc.seed = seed;
  sc.cost_backend = CostBackend::euclidean;

  RandomEngine rng(seed);
  const std::size_t n_task_sites = n_sites - 1;
  sc.sites.reserve(n_task_sites);
  std::size_t attempts = 0;
  const std::size_t max_attempts = kMaxAttemptsPerSite * n_task_sites;
  while (sc.sites.size() < n_task_sites) {
    if (++attempts > max_attempts) {
      throw std::runtime_error(
          "generate: could not place sites with minimum spacing; "
          "workspace too small");
    }
    const Point p{rng.next_uniform(0.0, width), rng.next_uniform(0.0, height)};
    if (distance(p, depot) <= kMinSiteSpacing) continue;
    bool ok = true;
    for (const Point& q : sc.sites) {
      if (distance(p, q) <= kMinSiteSpacing) {
        ok = false;
        break;
      }
    }
    if (ok) sc.sites.push_back(p);
  }

  sc.robots = make_fleet(n_robots, budget);
  sc.tasks = make_tasks(sc.sites.size());
  validate_scenario(sc);
  return sc;
}

Scenario generate_grid_scenario(std::size_t n_sites, std::size_t n_robots,
                                const GridMap& map, Point depot, double budget,
                                std::uint64_t seed) {
  check_gen_args(n_sites, n_robots, budget);

  Scenario sc;
  sc.width = static_cast<double>(map.width - 1) * map.cell_size;
  sc.height = static_cast<double>(map.height - 1) * map.cell_size;
  sc.seed = seed;
  sc.cost_backend = CostBackend::grid;
  sc.grid = map;

  const GridCell depot_cell = snap_to_cell(map, depot);
  sc.depot = Point{depot_cell.x * map.cell_size, depot_cell.y * map.cell_size};

  RandomEngine rng(seed);
  const std::size_t n_task_sites = n_sites - 1;
  std::vector<std::uint8_t> used(map.width * map.height, 0);
  used[depot_cell.y * map.width + depot_cell.x] = 1;
  std::size_t attempts = 0;
  const std::size_t max_attempts = kMaxAttemptsPerSite * n_task_sites;
  while (sc.sites.size() < n_task_sites) {
    if (++attempts > max_attempts) {
      throw std::runtime_error("generate: not enough free cells for sites");
    }
    const std::size_t cx = rng.next_index(map.width);
    const std::size_t cy = rng.next_index(map.height);
    if (map.is_blocked(cx, cy) || used[cy * map.width + cx]) continue;
    used[cy * map.width + cx] = 1;
    sc.sites.push_back(Point{cx * map.cell_size, cy * map.cell_size});
  }

  sc.robots = make_fleet(n_robots, budget);
  sc.tasks = make_tasks(sc.sites.size());
  validate_scenario(sc);
  return sc;
}

void validate_scenario(const Scenario& sc) {
  if (!(sc.width > 0.0) || !(sc.height > 0.0)) {
    throw std::runtime_error("scenario: workspace: must have positive area");
  }
  if (!std::isfinite(sc.depot.x) || !std::isfinite(sc.depot.y)) {
    throw std::runtime_error("scenario: depot: non-finite coordinate");
  }
  for (std::size_t i = 0; i < sc.sites.size(); ++i) {
    const Point& p = sc.sites[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::runtime_error("scenario: sites[" + std::to_string(i) +
                               "]: non-finite coordinate");
    }
    if (p.x < 0.0 || p.x > sc.width || p.y < 0.0 || p.y > sc.height) {
      throw std::runtime_error("scenario: sites[" + std::to_string(i) +
                               "]: outside workspace");
    }
    if (p == sc.depot) {
      throw std::runtime_error("scenario: sites[" + std::to_string(i) +
                               "]: coincides with the depot");
    }
  }
  if (sc.robots.empty()) throw std::runtime_error("scenario: robots: empty");
  if (sc.sites.size() < sc.robots.size()) {
    throw std::runtime_error("scenario: fewer sites than robots");
  }
  for (std::size_t k = 0; k < sc.robots.size(); ++k) {
    if (!(sc.robots[k].budget > 0.0)) {
      throw std::runtime_error("scenario: robots[" + std::to_string(k) +
                               "].budget: must be positive");
    }
  }
  for (std::size_t t = 0; t < sc.tasks.size(); ++t) {
    if (sc.tasks[t].site == 0 || sc.tasks[t].site > sc.sites.size()) {
      throw std::runtime_error("scenario: tasks[" + std::to_string(t) +
                               "].site: out of range");
    }
  }
  if ((sc.cost_backend == CostBackend::grid) != sc.grid.has_value()) {
    throw std::runtime_error(
        "scenario: grid map must be present exactly when cost_backend is grid");
  }
  if (sc.grid.has_value()) {
    // raises on blocked or badly snapped locations
    snap_to_cell(*sc.grid, sc.depot);
    for (std::size_t i = 0; i < sc.sites.size(); ++i) {
      try {
        snap_to_cell(*sc.grid, sc.sites[i]);
      } catch (const std::invalid_argument& e) {
        throw std::runtime_error("scenario: sites[" + std::to_string(i) +
                                 "]: " + e.what());
      }
    }
  }
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("scenario: cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("scenario: " + path + ": " + e.what());
  }

  const auto require = [&](const char* field) -> const json& {
    if (!j.contains(field)) {
      throw std::runtime_error("scenario: missing field '" +
                               std::string(field) + "'");
    }
    return j.at(field);
  };

  Scenario sc;
  try {
    if (require("version").get<int>() != Scenario::kSchemaVersion) {
      throw std::runtime_error("scenario: unsupported schema version");
    }
    const json& ws = require("workspace");
    sc.width = ws.at("w").get<double>();
    sc.height = ws.at("h").get<double>();
    const json& depot = require("depot");
    sc.depot = Point{depot.at(0).get<double>(), depot.at(1).get<double>()};
    for (const json& s : require("sites")) {
      sc.sites.push_back(Point{s.at(0).get<double>(), s.at(1).get<double>()});
    }
    for (const json& r : require("robots")) {
      sc.robots.push_back(
          Robot{r.at("id").get<std::size_t>(), r.at("budget").get<double>()});
    }
    sc.seed = require("seed").get<std::uint64_t>();
    sc.cost_backend =
        cost_backend_from_string(require("cost_backend").get<std::string>());
    if (j.contains("grid_file")) {
      sc.grid_file = j.at("grid_file").get<std::string>();
    }
  } catch (const json::exception& e) {
    throw std::runtime_error("scenario: " + path + ": " + e.what());
  }

  sc.tasks = make_tasks(sc.sites.size());
  if (sc.cost_backend == CostBackend::grid) {
    if (sc.grid_file.empty()) {
      throw std::runtime_error("scenario: grid backend requires grid_file");
    }
    const auto grid_path =
        std::filesystem::path(path).parent_path() / sc.grid_file;
    sc.grid = GridMap::load(grid_path.string());
  }
  validate_scenario(sc);
  return sc;
}

void save_scenario(const Scenario& sc, const std::string& path) {
  validate_scenario(sc);
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

  if (sc.grid.has_value()) {
    std::string grid_file = sc.grid_file;
    if (grid_file.empty()) {
      grid_file = std::filesystem::path(path).stem().string() + ".grid";
    }
    const auto grid_path =
        std::filesystem::path(path).parent_path() / grid_file;
    sc.grid->save(grid_path.string());
    j["grid_file"] = grid_file;
  }

  std::ofstream out(path);
  if (!out) throw std::runtime_error("scenario: cannot write " + path);
  out << j.dump(2) << '\n';
}

CostMatrix build_cost_matrix(const Scenario& sc, Exec exec) {
  if (sc.cost_backend == CostBackend::grid) {
    return dijkstra_cost_matrix(*sc.grid, sc.depot, sc.sites, exec);
  }
  return euclidean_cost_matrix(sc.depot, sc.sites, exec);
}

}  // namespace mrta
