#include "mrta/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mrta/rng.hpp"

namespace mrta {

namespace {

std::vector<Point> init_centroids(const std::vector<Point>& sites,
                                  const KMeansConfig& config) {
  std::vector<Point> centroids;
  centroids.reserve(config.k);
  if (config.init == KMeansInit::uniform_random_sites) {
    RandomEngine rng(config.seed);
    for (std::size_t i : rng.sample_indices(sites.size(), config.k)) {
      centroids.push_back(sites[i]);
    }
    return centroids;
  }
  // spread seeding: start at the site farthest from the site mean, then
  // repeatedly take the site maximizing the min distance to chosen ones
  Point mean{0.0, 0.0};
  for (const Point& s : sites) {
    mean.x += s.x;
    mean.y += s.y;
  }
  mean.x /= static_cast<double>(sites.size());
  mean.y /= static_cast<double>(sites.size());

  std::size_t first = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const double d = squared_distance(sites[i], mean);
    if (d > best) {
      best = d;
      first = i;
    }
  }
  centroids.push_back(sites[first]);
  while (centroids.size() < config.k) {
    std::size_t next = 0;
    double best_min = -1.0;
    for (std::size_t i = 0; i < sites.size(); ++i) {
      double min_d = std::numeric_limits<double>::max();
      for (const Point& c : centroids) {
        min_d = std::min(min_d, squared_distance(sites[i], c));
      }
      if (min_d > best_min) {
        best_min = min_d;
        next = i;
      }
    }
    centroids.push_back(sites[next]);
  }
  return centroids;
}

std::size_t nearest_centroid(const Point& site,
                             const std::vector<Point>& centroids) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::max();
  for (std::size_t j = 0; j < centroids.size(); ++j) {
    const double d = squared_distance(site, centroids[j]);
    if (d < best_d) {
      best_d = d;
      best = j;
    }
  }
  return best;
}

}  // namespace

ClusterAssignment kmeans_partition(const std::vector<Point>& sites,
                                   const KMeansConfig& config, Exec exec) {
  if (sites.empty()) throw std::invalid_argument("kmeans: no sites");
  if (config.k < 1) throw std::invalid_argument("kmeans: k must be >= 1");
  if (config.k > sites.size()) {
    throw std::invalid_argument("kmeans: k exceeds site count");
  }
  if (!(config.tolerance > 0.0)) {
    throw std::invalid_argument("kmeans: tolerance must be positive");
  }
  if (config.max_iterations < 1) {
    throw std::invalid_argument("kmeans: max_iterations must be >= 1");
  }
  if (config.k > 1 &&
      std::all_of(sites.begin(), sites.end(),
                  [&](const Point& p) { return p == sites.front(); })) {
    throw DegenerateInputError("kmeans: all sites identical with k > 1");
  }

  ClusterAssignment out;
  out.centroids = init_centroids(sites, config);

  const std::size_t k = config.k;
  std::vector<std::size_t> counts(k, 0);
  std::vector<Point> sums(k);
  std::vector<std::size_t> next_labels(sites.size(), 0);

  const auto assign = [&](std::vector<std::size_t>& labels) {
    // data-parallel; each site independent
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
      for (long long i = 0; i < static_cast<long long>(sites.size()); ++i) {
        labels[i] = nearest_centroid(sites[i], out.centroids);
      }
    } else {
      for (std::size_t i = 0; i < sites.size(); ++i) {
        labels[i] = nearest_centroid(sites[i], out.centroids);
      }
    }
  };

  out.labels.assign(sites.size(), 0);
  assign(out.labels);

  for (std::size_t iter = 0; iter < config.max_iterations; ++iter) {
    // centroid update (serial accumulation keeps summation order fixed)
    std::fill(counts.begin(), counts.end(), 0);
    std::fill(sums.begin(), sums.end(), Point{0.0, 0.0});
    for (std::size_t i = 0; i < sites.size(); ++i) {
      sums[out.labels[i]].x += sites[i].x;
      sums[out.labels[i]].y += sites[i].y;
      ++counts[out.labels[i]];
    }
    double moved = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      if (counts[j] == 0) continue;
      const Point next{sums[j].x / static_cast<double>(counts[j]),
                       sums[j].y / static_cast<double>(counts[j])};
      moved = std::max(moved, distance(next, out.centroids[j]));
      out.centroids[j] = next;
    }

    // empty-cluster repair: steal the site farthest from its own centroid
    // out of a cluster that can spare one; never increases the objective
    for (std::size_t j = 0; j < k; ++j) {
      if (counts[j] != 0) continue;
      std::size_t steal = sites.size();
      double far_d = -1.0;
      for (std::size_t i = 0; i < sites.size(); ++i) {
        if (counts[out.labels[i]] < 2) continue;
        const double d = squared_distance(sites[i], out.centroids[out.labels[i]]);
        if (d > far_d) {
          far_d = d;
          steal = i;
        }
      }
      if (steal == sites.size()) continue;  // all donors are singletons
      --counts[out.labels[steal]];
      out.labels[steal] = j;
      counts[j] = 1;
      moved = std::max(moved, distance(sites[steal], out.centroids[j]));
      out.centroids[j] = sites[steal];
    }

    out.wcm_trace.push_back(wcm(sites, out));
    out.iterations_used = iter + 1;

    // converged once the centroids settled below the tolerance AND the
    // labels are a fixed point of the final centroids
    assign(next_labels);
    if (moved < config.tolerance && next_labels == out.labels) {
      out.converged = true;
      break;
    }
    // at the iteration cap keep the labels the centroids were computed
    // from, so clusters stay non-empty and consistent
    if (iter + 1 < config.max_iterations) std::swap(out.labels, next_labels);
  }
  return out;
}

double wcm(const std::vector<Point>& sites, const ClusterAssignment& assignment) {
  if (assignment.labels.size() != sites.size()) {
    throw std::invalid_argument("wcm: labels do not cover the sites");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const std::size_t label = assignment.labels[i];
    if (label >= assignment.centroids.size()) {
      throw std::invalid_argument("wcm: label out of range");
    }
    sum += squared_distance(sites[i], assignment.centroids[label]);
  }
  return sum;
}

}  // namespace mrta
