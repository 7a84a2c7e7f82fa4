#pragma once

#include <cstdint>
#include <vector>

#include "mrta/common.hpp"
#include "mrta/geometry.hpp"

namespace mrta {

enum class KMeansInit {
  uniform_random_sites,  // k distinct sites drawn uniformly
  spread_seeding,        // deterministic farthest-point traversal
};

struct KMeansConfig {
  std::size_t k = 1;
  std::size_t max_iterations = 100;
  double tolerance = 1e-4;  // max centroid displacement, meters
  std::uint64_t seed = 0;
  KMeansInit init = KMeansInit::uniform_random_sites;
};

struct ClusterAssignment {
  std::vector<std::size_t> labels;   // per-site cluster index in [0, k)
  std::vector<Point> centroids;      // k centroids
  std::vector<double> wcm_trace;     // within-cluster variance per iteration
  std::size_t iterations_used = 0;
  bool converged = false;            // displacement fell below tolerance
};

// Lloyd's algorithm over the given sites (depot excluded by the caller).
// Ties in the nearest-centroid assignment break toward the lowest cluster
// index; an emptied cluster is reseeded at the member site farthest from
// its own centroid. Every cluster owns at least one site on return.
ClusterAssignment kmeans_partition(const std::vector<Point>& sites,
                                   const KMeansConfig& config,
                                   Exec exec = Exec::parallel);

// Sum of squared distances from each site to its cluster centroid.
double wcm(const std::vector<Point>& sites, const ClusterAssignment& assignment);

}  // namespace mrta
