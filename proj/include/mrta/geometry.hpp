#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mrta/common.hpp"

namespace mrta {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline bool operator==(const Point& a, const Point& b) {
  return a.x == b.x && a.y == b.y;
}

inline double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline double squared_distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

struct Segment {
  Point p;
  Point q;
};

// 4-connected occupancy grid. Cell (cx, cy) is centered at
// (cx * cell_size, cy * cell_size); travel cost per step is cell_size.
struct GridMap {
  std::size_t width = 0;   // cells
  std::size_t height = 0;  // cells
  double cell_size = 1.0;  // meters per cell
  std::vector<std::uint8_t> blocked;  // row-major, height*width

  bool in_bounds(std::size_t cx, std::size_t cy) const {
    return cx < width && cy < height;
  }
  bool is_blocked(std::size_t cx, std::size_t cy) const {
    return blocked[cy * width + cx] != 0;
  }
  void block(std::size_t cx, std::size_t cy) { blocked[cy * width + cx] = 1; }

  static GridMap open(std::size_t width, std::size_t height, double cell_size);

  // Text format: first line "width height cell_size", then one row per line
  // of '.' (free) / '#' (blocked), row y = 0 first.
  static GridMap parse(std::istream& in);
  static GridMap load(const std::string& path);
  std::string to_text() const;
  void save(const std::string& path) const;
};

struct GridCell {
  std::size_t x = 0;
  std::size_t y = 0;
};

// Nearest cell center; the point must lie within cell_size/2 of it and on an
// unblocked cell, otherwise std::invalid_argument.
GridCell snap_to_cell(const GridMap& map, const Point& p);

// Symmetric non-negative travel costs over depot-first locations
// (index 0 = depot, index i = sites[i-1]).
class CostMatrix {
 public:
  CostMatrix() = default;
  explicit CostMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

CostMatrix euclidean_cost_matrix(const Point& depot,
                                 const std::vector<Point>& sites,
                                 Exec exec = Exec::parallel);

// Shortest 4-connected path lengths between snapped locations, scaled by
// cell_size. Throws InfeasiblePairError for unreachable pairs.
CostMatrix dijkstra_cost_matrix(const GridMap& map, const Point& depot,
                                const std::vector<Point>& sites,
                                Exec exec = Exec::parallel);

// Shortest grid path as a polyline of cell centers (collinear runs merged).
// Endpoints are the snapped centers of `from` and `to`.
std::vector<Point> grid_path(const GridMap& map, const Point& from,
                             const Point& to);

enum class IntersectKind { none, point, overlap };

struct SegmentIntersection {
  IntersectKind kind = IntersectKind::none;
  Point point;      // set when kind == point
  Segment overlap;  // set when kind == overlap

  explicit operator bool() const { return kind != IntersectKind::none; }
};

// Intersection of two closed segments. Endpoints within 1e-9 m are treated
// as coincident; collinear overlap of positive length is reported as
// IntersectKind::overlap.
SegmentIntersection segments_intersect(const Segment& a, const Segment& b);

}  // namespace mrta
