#include "mrta/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace mrta {

namespace {

constexpr double kCoincidentTol = 1e-9;  // meters
constexpr std::size_t kNoCell = std::numeric_limits<std::size_t>::max();

double cross(double ax, double ay, double bx, double by) {
  return ax * by - ay * bx;
}

void require_finite(const Point& p, const char* what) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw std::invalid_argument(std::string(what) + ": non-finite coordinate");
  }
}

SegmentIntersection point_on_segment(const Point& p, const Segment& s) {
  const double sx = s.q.x - s.p.x;
  const double sy = s.q.y - s.p.y;
  const double len2 = sx * sx + sy * sy;
  double t = 0.0;
  if (len2 > 0.0) {
    t = ((p.x - s.p.x) * sx + (p.y - s.p.y) * sy) / len2;
    t = std::clamp(t, 0.0, 1.0);
  }
  const Point proj{s.p.x + t * sx, s.p.y + t * sy};
  if (distance(p, proj) <= kCoincidentTol) {
    return {IntersectKind::point, p, {}};
  }
  return {};
}

// Single-source shortest paths over the 4-connected grid (unit step cost).
// Ties in the priority queue break on cell index, so distances and parents
// are deterministic.
struct SingleSource {
  std::vector<std::size_t> dist;
  std::vector<std::size_t> parent;
};

SingleSource grid_dijkstra(const GridMap& map, std::size_t src,
                           bool want_parents) {
  const std::size_t n = map.width * map.height;
  SingleSource out;
  out.dist.assign(n, kNoCell);
  if (want_parents) out.parent.assign(n, kNoCell);

  using Entry = std::pair<std::size_t, std::size_t>;  // (dist, cell)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
  out.dist[src] = 0;
  pq.push({0, src});
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (d != out.dist[u]) continue;
    const std::size_t ux = u % map.width;
    const std::size_t uy = u / map.width;
    const long long moves[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (const auto& m : moves) {
      const long long vx = static_cast<long long>(ux) + m[0];
      const long long vy = static_cast<long long>(uy) + m[1];
      if (vx < 0 || vy < 0 || vx >= static_cast<long long>(map.width) ||
          vy >= static_cast<long long>(map.height)) {
        continue;
      }
      const std::size_t v = static_cast<std::size_t>(vy) * map.width +
                            static_cast<std::size_t>(vx);
      if (map.blocked[v]) continue;
      if (d + 1 < out.dist[v]) {
        out.dist[v] = d + 1;
        if (want_parents) out.parent[v] = u;
        pq.push({d + 1, v});
      }
    }
  }
  return out;
}

}  // namespace

GridMap GridMap::open(std::size_t width, std::size_t height, double cell_size) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("grid map: width and height must be >= 1");
  }
  if (!(cell_size > 0.0) || !std::isfinite(cell_size)) {
    throw std::invalid_argument("grid map: cell_size must be positive");
  }
  GridMap m;
  m.width = width;
  m.height = height;
  m.cell_size = cell_size;
  m.blocked.assign(width * height, 0);
  return m;
}

GridMap GridMap::parse(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) {
    throw std::runtime_error("grid map: empty input");
  }
  std::istringstream hs(header);
  std::size_t width = 0, height = 0;
  double cell_size = 0.0;
  if (!(hs >> width >> height >> cell_size)) {
    throw std::runtime_error("grid map: bad header line, expected "
                             "\"width height cell_size\"");
  }
  GridMap m = GridMap::open(width, height, cell_size);
  for (std::size_t y = 0; y < height; ++y) {
    std::string row;
    if (!std::getline(in, row)) {
      throw std::runtime_error("grid map: missing row " + std::to_string(y));
    }
    if (!row.empty() && row.back() == '\r') row.pop_back();
    if (row.size() != width) {
      throw std::runtime_error("grid map: row " + std::to_string(y) + " has " +
                               std::to_string(row.size()) + " cells, expected " +
                               std::to_string(width));
    }
    for (std::size_t x = 0; x < width; ++x) {
      if (row[x] == '#') {
        m.block(x, y);
      } else if (row[x] != '.') {
        throw std::runtime_error("grid map: bad cell character '" +
                                 std::string(1, row[x]) + "' in row " +
                                 std::to_string(y));
      }
    }
  }
  return m;
}

GridMap GridMap::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("grid map: cannot open " + path);
  return parse(in);
}

std::string GridMap::to_text() const {
  std::ostringstream out;
  out << width << ' ' << height << ' ' << cell_size << '\n';
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      out << (is_blocked(x, y) ? '#' : '.');
    }
    out << '\n';
  }
  return out.str();
}

void GridMap::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("grid map: cannot write " + path);
  out << to_text();
}

GridCell snap_to_cell(const GridMap& map, const Point& p) {
  require_finite(p, "snap_to_cell");
  const double fx = p.x / map.cell_size;
  const double fy = p.y / map.cell_size;
  const long long cx = std::llround(fx);
  const long long cy = std::llround(fy);
  if (cx < 0 || cy < 0 || cx >= static_cast<long long>(map.width) ||
      cy >= static_cast<long long>(map.height)) {
    throw std::invalid_argument("snap_to_cell: point outside grid");
  }
  const Point center{cx * map.cell_size, cy * map.cell_size};
  if (distance(p, center) >= map.cell_size / 2.0) {
    throw std::invalid_argument("snap_to_cell: point too far from cell center");
  }
  const GridCell cell{static_cast<std::size_t>(cx), static_cast<std::size_t>(cy)};
  if (map.is_blocked(cell.x, cell.y)) {
    throw std::invalid_argument("snap_to_cell: location on blocked cell");
  }
  return cell;
}

CostMatrix euclidean_cost_matrix(const Point& depot,
                                 const std::vector<Point>& sites, Exec exec) {
  require_finite(depot, "euclidean_cost_matrix");
  for (const Point& s : sites) require_finite(s, "euclidean_cost_matrix");

  std::vector<Point> pts;
  pts.reserve(sites.size() + 1);
  pts.push_back(depot);
  pts.insert(pts.end(), sites.begin(), sites.end());
  const std::size_t n = pts.size();
  CostMatrix c(n);

  const auto fill_row = [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = distance(pts[i], pts[j]);
      c(i, j) = d;
      c(j, i) = d;
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      fill_row(static_cast<std::size_t>(i));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) fill_row(i);
  }
  return c;
}

CostMatrix dijkstra_cost_matrix(const GridMap& map, const Point& depot,
                                const std::vector<Point>& sites, Exec exec) {
  std::vector<std::size_t> cells;
  cells.reserve(sites.size() + 1);
  const GridCell d = snap_to_cell(map, depot);
  cells.push_back(d.y * map.width + d.x);
  for (const Point& s : sites) {
    const GridCell c = snap_to_cell(map, s);
    cells.push_back(c.y * map.width + c.x);
  }

  const std::size_t n = cells.size();
  CostMatrix c(n);
  const auto fill_row = [&](std::size_t i) {
    const SingleSource ss = grid_dijkstra(map, cells[i], false);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t steps = ss.dist[cells[j]];
      c(i, j) = steps == kNoCell ? std::numeric_limits<double>::infinity()
                                 : static_cast<double>(steps) * map.cell_size;
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      fill_row(static_cast<std::size_t>(i));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) fill_row(i);
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (std::isinf(c(i, j))) throw InfeasiblePairError(i, j);
    }
  }
  return c;
}

std::vector<Point> grid_path(const GridMap& map, const Point& from,
                             const Point& to) {
  const GridCell a = snap_to_cell(map, from);
  const GridCell b = snap_to_cell(map, to);
  const std::size_t src = a.y * map.width + a.x;
  const std::size_t dst = b.y * map.width + b.x;

  const SingleSource ss = grid_dijkstra(map, src, true);
  if (ss.dist[dst] == kNoCell) {
    throw std::runtime_error("grid_path: target unreachable");
  }

  std::vector<std::size_t> cells;
  for (std::size_t u = dst; u != src; u = ss.parent[u]) cells.push_back(u);
  cells.push_back(src);
  std::reverse(cells.begin(), cells.end());

  const auto center = [&](std::size_t u) {
    return Point{static_cast<double>(u % map.width) * map.cell_size,
                 static_cast<double>(u / map.width) * map.cell_size};
  };
  std::vector<Point> path;
  path.push_back(center(cells.front()));
  for (std::size_t i = 1; i + 1 < cells.size(); ++i) {
    // keep only direction changes
    const long long px = static_cast<long long>(cells[i - 1] % map.width);
    const long long py = static_cast<long long>(cells[i - 1] / map.width);
    const long long cx = static_cast<long long>(cells[i] % map.width);
    const long long cy = static_cast<long long>(cells[i] / map.width);
    const long long nx = static_cast<long long>(cells[i + 1] % map.width);
    const long long ny = static_cast<long long>(cells[i + 1] / map.width);
    if ((cx - px) != (nx - cx) || (cy - py) != (ny - cy)) {
      path.push_back(center(cells[i]));
    }
  }
  if (cells.size() > 1) path.push_back(center(cells.back()));
  return path;
}

SegmentIntersection segments_intersect(const Segment& a, const Segment& b) {
  require_finite(a.p, "segments_intersect");
  require_finite(a.q, "segments_intersect");
  require_finite(b.p, "segments_intersect");
  require_finite(b.q, "segments_intersect");

  const double rx = a.q.x - a.p.x;
  const double ry = a.q.y - a.p.y;
  const double sx = b.q.x - b.p.x;
  const double sy = b.q.y - b.p.y;
  const double rlen = std::hypot(rx, ry);
  const double slen = std::hypot(sx, sy);

  if (rlen <= kCoincidentTol && slen <= kCoincidentTol) {
    if (distance(a.p, b.p) <= kCoincidentTol) {
      return {IntersectKind::point, a.p, {}};
    }
    return {};
  }
  if (rlen <= kCoincidentTol) return point_on_segment(a.p, b);
  if (slen <= kCoincidentTol) return point_on_segment(b.p, a);

  const double denom = cross(rx, ry, sx, sy);
  const double qpx = b.p.x - a.p.x;
  const double qpy = b.p.y - a.p.y;
  const double qp_cross_r = cross(qpx, qpy, rx, ry);

  if (std::abs(denom) <= 1e-12 * rlen * slen) {
    if (std::abs(qp_cross_r) / rlen > kCoincidentTol) return {};  // parallel
    // collinear: overlap interval in a's parameter
    double t0 = (qpx * rx + qpy * ry) / (rlen * rlen);
    double t1 = t0 + (sx * rx + sy * ry) / (rlen * rlen);
    if (t0 > t1) std::swap(t0, t1);
    const double tol_t = kCoincidentTol / rlen;
    const double lo = std::max(t0, 0.0);
    const double hi = std::min(t1, 1.0);
    if (hi < lo - tol_t) return {};
    if (hi - lo <= tol_t) {
      const double t = std::clamp(0.5 * (lo + hi), 0.0, 1.0);
      return {IntersectKind::point, {a.p.x + t * rx, a.p.y + t * ry}, {}};
    }
    const Segment ov{{a.p.x + lo * rx, a.p.y + lo * ry},
                     {a.p.x + hi * rx, a.p.y + hi * ry}};
    return {IntersectKind::overlap, {}, ov};
  }

  const double t = cross(qpx, qpy, sx, sy) / denom;
  const double u = qp_cross_r / denom;
  const double tol_t = kCoincidentTol / rlen;
  const double tol_u = kCoincidentTol / slen;
  if (t < -tol_t || t > 1.0 + tol_t || u < -tol_u || u > 1.0 + tol_u) {
    return {};
  }
  const double tc = std::clamp(t, 0.0, 1.0);
  return {IntersectKind::point, {a.p.x + tc * rx, a.p.y + tc * ry}, {}};
}

}  // namespace mrta
