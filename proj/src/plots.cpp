#include "mrta/plots.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mrta {

namespace {

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                          "#bcbd22", "#17becf"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("plot: cannot write " + path);
  out << body;
}

struct Axes {
  double x0, x1, y0, y1;          // data range
  double px0, px1, py0, py1;      // pixel range (py0 is the bottom)

  double px(double x) const {
    return px0 + (x - x0) / (x1 - x0) * (px1 - px0);
  }
  double py(double y) const {
    return py0 - (y - y0) / (y1 - y0) * (py0 - py1);
  }
};

void draw_frame(std::ostringstream& svg, const Axes& ax,
                const std::string& title, const std::string& x_label,
                const std::string& y_label) {
  svg << "<rect x='" << ax.px0 << "' y='" << ax.py1 << "' width='"
      << ax.px1 - ax.px0 << "' height='" << ax.py0 - ax.py1
      << "' fill='none' stroke='#444'/>\n";
  svg << "<text x='" << (ax.px0 + ax.px1) / 2 << "' y='18' font-size='14' "
      << "text-anchor='middle' font-family='sans-serif'>" << title
      << "</text>\n";
  svg << "<text x='" << (ax.px0 + ax.px1) / 2 << "' y='" << ax.py0 + 32
      << "' font-size='11' text-anchor='middle' font-family='sans-serif'>"
      << x_label << "</text>\n";
  svg << "<text x='14' y='" << (ax.py0 + ax.py1) / 2
      << "' font-size='11' text-anchor='middle' font-family='sans-serif' "
      << "transform='rotate(-90 14 " << (ax.py0 + ax.py1) / 2 << ")'>"
      << y_label << "</text>\n";
  // min/max ticks
  svg << "<text x='" << ax.px0 << "' y='" << ax.py0 + 14
      << "' font-size='10' font-family='sans-serif'>" << fmt(ax.x0)
      << "</text>\n";
  svg << "<text x='" << ax.px1 << "' y='" << ax.py0 + 14
      << "' font-size='10' text-anchor='end' font-family='sans-serif'>"
      << fmt(ax.x1) << "</text>\n";
  svg << "<text x='" << ax.px0 - 4 << "' y='" << ax.py0
      << "' font-size='10' text-anchor='end' font-family='sans-serif'>"
      << fmt(ax.y0) << "</text>\n";
  svg << "<text x='" << ax.px0 - 4 << "' y='" << ax.py1 + 8
      << "' font-size='10' text-anchor='end' font-family='sans-serif'>"
      << fmt(ax.y1) << "</text>\n";
}

void draw_polyline(std::ostringstream& svg, const Axes& ax,
                   const std::vector<double>& xs, const std::vector<double>& ys,
                   const std::string& color, bool dashed) {
  svg << "<polyline fill='none' stroke='" << color << "' stroke-width='1.5'";
  if (dashed) svg << " stroke-dasharray='5,4'";
  svg << " points='";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    svg << ax.px(xs[i]) << ',' << ax.py(ys[i]) << ' ';
  }
  svg << "'/>\n";
}

}  // namespace

void write_routes_svg(const Solution& sol, const Scenario& sc,
                      const std::string& path) {
  const double size = 640.0;
  const double margin = 50.0;
  const double span = std::max(sc.width, sc.height);
  Axes ax{0.0, span, 0.0, span, margin, size - margin, size - margin, margin};

  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << size
      << "' height='" << size << "'>\n";
  svg << "<rect width='100%' height='100%' fill='white'/>\n";
  draw_frame(svg, ax, "Robot routes by cluster (" + sol.method + ")",
             "x [m]", "y [m]");

  if (sc.grid.has_value()) {
    const GridMap& g = *sc.grid;
    for (std::size_t y = 0; y < g.height; ++y) {
      for (std::size_t x = 0; x < g.width; ++x) {
        if (!g.is_blocked(x, y)) continue;
        const double cx = ax.px(x * g.cell_size);
        const double cy = ax.py(y * g.cell_size);
        const double w = (ax.px(g.cell_size) - ax.px(0.0));
        svg << "<rect x='" << cx - w / 2 << "' y='" << cy - w / 2
            << "' width='" << w << "' height='" << w << "' fill='#bbb'/>\n";
      }
    }
  }

  const auto location = [&](std::size_t idx) {
    return idx == 0 ? sc.depot : sc.sites[idx - 1];
  };
  for (std::size_t k = 0; k < sol.routes.size(); ++k) {
    const std::string color = kPalette[k % kPaletteSize];
    std::vector<double> xs, ys;
    const auto flush_leg = [&](const Point& a, const Point& b) {
      if (sc.grid.has_value()) {
        for (const Point& p : grid_path(*sc.grid, a, b)) {
          xs.push_back(p.x);
          ys.push_back(p.y);
        }
      } else {
        if (xs.empty()) {
          xs.push_back(a.x);
          ys.push_back(a.y);
        }
        xs.push_back(b.x);
        ys.push_back(b.y);
      }
    };
    for (std::size_t i = 0; i + 1 < sol.routes[k].order.size(); ++i) {
      flush_leg(location(sol.routes[k].order[i]),
                location(sol.routes[k].order[i + 1]));
    }
    draw_polyline(svg, ax, xs, ys, color, true);
  }

  for (std::size_t i = 0; i < sc.sites.size(); ++i) {
    const std::size_t label =
        i < sol.assignment.labels.size() ? sol.assignment.labels[i] : 0;
    svg << "<circle cx='" << ax.px(sc.sites[i].x) << "' cy='"
        << ax.py(sc.sites[i].y) << "' r='3' fill='"
        << kPalette[label % kPaletteSize] << "'/>\n";
  }
  svg << "<rect x='" << ax.px(sc.depot.x) - 5 << "' y='"
      << ax.py(sc.depot.y) - 5
      << "' width='10' height='10' fill='black'/>\n";
  for (std::size_t k = 0; k < sol.routes.size(); ++k) {
    svg << "<text x='" << size - margin + 6 << "' y='" << margin + 14.0 * k
        << "' font-size='11' font-family='sans-serif' fill='"
        << kPalette[k % kPaletteSize] << "'>r" << k << "</text>\n";
  }
  svg << "</svg>\n";
  write_file(path, svg.str());
}

void write_series_svg(const std::vector<double>& values,
                      const std::string& title, const std::string& y_label,
                      const std::string& path) {
  if (values.empty()) throw std::invalid_argument("plot: empty series");
  std::vector<NamedSeries> s(1);
  s[0].name = "";
  for (std::size_t i = 0; i < values.size(); ++i) {
    s[0].x.push_back(static_cast<double>(i));
    s[0].y.push_back(values[i]);
  }
  write_curves_svg(s, title, "iteration", y_label, path);
}

void write_curves_svg(const std::vector<NamedSeries>& series,
                      const std::string& title, const std::string& x_label,
                      const std::string& y_label, const std::string& path) {
  if (series.empty()) throw std::invalid_argument("plot: no series");
  double x0 = series[0].x.front(), x1 = x0, y0 = series[0].y.front(), y1 = y0;
  for (const NamedSeries& s : series) {
    for (double v : s.x) {
      x0 = std::min(x0, v);
      x1 = std::max(x1, v);
    }
    for (double v : s.y) {
      y0 = std::min(y0, v);
      y1 = std::max(y1, v);
    }
  }
  if (x1 == x0) x1 = x0 + 1.0;
  if (y1 == y0) y1 = y0 + 1.0;
  y0 = std::min(y0, 0.0);

  const double w = 560.0, h = 360.0, margin = 56.0;
  Axes ax{x0, x1, y0, y1, margin, w - margin / 2, h - margin, margin / 2};

  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w
      << "' height='" << h << "'>\n";
  svg << "<rect width='100%' height='100%' fill='white'/>\n";
  draw_frame(svg, ax, title, x_label, y_label);
  for (std::size_t i = 0; i < series.size(); ++i) {
    const std::string color = kPalette[i % kPaletteSize];
    draw_polyline(svg, ax, series[i].x, series[i].y, color, false);
    for (std::size_t p = 0; p < series[i].x.size(); ++p) {
      svg << "<circle cx='" << ax.px(series[i].x[p]) << "' cy='"
          << ax.py(series[i].y[p]) << "' r='2.5' fill='" << color << "'/>\n";
    }
    if (!series[i].name.empty()) {
      svg << "<text x='" << margin + 8 << "' y='" << margin / 2 + 14.0 * i + 10
          << "' font-size='11' font-family='sans-serif' fill='" << color
          << "'>" << series[i].name << "</text>\n";
    }
  }
  svg << "</svg>\n";
  write_file(path, svg.str());
}

}  // namespace mrta
