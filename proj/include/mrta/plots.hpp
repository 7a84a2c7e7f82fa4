#pragma once

#include <string>
#include <vector>

#include "mrta/allocator.hpp"

namespace mrta {

// Routes colored by robot over the workspace; grid obstacles shaded.
void write_routes_svg(const Solution& solution, const Scenario& scenario,
                      const std::string& path);

// Simple line chart of a value series (iteration on the x axis).
void write_series_svg(const std::vector<double>& values,
                      const std::string& title, const std::string& y_label,
                      const std::string& path);

// Multiple named series on shared axes (used for time-vs-size curves).
struct NamedSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};
void write_curves_svg(const std::vector<NamedSeries>& series,
                      const std::string& title, const std::string& x_label,
                      const std::string& y_label, const std::string& path);

}  // namespace mrta
