#pragma once

#include <string>
#include <vector>

namespace lipatrol {

// Hand-rolled SVG charts: deterministic bytes, no timestamps, no plotting
// stack. Coordinates are formatted with fixed precision.

struct CurveSeries {
  std::string label;
  std::vector<double> xs;
  std::vector<double> ys;    // mean
  std::vector<double> lo;    // optional band, same length as xs or empty
  std::vector<double> hi;
};

std::string render_curve_chart(const std::string& title, const std::string& x_label,
                               const std::string& y_label,
                               const std::vector<CurveSeries>& series);

struct BoxSeries {
  std::string label;
  double min = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, max = 0.0;
  std::vector<double> points;  // strip overlay
};

// Five-number summary with linear-interpolation quartiles.
BoxSeries box_stats(const std::string& label, std::vector<double> values);

std::string render_box_chart(const std::string& title, const std::string& y_label,
                             const std::vector<BoxSeries>& boxes);

}  // namespace lipatrol
