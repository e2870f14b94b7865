#include "lipatrol/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace lipatrol {

namespace {

constexpr int kWidth = 860;
constexpr int kHeight = 460;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 160;  // legend gutter
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 50;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                          "#8c564b", "#17becf", "#7f7f7f", "#bcbd22", "#e377c2"};
constexpr int kPaletteSize = 10;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Scale {
  double lo = 0.0, hi = 1.0;
  double pix_lo = 0.0, pix_hi = 1.0;
  double to_pixel(double v) const {
    const double t = hi > lo ? (v - lo) / (hi - lo) : 0.5;
    return pix_lo + t * (pix_hi - pix_lo);
  }
};

// Round axis bounds out to a tidy tick step.
std::pair<double, double> nice_bounds(double lo, double hi) {
  if (lo == hi) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double span = hi - lo;
  const double step = std::pow(10.0, std::floor(std::log10(span / 5.0)));
  return {std::floor(lo / step) * step, std::ceil(hi / step) * step};
}

void open_svg(std::ostringstream& out, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\" font-family=\"sans-serif\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
         "font-size=\"15\">"
      << escape_xml(title) << "</text>\n";
}

void draw_y_axis(std::ostringstream& out, const Scale& y, const std::string& label) {
  const double x0 = kMarginLeft;
  out << "<line x1=\"" << x0 << "\" y1=\"" << kMarginTop << "\" x2=\"" << x0
      << "\" y2=\"" << kHeight - kMarginBottom
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  const int ticks = 5;
  for (int i = 0; i <= ticks; ++i) {
    const double v = y.lo + (y.hi - y.lo) * i / ticks;
    const double py = y.to_pixel(v);
    out << "<line x1=\"" << x0 - 4 << "\" y1=\"" << fmt(py) << "\" x2=\"" << x0
        << "\" y2=\"" << fmt(py) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << x0 - 8 << "\" y=\"" << fmt(py + 4)
        << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(v) << "</text>\n";
  }
  out << "<text x=\"18\" y=\"" << kHeight / 2
      << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 18 "
      << kHeight / 2 << ")\">" << escape_xml(label) << "</text>\n";
}

void draw_x_axis_line(std::ostringstream& out) {
  out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kHeight - kMarginBottom
      << "\" x2=\"" << kWidth - kMarginRight << "\" y2=\""
      << kHeight - kMarginBottom << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
}

void draw_legend(std::ostringstream& out, const std::vector<std::string>& labels) {
  const int x = kWidth - kMarginRight + 16;
  int y = kMarginTop + 10;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out << "<rect x=\"" << x << "\" y=\"" << y - 9
        << "\" width=\"12\" height=\"12\" fill=\"" << kPalette[i % kPaletteSize]
        << "\"/>\n";
    out << "<text x=\"" << x + 18 << "\" y=\"" << y + 2 << "\" font-size=\"12\">"
        << escape_xml(labels[i]) << "</text>\n";
    y += 20;
  }
}

}  // namespace

std::string render_curve_chart(const std::string& title, const std::string& x_label,
                               const std::string& y_label,
                               const std::vector<CurveSeries>& series) {
  if (series.empty())
    throw std::invalid_argument("render_curve_chart: no series");

  double x_lo = series[0].xs.front(), x_hi = series[0].xs.front();
  double y_lo = 0.0, y_hi = 1.0;
  bool first = true;
  for (const CurveSeries& s : series) {
    if (s.xs.size() != s.ys.size() || s.xs.empty())
      throw std::invalid_argument("render_curve_chart: bad series " + s.label);
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      x_lo = std::min(x_lo, s.xs[i]);
      x_hi = std::max(x_hi, s.xs[i]);
      const double lo = s.lo.empty() ? s.ys[i] : s.lo[i];
      const double hi = s.hi.empty() ? s.ys[i] : s.hi[i];
      if (first) {
        y_lo = lo;
        y_hi = hi;
        first = false;
      }
      y_lo = std::min(y_lo, lo);
      y_hi = std::max(y_hi, hi);
    }
  }
  auto [ylo, yhi] = nice_bounds(std::min(y_lo, 0.0), y_hi);

  Scale sx{x_lo, x_hi, static_cast<double>(kMarginLeft),
           static_cast<double>(kWidth - kMarginRight)};
  Scale sy{ylo, yhi, static_cast<double>(kHeight - kMarginBottom),
           static_cast<double>(kMarginTop)};

  std::ostringstream out;
  open_svg(out, title);
  draw_y_axis(out, sy, y_label);
  draw_x_axis_line(out);
  out << "<text x=\"" << (kMarginLeft + kWidth - kMarginRight) / 2 << "\" y=\""
      << kHeight - 14 << "\" text-anchor=\"middle\" font-size=\"12\">"
      << escape_xml(x_label) << "</text>\n";
  for (int i = 0; i <= 5; ++i) {
    const double v = sx.lo + (sx.hi - sx.lo) * i / 5;
    out << "<text x=\"" << fmt(sx.to_pixel(v)) << "\" y=\""
        << kHeight - kMarginBottom + 16
        << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt(v) << "</text>\n";
  }

  std::vector<std::string> labels;
  for (std::size_t si = 0; si < series.size(); ++si) {
    const CurveSeries& s = series[si];
    const char* color = kPalette[si % kPaletteSize];
    if (!s.lo.empty() && s.lo.size() == s.xs.size() && s.hi.size() == s.xs.size()) {
      out << "<polygon fill=\"" << color << "\" fill-opacity=\"0.15\" "
             "stroke=\"none\" points=\"";
      for (std::size_t i = 0; i < s.xs.size(); ++i)
        out << fmt(sx.to_pixel(s.xs[i])) << ',' << fmt(sy.to_pixel(s.hi[i])) << ' ';
      for (std::size_t i = s.xs.size(); i-- > 0;)
        out << fmt(sx.to_pixel(s.xs[i])) << ',' << fmt(sy.to_pixel(s.lo[i])) << ' ';
      out << "\"/>\n";
    }
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.xs.size(); ++i)
      out << fmt(sx.to_pixel(s.xs[i])) << ',' << fmt(sy.to_pixel(s.ys[i])) << ' ';
    out << "\"/>\n";
    labels.push_back(s.label);
  }
  draw_legend(out, labels);
  out << "</svg>\n";
  return out.str();
}

BoxSeries box_stats(const std::string& label, std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("box_stats: empty sample");
  std::sort(values.begin(), values.end());
  auto quantile = [&](double p) {
    const double idx = p * (values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(idx));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = idx - static_cast<double>(lo);
    return values[lo] * (1.0 - frac) + values[hi] * frac;
  };
  BoxSeries b;
  b.label = label;
  b.min = values.front();
  b.max = values.back();
  b.q1 = quantile(0.25);
  b.median = quantile(0.5);
  b.q3 = quantile(0.75);
  b.points = values;
  return b;
}

std::string render_box_chart(const std::string& title, const std::string& y_label,
                             const std::vector<BoxSeries>& boxes) {
  if (boxes.empty()) throw std::invalid_argument("render_box_chart: no boxes");

  double y_lo = boxes[0].min, y_hi = boxes[0].max;
  for (const BoxSeries& b : boxes) {
    y_lo = std::min(y_lo, b.min);
    y_hi = std::max(y_hi, b.max);
  }
  auto [ylo, yhi] = nice_bounds(std::min(y_lo, 0.0), y_hi);
  Scale sy{ylo, yhi, static_cast<double>(kHeight - kMarginBottom),
           static_cast<double>(kMarginTop)};

  std::ostringstream out;
  open_svg(out, title);
  draw_y_axis(out, sy, y_label);
  draw_x_axis_line(out);

  const double plot_w = kWidth - kMarginRight - kMarginLeft;
  const double slot = plot_w / static_cast<double>(boxes.size());
  const double box_w = std::min(40.0, slot * 0.5);

  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const BoxSeries& b = boxes[i];
    const double cx = kMarginLeft + slot * (i + 0.5);
    const char* color = kPalette[i % kPaletteSize];

    out << "<line x1=\"" << fmt(cx) << "\" y1=\"" << fmt(sy.to_pixel(b.min))
        << "\" x2=\"" << fmt(cx) << "\" y2=\"" << fmt(sy.to_pixel(b.max))
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<rect x=\"" << fmt(cx - box_w / 2) << "\" y=\""
        << fmt(sy.to_pixel(b.q3)) << "\" width=\"" << fmt(box_w) << "\" height=\""
        << fmt(std::max(1.0, sy.to_pixel(b.q1) - sy.to_pixel(b.q3)))
        << "\" fill=\"" << color << "\" fill-opacity=\"0.35\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << fmt(cx - box_w / 2) << "\" y1=\""
        << fmt(sy.to_pixel(b.median)) << "\" x2=\"" << fmt(cx + box_w / 2)
        << "\" y2=\"" << fmt(sy.to_pixel(b.median))
        << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    // strip overlay, deterministic horizontal spread by sample index
    for (std::size_t j = 0; j < b.points.size(); ++j) {
      const double frac = b.points.size() > 1
                              ? static_cast<double>(j) / (b.points.size() - 1)
                              : 0.5;
      const double px = cx - box_w * 0.35 + frac * box_w * 0.7;
      out << "<circle cx=\"" << fmt(px) << "\" cy=\""
          << fmt(sy.to_pixel(b.points[j])) << "\" r=\"1.6\" fill=\"black\" "
             "fill-opacity=\"0.5\"/>\n";
    }
    out << "<text x=\"" << fmt(cx) << "\" y=\"" << kHeight - kMarginBottom + 16
        << "\" text-anchor=\"middle\" font-size=\"11\">" << escape_xml(b.label)
        << "</text>\n";
  }
  out << "<text x=\"" << (kMarginLeft + kWidth - kMarginRight) / 2 << "\" y=\""
      << kHeight - 14 << "\" text-anchor=\"middle\" font-size=\"12\">"
         "composition</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace lipatrol
