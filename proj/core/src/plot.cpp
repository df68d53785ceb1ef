// SPDX-License-Identifier: Apache-2.0

#include "asmop/plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>

namespace asmop {

namespace {

constexpr double kWidth = 880.0;
constexpr double kHeight = 560.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 700.0;   // legend sits right of this
constexpr double kTop = 40.0;
constexpr double kBottom = 500.0;
constexpr double kOmegaFloor = 1e-16;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
constexpr int kPaletteSize = 8;

std::string fixed(double v, int precision = 2) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v,
                                       std::chars_format::fixed, precision);
  if (ec != std::errc()) return "0";
  return std::string(buffer, ptr);
}

std::string compact(double v) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v,
                                       std::chars_format::general, 4);
  if (ec != std::errc()) return "0";
  return std::string(buffer, ptr);
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void include(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (lo > hi) {
      lo = 0.0;
      hi = 1.0;
    }
    if (lo == hi) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

double map_x(double v, const Range& r) {
  return kLeft + (v - r.lo) / (r.hi - r.lo) * (kRight - kLeft);
}

double map_y(double v, const Range& r) {
  return kBottom - (v - r.lo) / (r.hi - r.lo) * (kBottom - kTop);
}

void linear_ticks(const Range& r, std::vector<double>& ticks) {
  const double span = r.hi - r.lo;
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  if (raw / mag >= 5.0)
    step = 5.0 * mag;
  else if (raw / mag >= 2.0)
    step = 2.0 * mag;
  const double first = std::ceil(r.lo / step) * step;
  for (double t = first; t <= r.hi + 1e-9 * span; t += step) ticks.push_back(t);
}

void svg_open(std::string& out) {
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(kWidth, 0) +
         "\" height=\"" + fixed(kHeight, 0) + "\" viewBox=\"0 0 " +
         fixed(kWidth, 0) + " " + fixed(kHeight, 0) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void svg_axes(std::string& out, const std::string& x_label,
              const std::string& y_label) {
  out += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(kBottom) +
         "\" x2=\"" + fixed(kRight) + "\" y2=\"" + fixed(kBottom) +
         "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(kTop) + "\" x2=\"" +
         fixed(kLeft) + "\" y2=\"" + fixed(kBottom) + "\" stroke=\"black\"/>\n";
  out += "<text x=\"" + fixed((kLeft + kRight) / 2.0) + "\" y=\"" +
         fixed(kBottom + 40.0) +
         "\" text-anchor=\"middle\" font-size=\"15\">" + x_label + "</text>\n";
  out += "<text x=\"20\" y=\"" + fixed((kTop + kBottom) / 2.0) +
         "\" text-anchor=\"middle\" font-size=\"15\" transform=\"rotate(-90 20 " +
         fixed((kTop + kBottom) / 2.0) + ")\">" + y_label + "</text>\n";
}

void svg_x_ticks(std::string& out, const Range& r) {
  std::vector<double> ticks;
  linear_ticks(r, ticks);
  for (double t : ticks) {
    const double px = map_x(t, r);
    out += "<line x1=\"" + fixed(px) + "\" y1=\"" + fixed(kBottom) + "\" x2=\"" +
           fixed(px) + "\" y2=\"" + fixed(kBottom + 6.0) +
           "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fixed(px) + "\" y=\"" + fixed(kBottom + 22.0) +
           "\" text-anchor=\"middle\" font-size=\"12\">" + compact(t) +
           "</text>\n";
  }
}

void svg_y_ticks_linear(std::string& out, const Range& r) {
  std::vector<double> ticks;
  linear_ticks(r, ticks);
  for (double t : ticks) {
    const double py = map_y(t, r);
    out += "<line x1=\"" + fixed(kLeft - 6.0) + "\" y1=\"" + fixed(py) +
           "\" x2=\"" + fixed(kLeft) + "\" y2=\"" + fixed(py) +
           "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fixed(kLeft - 10.0) + "\" y=\"" + fixed(py + 4.0) +
           "\" text-anchor=\"end\" font-size=\"12\">" + compact(t) + "</text>\n";
  }
}

void svg_y_ticks_log(std::string& out, const Range& r) {
  const int lo = static_cast<int>(std::ceil(r.lo - 1e-9));
  const int hi = static_cast<int>(std::floor(r.hi + 1e-9));
  for (int e = lo; e <= hi; ++e) {
    const double py = map_y(static_cast<double>(e), r);
    out += "<line x1=\"" + fixed(kLeft - 6.0) + "\" y1=\"" + fixed(py) +
           "\" x2=\"" + fixed(kLeft) + "\" y2=\"" + fixed(py) +
           "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fixed(kLeft - 10.0) + "\" y=\"" + fixed(py + 4.0) +
           "\" text-anchor=\"end\" font-size=\"12\">1e" + std::to_string(e) +
           "</text>\n";
  }
}

void svg_legend(std::string& out, const std::vector<std::string>& labels) {
  double y = kTop + 10.0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const char* color = kPalette[i % kPaletteSize];
    out += "<line x1=\"" + fixed(kRight + 14.0) + "\" y1=\"" + fixed(y) +
           "\" x2=\"" + fixed(kRight + 44.0) + "\" y2=\"" + fixed(y) +
           "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + fixed(kRight + 50.0) + "\" y=\"" + fixed(y + 4.0) +
           "\" font-size=\"12\">" + labels[i] + "</text>\n";
    y += 20.0;
  }
}

void svg_polyline(std::string& out, const std::vector<std::pair<double, double>>& pts,
                  const char* color) {
  out += "<polyline fill=\"none\" stroke=\"";
  out += color;
  out += "\" stroke-width=\"1.5\" points=\"";
  for (const auto& [x, y] : pts) {
    out += fixed(x) + "," + fixed(y) + " ";
  }
  out += "\"/>\n";
}

double omega_of(const IterateRecord& rec) {
  const double v = rec.omega_true ? *rec.omega_true : rec.omega_sub;
  return std::max(v, kOmegaFloor);
}

}  // namespace

std::string render_plot_svg(const std::vector<TraceSeries>& series, PlotKind kind) {
  if (series.empty()) throw InputError("no traces to plot");
  std::size_t total_rows = 0;
  for (const auto& s : series) {
    if (s.trace == nullptr) throw InputError("null trace in plot series");
    total_rows += s.trace->size();
  }
  if (total_rows == 0) throw InputError("all traces are empty");

  Range x_range;
  Range y_range;
  for (const auto& s : series) {
    for (const auto& rec : *s.trace) {
      x_range.include(static_cast<double>(rec.cost));
      if (kind == PlotKind::OmegaVsCost) {
        y_range.include(std::log10(omega_of(rec)));
      } else {
        for (int size : rec.sizes) y_range.include(static_cast<double>(size));
      }
    }
  }
  x_range.pad();
  y_range.pad();

  std::string out;
  svg_open(out);
  svg_axes(out, "scalar products",
           kind == PlotKind::OmegaVsCost ? "omega" : "sample size");
  svg_x_ticks(out, x_range);
  if (kind == PlotKind::OmegaVsCost)
    svg_y_ticks_log(out, y_range);
  else
    svg_y_ticks_linear(out, y_range);

  std::vector<std::string> legend;
  int color_index = 0;
  for (const auto& s : series) {
    if (kind == PlotKind::OmegaVsCost) {
      std::vector<std::pair<double, double>> pts;
      pts.reserve(s.trace->size());
      for (const auto& rec : *s.trace)
        pts.emplace_back(map_x(static_cast<double>(rec.cost), x_range),
                         map_y(std::log10(omega_of(rec)), y_range));
      svg_polyline(out, pts, kPalette[color_index % kPaletteSize]);
      legend.push_back(s.label);
      ++color_index;
    } else {
      const int q = s.trace->empty()
                        ? 0
                        : static_cast<int>(s.trace->front().sizes.size());
      for (int i = 0; i < q; ++i) {
        std::vector<std::pair<double, double>> pts;
        pts.reserve(s.trace->size());
        for (const auto& rec : *s.trace)
          pts.emplace_back(
              map_x(static_cast<double>(rec.cost), x_range),
              map_y(static_cast<double>(rec.sizes[static_cast<std::size_t>(i)]),
                    y_range));
        svg_polyline(out, pts, kPalette[color_index % kPaletteSize]);
        legend.push_back(s.label + " f" + std::to_string(i + 1));
        ++color_index;
      }
    }
  }
  svg_legend(out, legend);
  out += "</svg>\n";
  return out;
}

void emit_plot(const std::vector<TraceSeries>& series, PlotKind kind,
               const std::filesystem::path& path) {
  const std::string svg = render_plot_svg(series, kind);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << svg;
  if (!out) throw Error("failed writing " + path.string());
}

std::string render_front_svg(const std::vector<FrontEntry>& entries) {
  if (entries.empty()) throw InputError("no front entries to plot");
  for (const auto& e : entries)
    if (e.objectives.size() != 2)
      throw InputError("front plots are limited to two objectives");

  Range x_range;
  Range y_range;
  for (const auto& e : entries) {
    x_range.include(e.objectives[0]);
    y_range.include(e.objectives[1]);
  }
  x_range.pad();
  y_range.pad();

  std::string out;
  svg_open(out);
  svg_axes(out, "f1", "f2");
  svg_x_ticks(out, x_range);
  svg_y_ticks_linear(out, y_range);
  for (const auto& e : entries) {
    out += "<circle cx=\"" + fixed(map_x(e.objectives[0], x_range)) +
           "\" cy=\"" + fixed(map_y(e.objectives[1], y_range)) +
           "\" r=\"3.5\" fill=\"" + kPalette[0] + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

void emit_front_plot(const std::vector<FrontEntry>& entries,
                     const std::filesystem::path& path) {
  const std::string svg = render_front_svg(entries);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << svg;
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace asmop
