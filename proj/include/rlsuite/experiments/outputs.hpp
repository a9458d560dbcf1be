#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "rlsuite/experiments/aggregate.hpp"

namespace rlsuite::experiments {

namespace detail {

inline std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

inline std::string fmt2(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

inline const char* curve_color(size_t i) {
  static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return palette[i % 10];
}

}  // namespace detail

/// CSV with header step,mean_return,stderr,agent,env; one row per curve per
/// logged step, curves in config order. Byte-deterministic.
inline void write_curve_csv(const std::vector<AggregatedCurve>& curves, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write CSV to " + path);
  out << "step,mean_return,stderr,agent,env\n";
  for (const auto& c : curves) {
    for (const auto& p : c.points) {
      out << p.step << "," << detail::fmt(p.mean) << "," << detail::fmt(p.stderr_) << ","
          << c.spec.agent_label << "," << c.spec.env_label << "\n";
    }
  }
  if (!out) throw Error("failed while writing CSV to " + path);
}

/// Static SVG 1.1 line plot: one polyline per curve, axes with min/max
/// labels and a legend. Byte-deterministic.
inline void write_curve_svg(const std::vector<AggregatedCurve>& curves, const std::string& path,
                            const std::string& title) {
  const double width = 860, height = 520;
  const double l = 70, r = 210, t = 40, b = 50;
  const double pw = width - l - r, ph = height - t - b;

  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  bool any = false;
  for (const auto& c : curves) {
    for (const auto& p : c.points) {
      if (!any) {
        x0 = x1 = static_cast<double>(p.step);
        y0 = y1 = p.mean;
        any = true;
      }
      x0 = std::min(x0, static_cast<double>(p.step));
      x1 = std::max(x1, static_cast<double>(p.step));
      y0 = std::min(y0, p.mean);
      y1 = std::max(y1, p.mean);
    }
  }
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y1 = y0 + 1;
  const double pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;

  auto sx = [&](double x) { return l + (x - x0) / (x1 - x0) * pw; };
  auto sy = [&](double y) { return t + ph - (y - y0) / (y1 - y0) * ph; };

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write SVG to " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << l << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">" << title
      << "</text>\n";
  // axes
  out << "<line x1=\"" << l << "\" y1=\"" << t + ph << "\" x2=\"" << l + pw << "\" y2=\"" << t + ph
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << l << "\" y1=\"" << t << "\" x2=\"" << l << "\" y2=\"" << t + ph
      << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4.0;
    const double yv = y0 + (y1 - y0) * i / 4.0;
    out << "<text x=\"" << detail::fmt2(sx(xv)) << "\" y=\"" << t + ph + 18
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
        << detail::fmt(xv) << "</text>\n";
    out << "<text x=\"" << l - 6 << "\" y=\"" << detail::fmt2(sy(yv) + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" << detail::fmt(yv)
        << "</text>\n";
  }
  out << "<text x=\"" << l + pw / 2 << "\" y=\"" << height - 10
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">step</text>\n";
  out << "<text x=\"18\" y=\"" << t + ph / 2
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 "
         "18 "
      << t + ph / 2 << ")\">mean return</text>\n";

  for (size_t i = 0; i < curves.size(); ++i) {
    const auto& c = curves[i];
    if (!c.points.empty()) {
      out << "<polyline fill=\"none\" stroke=\"" << detail::curve_color(i)
          << "\" stroke-width=\"1.5\" points=\"";
      for (const auto& p : c.points)
        out << detail::fmt2(sx(static_cast<double>(p.step))) << "," << detail::fmt2(sy(p.mean))
            << " ";
      out << "\"/>\n";
    }
    const double ly = t + 16 + 18 * static_cast<double>(i);
    out << "<line x1=\"" << l + pw + 12 << "\" y1=\"" << ly - 4 << "\" x2=\"" << l + pw + 34
        << "\" y2=\"" << ly - 4 << "\" stroke=\"" << detail::curve_color(i)
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << l + pw + 40 << "\" y=\"" << ly
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << c.spec.label << "</text>\n";
  }
  out << "</svg>\n";
  if (!out) throw Error("failed while writing SVG to " + path);
}

/// Writes <name>.csv and <name>.svg under out_dir.
inline std::pair<std::string, std::string> write_outputs(
    const std::vector<AggregatedCurve>& curves, const std::string& out_dir,
    const std::string& name) {
  const std::string csv = out_dir + "/" + name + ".csv";
  const std::string svg = out_dir + "/" + name + ".svg";
  write_curve_csv(curves, csv);
  write_curve_svg(curves, svg, name);
  return {csv, svg};
}

}  // namespace rlsuite::experiments
