#pragma once

#include <cmath>
#include <map>
#include <vector>

#include "rlsuite/experiments/runner.hpp"

namespace rlsuite::experiments {

struct CurvePoint {
  int64_t step = 0;
  double mean = 0.0;
  double stderr_ = 0.0;
};

struct AggregatedCurve {
  CurveSpec spec;
  std::vector<CurvePoint> points;
};

namespace detail {

inline std::vector<double> moving_average(const std::vector<double>& x, int window) {
  if (window <= 1) return x;
  const int n = static_cast<int>(x.size());
  std::vector<double> out(x.size(), 0.0);
  const int lo_off = (window - 1) / 2;
  const int hi_off = window - 1 - lo_off;
  for (int i = 0; i < n; ++i) {
    const int lo = std::max(0, i - lo_off);
    const int hi = std::min(n - 1, i + hi_off);
    double sum = 0.0;
    for (int j = lo; j <= hi; ++j) sum += x[static_cast<size_t>(j)];
    out[static_cast<size_t>(i)] = sum / (hi - lo + 1);
  }
  return out;
}

}  // namespace detail

/// Cross-repetition mean and standard error per logged step, then a centered
/// moving average of the given width (truncated at the edges) over both.
inline std::vector<AggregatedCurve> aggregate(const RunRecord& record, int smoothing_window) {
  if (smoothing_window < 1) throw ConfigError("smoothing window must be >= 1");
  std::vector<AggregatedCurve> out;
  for (const auto& curve : record.curves) {
    std::map<int64_t, std::vector<double>> by_step;
    for (const auto& row : curve.rows) by_step[row.step].push_back(row.value);

    AggregatedCurve agg;
    agg.spec = curve.spec;
    std::vector<double> means, errs;
    for (const auto& [step, values] : by_step) {
      double mean = 0.0;
      for (double v : values) mean += v;
      mean /= static_cast<double>(values.size());
      double se = 0.0;
      if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - mean) * (v - mean);
        se = std::sqrt(ss / static_cast<double>(values.size() - 1)) /
             std::sqrt(static_cast<double>(values.size()));
      }
      agg.points.push_back({step, 0.0, 0.0});
      means.push_back(mean);
      errs.push_back(se);
    }
    const auto smooth_mean = detail::moving_average(means, smoothing_window);
    const auto smooth_err = detail::moving_average(errs, smoothing_window);
    for (size_t i = 0; i < agg.points.size(); ++i) {
      agg.points[i].mean = smooth_mean[i];
      agg.points[i].stderr_ = smooth_err[i];
    }
    out.push_back(std::move(agg));
  }
  return out;
}

}  // namespace rlsuite::experiments
