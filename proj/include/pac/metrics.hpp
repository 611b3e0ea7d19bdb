// Tracking-error metrics over recorded runs.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pac {

// One sample of a closed-loop run, in recording order.
struct TraceRow {
  double t = 0.0;
  std::array<double, 3> ref{};
  std::array<double, 3> pos{};
  std::array<double, 3> cmd{};
  std::array<double, 3> v_us{};
  std::array<double, 3> v_up{};
  std::array<int, 3> rules{};
  std::array<double, 3> bias{};
  std::array<double, 3> var{};
  std::string event;
};

struct RunTrace {
  double dt = 0.0;
  std::vector<TraceRow> rows;
};

// Root mean square of the 3-axis error vector norm over rows with
// t >= skip_before.
inline double rmse(const RunTrace& trace, double skip_before = 0.0) {
  double acc = 0.0;
  std::size_t n = 0;
  for (const auto& row : trace.rows) {
    if (row.t < skip_before) continue;
    for (std::size_t i = 0; i < 3; ++i) {
      const double e = row.ref[i] - row.pos[i];
      acc += e * e;
    }
    ++n;
  }
  if (n == 0) throw std::invalid_argument("rmse over an empty trace");
  return std::sqrt(acc / static_cast<double>(n));
}

// Horizontal-plane error magnitude per row.
inline std::vector<double> euclidean_error(const RunTrace& trace) {
  std::vector<double> out;
  out.reserve(trace.rows.size());
  for (const auto& row : trace.rows) {
    const double ex = row.ref[0] - row.pos[0];
    const double ey = row.ref[1] - row.pos[1];
    out.push_back(std::sqrt(ex * ex + ey * ey));
  }
  return out;
}

struct SummaryStats {
  double mean = 0.0;
  double stddev = 0.0;  // population form
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

namespace detail {

// Linear interpolation between closest ranks on sorted data.
inline double quantile_sorted(const std::vector<double>& v, double p) {
  const double h = p * static_cast<double>(v.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(h);
  if (lo + 1 >= v.size()) return v.back();
  const double frac = h - static_cast<double>(lo);
  return v[lo] + frac * (v[lo + 1] - v[lo]);
}

}  // namespace detail

inline SummaryStats summarize(const std::vector<double>& series) {
  if (series.empty())
    throw std::invalid_argument("summary of an empty series");
  std::vector<double> sorted = series;
  std::sort(sorted.begin(), sorted.end());
  SummaryStats s;
  double acc = 0.0;
  for (double x : sorted) acc += x;
  s.mean = acc / static_cast<double>(sorted.size());
  double sq = 0.0;
  for (double x : sorted) sq += (x - s.mean) * (x - s.mean);
  s.stddev = std::sqrt(sq / static_cast<double>(sorted.size()));
  s.min = sorted.front();
  s.q1 = detail::quantile_sorted(sorted, 0.25);
  s.median = detail::quantile_sorted(sorted, 0.5);
  s.q3 = detail::quantile_sorted(sorted, 0.75);
  s.max = sorted.back();
  return s;
}

}  // namespace pac
