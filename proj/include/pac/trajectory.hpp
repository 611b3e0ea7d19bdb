// Reference generators: circle, figure-eight, square-wave altitude, hold,
// each optionally preceded by a straight-line intercept leg.
#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pac {

enum class TrajectoryKind { circle, eight, square_alt, hold };

struct TrajectorySpec {
  TrajectoryKind kind = TrajectoryKind::hold;
  double center_x = 0.0;
  double center_y = 0.0;
  double amplitude = 0.0;    // circle radius / eight x half-width (m)
  double amplitude_y = 0.0;  // eight y half-height (m), 0 = use amplitude
  double period_x = 1.0;     // s
  double period_y = 1.0;     // s
  double z_hold = 1.0;       // m
  double square_offset = 0.0;     // m, square_alt midpoint
  double square_amplitude = 0.0;  // m, peak-to-peak
  double square_period = 21.0;    // s
  double intercept_lead = 0.0;    // s, 0 disables the intercept leg
  std::array<double, 3> start{};  // intercept start point (m)
  double duration = 0.0;          // s, valid query window
};

namespace detail {

inline std::array<double, 3> base_reference(const TrajectorySpec& s, double t) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  switch (s.kind) {
    case TrajectoryKind::circle:
      return {s.center_x + s.amplitude * std::cos(two_pi * t / s.period_x),
              s.center_y + s.amplitude * std::sin(two_pi * t / s.period_y),
              s.z_hold};
    case TrajectoryKind::eight: {
      const double ay = s.amplitude_y != 0.0 ? s.amplitude_y : s.amplitude;
      return {s.center_x + s.amplitude * std::cos(two_pi * t / s.period_x),
              s.center_y + ay * std::sin(two_pi * t / s.period_y), s.z_hold};
    }
    case TrajectoryKind::square_alt: {
      const double phase = std::fmod(t, s.square_period);
      const double half = 0.5 * s.square_amplitude;
      const double z = phase < 0.5 * s.square_period ? s.square_offset + half
                                                     : s.square_offset - half;
      return {s.center_x, s.center_y, z};
    }
    case TrajectoryKind::hold:
      return {s.center_x, s.center_y, s.z_hold};
  }
  return {};
}

}  // namespace detail

inline std::array<double, 3> reference(const TrajectorySpec& s, double t) {
  if (t < 0.0 || t > s.duration)
    throw std::out_of_range("trajectory query outside [0, duration]");
  if (s.intercept_lead > 0.0 && t < s.intercept_lead) {
    const std::array<double, 3> target = detail::base_reference(s, 0.0);
    const double f = t / s.intercept_lead;
    return {s.start[0] + f * (target[0] - s.start[0]),
            s.start[1] + f * (target[1] - s.start[1]),
            s.start[2] + f * (target[2] - s.start[2])};
  }
  const double tb = s.intercept_lead > 0.0 ? t - s.intercept_lead : t;
  return detail::base_reference(s, tb);
}

}  // namespace pac
