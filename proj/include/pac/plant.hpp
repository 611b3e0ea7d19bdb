// First-order translational plant with actuator clipping, an optional
// inner-loop velocity lag, and additive disturbance models.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "pac/sliding.hpp"

namespace pac {

enum class DisturbanceKind { none, wind, proximity };

struct DisturbanceSpec {
  DisturbanceKind kind = DisturbanceKind::none;
  // wind: v_d(t) = a_d + b_d sin(2 pi omega_d t), applied on enabled axes
  double a_d = 0.0;
  double b_d = 0.0;
  double omega_d = 0.0;
  std::array<bool, 3> axes{false, false, false};
  // proximity: vertical pull toward floor and ceiling surfaces
  double z_floor = 0.0;
  double z_ceil = 1.0;
  double gain_ground = 0.05;
  double gain_ceil = 0.05;
  double length_scale = 0.1;
};

enum class InnerLoopMode { perfect, first_order_lag };

struct InnerLoopSpec {
  InnerLoopMode mode = InnerLoopMode::perfect;
  double tau = 0.1;   // lag time constant, s
  double clip = 1.0;  // actuator velocity bound, m/s
};

struct PlantState {
  std::array<double, 3> pos{};
  std::array<double, 3> vel{};  // inner-loop applied velocity
  double t = 0.0;
  bool fault = false;
};

inline double wind_velocity(const DisturbanceSpec& d, double t) {
  return d.a_d + d.b_d * std::sin(2.0 * std::numbers::pi * d.omega_d * t);
}

// Both terms act upward: extra lift near the floor, suction toward the
// ceiling from above-ambient pull as the gap closes. The interaction peaks
// at contact, so outside the floor..ceiling band the wall value holds.
inline double proximity_velocity(const DisturbanceSpec& d, double z) {
  const double zc = std::clamp(z, d.z_floor, d.z_ceil);
  const double lift =
      d.gain_ground * std::exp(-(zc - d.z_floor) / d.length_scale);
  const double pull = d.gain_ceil * std::exp(-(d.z_ceil - zc) / d.length_scale);
  return lift + pull;
}

inline std::array<double, 3> disturbance_velocity(const DisturbanceSpec& d,
                                                  const PlantState& s) {
  std::array<double, 3> v{};
  switch (d.kind) {
    case DisturbanceKind::none:
      break;
    case DisturbanceKind::wind:
      for (int i = 0; i < 3; ++i)
        if (d.axes[static_cast<std::size_t>(i)])
          v[static_cast<std::size_t>(i)] = wind_velocity(d, s.t);
      break;
    case DisturbanceKind::proximity:
      v[2] = proximity_velocity(d, s.pos[2]);
      break;
  }
  return v;
}

// Euler step of pos' = applied + disturbance. A non-finite command latches
// the fault flag and freezes the state.
inline void plant_step(PlantState& s, const std::array<double, 3>& cmd,
                       const DisturbanceSpec& dist, const InnerLoopSpec& inner,
                       double dt) {
  if (s.fault) return;
  for (double c : cmd)
    if (!std::isfinite(c)) {
      s.fault = true;
      return;
    }
  const std::array<double, 3> vd = disturbance_velocity(dist, s);
  for (std::size_t i = 0; i < 3; ++i) {
    const double u = saturate(cmd[i], inner.clip);
    if (inner.mode == InnerLoopMode::perfect) {
      s.vel[i] = u;
    } else {
      s.vel[i] += dt * (u - s.vel[i]) / inner.tau;
    }
    s.pos[i] += (s.vel[i] + vd[i]) * dt;
  }
  s.t += dt;
}

}  // namespace pac
