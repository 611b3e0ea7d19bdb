// Built-in scenario presets. Each is an ordinary config text run through the
// same parser as user files.
#pragma once

#include <string>
#include <vector>

#include "pac/scenario.hpp"

namespace pac {

struct Preset {
  std::string name;
  std::string summary;
  std::string text;
};

namespace detail {

inline std::string sim_circle_preset(const std::string& name,
                                     const std::string& a_d) {
  return "[scenario]\nname = " + name + R"(
dt = 0.01
duration = 240
controller = both

[trajectory]
kind = circle
center_x = 0
center_y = 0
amplitude = 6
period_x = 120
period_y = 120
z_hold = 1

[disturbance]
kind = wind
a_d = )" + a_d + R"(
b_d = 0.05
omega_d = 1
axes = xy

[inner_loop]
mode = perfect
clip = 1.0

[gains.x]
k1 = 0.4
k2 = 0.001
k3 = 0.001
a_m = 1.0

[gains.y]
k1 = 0.4
k2 = 0.001
k3 = 0.001
a_m = 1.0

[gains.z]
k1 = 0.35
k2 = 0.01
k3 = 0.65
a_m = 0.8

[pac]
alpha = 1.0
p0 = 0.002
r_max = 20
grace = 20
warmup = 20
)";
}

inline std::string exp_gains_block() {
  return R"(
[gains.x]
k1 = 1.0
k2 = 0.001
k3 = 0.0
a_m = 0.8

[gains.y]
k1 = 1.0
k2 = 0.001
k3 = 0.0
a_m = 0.8

[gains.z]
k1 = 0.35
k2 = 0.01
k3 = 0.65
a_m = 0.8
)";
}

inline std::string exp_pac_block(int r_max = 20) {
  return R"(
[pac]
alpha = 1.0
p0 = 10.0
r_max = )" + std::to_string(r_max) +
         R"(
grace = 20
warmup = 20
)";
}

inline std::string exp_lateral_preset(const std::string& name, bool eight,
                                      bool wind) {
  std::string text = "[scenario]\nname = " + name + "\ndt = 0.01\nduration = " +
                     (eight ? "90" : "60") + "\ncontroller = both\n";
  if (eight) {
    text += R"(
[trajectory]
kind = eight
center_x = 0
center_y = 0
amplitude = 1.5
amplitude_y = 0.75
period_x = 20
period_y = 10
z_hold = 1
intercept_lead = 10
start_x = 0
start_y = 0
start_z = 1
)";
  } else {
    text += R"(
[trajectory]
kind = circle
center_x = 0
center_y = 0
amplitude = 1.5
period_x = 10
period_y = 10
z_hold = 1
intercept_lead = 10
start_x = 0
start_y = 0
start_z = 1
)";
  }
  if (wind) {
    text += R"(
[disturbance]
kind = wind
a_d = -0.3
b_d = 0.05
omega_d = 1
axes = xy
)";
  }
  text += R"(
[inner_loop]
mode = perfect
clip = 1.0
)";
  text += exp_gains_block();
  text += exp_pac_block();
  return text;
}

inline std::string exp_altitude_preset() {
  return R"([scenario]
name = exp_altitude_proximity
dt = 0.01
duration = 84
controller = both

[trajectory]
kind = square_alt
center_x = 0
center_y = 0
square_offset = 0.55
square_amplitude = 0.6
square_period = 21

[disturbance]
kind = proximity
z_floor = 0
z_ceil = 1.0
gain_ground = 0.05
gain_ceil = 0.05
length_scale = 0.1

[inner_loop]
mode = perfect
clip = 1.0
)" + exp_gains_block() +
         // Single-axis task over a smooth wall field: a lone hyperplane rule is
         // enough, and capping the structure keeps covariance re-seeding from
         // repeated growth off this scenario's step transients.
         exp_pac_block(1);
}

}  // namespace detail

inline const std::vector<Preset>& presets() {
  static const std::vector<Preset> table = {
      {"sim_circle_low_wind",
       "6 m circle, 120 s lap, constant -0.1 m/s wind plus 1 Hz ripple",
       detail::sim_circle_preset("sim_circle_low_wind", "-0.1")},
      {"sim_circle_med_wind",
       "6 m circle, 120 s lap, constant -0.2 m/s wind plus 1 Hz ripple",
       detail::sim_circle_preset("sim_circle_med_wind", "-0.2")},
      {"sim_circle_high_wind",
       "6 m circle, 120 s lap, constant -0.5 m/s wind plus 1 Hz ripple",
       detail::sim_circle_preset("sim_circle_high_wind", "-0.5")},
      {"exp_circle", "1.5 m circle after a 10 s straight-line intercept",
       detail::exp_lateral_preset("exp_circle", false, false)},
      {"exp_eight", "1.5 x 0.75 m figure-eight after a 10 s intercept",
       detail::exp_lateral_preset("exp_eight", true, false)},
      {"exp_circle_wind", "1.5 m circle with steady lateral wind",
       detail::exp_lateral_preset("exp_circle_wind", false, true)},
      {"exp_eight_wind", "figure-eight with steady lateral wind",
       detail::exp_lateral_preset("exp_eight_wind", true, true)},
      {"exp_altitude_proximity",
       "square-wave altitude between floor and ceiling effects",
       detail::exp_altitude_preset()},
  };
  return table;
}

inline const Preset* find_preset(const std::string& name) {
  for (const auto& p : presets())
    if (name == p.name) return &p;
  return nullptr;
}

}  // namespace pac
