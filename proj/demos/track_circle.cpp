// Minimal library usage: one adaptive axis holding a slow sine reference
// against a constant drift, printing error and rule count each second.
#include <cmath>
#include <cstdio>
#include <numbers>

#include "pac/controller.hpp"
#include "pac/plant.hpp"

int main() {
  const double dt = 0.01;
  pac::SlidingGains gains{0.4, 0.001, 0.001, 1.0};
  pac::PacConfig cfg;
  cfg.p0 = 1.0;
  pac::AxisController axis(gains, cfg, dt);

  double x = 0.0;
  for (int k = 0; k < 6000; ++k) {
    const double t = k * dt;
    const double ref = std::sin(2.0 * std::numbers::pi * t / 30.0);
    const double cmd = axis.step(ref, x);
    const double drift = -0.3;
    x += (pac::saturate(cmd, 1.0) + drift) * dt;
    if (k % 100 == 0)
      std::printf("t=%5.1f  ref=%+.3f  x=%+.3f  e=%+.4f  rules=%d\n", t, ref,
                  x, ref - x, axis.last().rule_count);
  }
  return 0;
}
