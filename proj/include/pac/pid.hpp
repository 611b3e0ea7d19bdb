// Saturated PID velocity baseline sharing the surface gain structure.
#pragma once

#include "pac/sliding.hpp"

namespace pac {

class PidController {
 public:
  PidController(const SlidingGains& gains, double dt)
      : gains_(gains), dt_(dt) {}

  double step(double x_ref, double x_meas) {
    const double e = x_ref - x_meas;
    integ_e_ += e * dt_;
    const double e_dot = (e - prev_e_) / dt_;
    prev_e_ = e;
    return saturate(
        sliding_surface(e, integ_e_, e_dot, gains_), gains_.a_m);
  }

  double integral() const { return integ_e_; }

 private:
  SlidingGains gains_;
  double dt_;
  double integ_e_ = 0.0;
  double prev_e_ = 0.0;
};

}  // namespace pac
