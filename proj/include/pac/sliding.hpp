// PID-structured sliding surface, output saturation and the gain stability gate.
#pragma once

#include <cmath>

namespace pac {

// Per-axis surface gains and saturation bound (m/s).
struct SlidingGains {
  double k1 = 0.0;  // proportional
  double k2 = 0.0;  // integral
  double k3 = 0.0;  // derivative
  double a_m = 1.0; // saturation bound, > 0
};

inline double sliding_surface(double e, double integ_e, double e_dot,
                              const SlidingGains& g) {
  return g.k1 * e + g.k2 * integ_e + g.k3 * e_dot;
}

// Identity inside [-a_m, a_m], clamped to a_m * sign(f) outside.
inline double saturate(double f, double a_m) {
  if (std::fabs(f) <= a_m) return f;
  return std::copysign(a_m, f);
}

inline bool hurwitz_sign_check(const SlidingGains& g) {
  return g.k1 > 0.0 && g.k2 > 0.0 && g.k3 >= 0.0;
}

// Real parts of the eigenvalues of [[0, 1], [-k2/(1+k3), -k1/(1+k3)]]
// strictly negative. Degenerate 1 + k3 == 0 is rejected.
inline bool hurwitz_eigen_check(const SlidingGains& g) {
  const double denom = 1.0 + g.k3;
  if (denom == 0.0) return false;
  const double a = g.k1 / denom;  // lambda^2 + a lambda + b = 0
  const double b = g.k2 / denom;
  const double disc = a * a - 4.0 * b;
  if (disc < 0.0) return -0.5 * a < 0.0;
  const double root = std::sqrt(disc);
  const double r1 = 0.5 * (-a + root);
  const double r2 = 0.5 * (-a - root);
  return r1 < 0.0 && r2 < 0.0;
}

// Gate used everywhere a gain set is accepted: sign conditions and the
// eigenvalue test must both hold.
inline bool is_hurwitz(const SlidingGains& g) {
  return hurwitz_sign_check(g) && hurwitz_eigen_check(g);
}

}  // namespace pac
