// Minimal fixed-size linear algebra for the 4-dimensional regressor space.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace pac {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;

inline double dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

inline Vec4 scaled(const Vec4& a, double s) {
  return {a[0] * s, a[1] * s, a[2] * s, a[3] * s};
}

inline Vec4 hadamard(const Vec4& a, const Vec4& b) {
  return {a[0] * b[0], a[1] * b[1], a[2] * b[2], a[3] * b[3]};
}

inline Mat4 scaled_identity(double s) {
  Mat4 m{};
  for (std::size_t i = 0; i < 4; ++i) m[i][i] = s;
  return m;
}

inline Vec4 mat_vec(const Mat4& m, const Vec4& v) {
  Vec4 r{};
  for (std::size_t i = 0; i < 4; ++i) r[i] = dot(m[i], v);
  return r;
}

// m -= s * q q^T
inline void sub_scaled_outer(Mat4& m, const Vec4& q, double s) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m[i][j] -= s * q[i] * q[j];
}

inline void symmetrize(Mat4& m) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      const double v = 0.5 * (m[i][j] + m[j][i]);
      m[i][j] = v;
      m[j][i] = v;
    }
}

inline bool finite(const Vec4& v) {
  return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]) &&
         std::isfinite(v[3]);
}

inline bool finite(const Mat4& m) {
  for (const auto& row : m)
    for (double x : row)
      if (!std::isfinite(x)) return false;
  return true;
}

inline double frobenius_distance(const Mat4& a, const Mat4& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const double d = a[i][j] - b[i][j];
      acc += d * d;
    }
  return std::sqrt(acc);
}

inline Mat4 mat_mul(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

}  // namespace pac
