// Streaming bias/variance statistics driving rule growth and pruning.
#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "pac/linalg.hpp"
#include "pac/network.hpp"

namespace pac {

// Single-pass running mean and population standard deviation.
struct RunningMoments {
  long n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }
  double stddev() const {
    return n > 0 ? std::sqrt(m2 / static_cast<double>(n)) : 0.0;
  }
};

// Which reading of E[x_p^2] the variance estimate uses.
enum class VarianceForm {
  hadamard,  // sum_i w_i · (mu_x ∘ mu_x)
  scalar,    // sum_i (w_i · mu_x)^2
};

struct NetworkStats {
  Vec4 mu_x{};             // running mean of the extended input
  double bias_sq = 0.0;    // latest squared prediction bias
  double variance = 0.0;   // latest variance estimate (may be negative)
  RunningMoments bias_moments;
  RunningMoments var_moments;
  double min_mean_bias = std::numeric_limits<double>::infinity();
  double min_std_bias = std::numeric_limits<double>::infinity();
  double min_mean_var = std::numeric_limits<double>::infinity();
  double min_std_var = std::numeric_limits<double>::infinity();
  long n_samples = 0;
};

// Expected network output at the mean input, unity firing assumed.
inline double stats_prediction(const std::vector<HyperplaneRule>& rules,
                               const Vec4& mu_x) {
  double xhat = 0.0;
  for (const auto& r : rules) xhat += dot(r.w, mu_x);
  return xhat;
}

inline double stats_second_moment(const std::vector<HyperplaneRule>& rules,
                                  const Vec4& mu_x, VarianceForm form) {
  double e2 = 0.0;
  if (form == VarianceForm::hadamard) {
    const Vec4 mu2 = hadamard(mu_x, mu_x);
    for (const auto& r : rules) e2 += dot(r.w, mu2);
  } else {
    for (const auto& r : rules) {
      const double c = dot(r.w, mu_x);
      e2 += c * c;
    }
  }
  return e2;
}

inline void update_stats(NetworkStats& st, double x_target,
                         const std::vector<HyperplaneRule>& rules,
                         const ExtendedInput& xe,
                         VarianceForm form = VarianceForm::hadamard) {
  ++st.n_samples;
  const double inv_n = 1.0 / static_cast<double>(st.n_samples);
  for (std::size_t i = 0; i < 4; ++i)
    st.mu_x[i] += (xe.c[i] - st.mu_x[i]) * inv_n;

  const double xhat = stats_prediction(rules, st.mu_x);
  st.bias_sq = (x_target - xhat) * (x_target - xhat);
  st.variance = stats_second_moment(rules, st.mu_x, form) - xhat * xhat;

  st.bias_moments.add(st.bias_sq);
  st.var_moments.add(st.variance);

  st.min_mean_bias = std::min(st.min_mean_bias, st.bias_moments.mean);
  st.min_std_bias = std::min(st.min_std_bias, st.bias_moments.stddev());
  st.min_mean_var = std::min(st.min_mean_var, st.var_moments.mean);
  st.min_std_var = std::min(st.min_std_var, st.var_moments.stddev());
}

// Adaptive confidence factors, clamped into [0.5, 2.0] and monotone
// non-increasing in the argument (the variance estimate can be negative).
inline double growth_factor(double bias_sq) {
  return 1.5 * std::exp(-std::max(bias_sq, 0.0)) + 0.5;
}

inline double prune_factor(double variance) {
  return 1.5 * std::exp(-std::max(variance, 0.0)) + 0.5;
}

// Raw statistical conditions; warmup/grace/capacity gating lives with the
// controller.
inline bool grow_condition(const NetworkStats& st) {
  const double lhs = st.bias_moments.mean + st.bias_moments.stddev();
  const double rhs =
      st.min_mean_bias + growth_factor(st.bias_sq) * st.min_std_bias;
  return lhs >= rhs;
}

inline bool prune_condition(const NetworkStats& st) {
  const double lhs = st.var_moments.mean + st.var_moments.stddev();
  const double rhs =
      st.min_mean_var + prune_factor(st.variance) * st.min_std_var;
  return lhs >= rhs;
}

// Minima resets tied to structural events.
inline void reset_bias_minima(NetworkStats& st) {
  st.min_mean_bias = st.bias_moments.mean;
  st.min_std_bias = st.bias_moments.stddev();
}

inline void reset_var_minima(NetworkStats& st) {
  st.min_mean_var = st.var_moments.mean;
  st.min_std_var = st.var_moments.stddev();
}

}  // namespace pac
