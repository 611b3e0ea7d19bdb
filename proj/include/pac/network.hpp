// Self-evolving hyperplane fuzzy network: rule geometry, memberships,
// defuzzification and the winner-only recursive least-squares adaptation.
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "pac/linalg.hpp"

namespace pac {

// Regressor [1, e, ∫e, x]. Component 0 is always exactly 1.
struct ExtendedInput {
  Vec4 c{1.0, 0.0, 0.0, 0.0};
};

inline ExtendedInput extended_input(double e, double integ_e, double x) {
  return ExtendedInput{{1.0, e, integ_e, x}};
}

// One fuzzy rule: a hyperplane in regressor space with its own RLS state.
struct HyperplaneRule {
  Vec4 w{};        // hyperplane / consequent weights
  Mat4 p{};        // RLS covariance, symmetric positive definite
  long age = 0;    // samples since creation

  static HyperplaneRule fresh(double p0) {
    HyperplaneRule r;
    r.p = scaled_identity(p0);
    return r;
  }
};

// Normalized point-to-hyperplane distance; eps_w guards the zero-weight rule.
inline double hyperplane_distance(double x_r, const HyperplaneRule& rule,
                                  const ExtendedInput& xe, double eps_w) {
  const double num = std::fabs(x_r - dot(rule.w, xe.c));
  return num / std::sqrt(dot(rule.w, rule.w) + eps_w);
}

// mu = exp(-alpha * delta / delta_max); eps_d guards delta_max == 0.
inline double membership(double delta, double delta_max, double alpha,
                         double eps_d) {
  return std::exp(-alpha * delta / std::max(delta_max, eps_d));
}

// Normalize memberships into firing strengths summing to one.
inline std::vector<double> firing_strengths(const std::vector<double>& mu) {
  double total = 0.0;
  for (double m : mu) total += m;
  std::vector<double> lambda(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) lambda[i] = mu[i] / total;
  return lambda;
}

// Network output: sum_i w_i · (lambda_i * xe).
inline double defuzzify(const std::vector<HyperplaneRule>& rules,
                        const std::vector<double>& lambda,
                        const ExtendedInput& xe) {
  double out = 0.0;
  for (std::size_t i = 0; i < rules.size(); ++i)
    out += lambda[i] * dot(rules[i].w, xe.c);
  return out;
}

// Contribution of a rule at the running mean input.
inline double rule_significance(const HyperplaneRule& rule, const Vec4& mu_x) {
  return std::fabs(dot(rule.w, mu_x));
}

// Highest significance wins; ties resolve to the lowest index.
inline std::size_t winning_rule(const std::vector<HyperplaneRule>& rules,
                                const Vec4& mu_x) {
  std::size_t best = 0;
  double best_rs = rule_significance(rules[0], mu_x);
  for (std::size_t i = 1; i < rules.size(); ++i) {
    const double rs = rule_significance(rules[i], mu_x);
    if (rs > best_rs) {
      best = i;
      best_rs = rs;
    }
  }
  return best;
}

inline std::size_t least_significant_rule(
    const std::vector<HyperplaneRule>& rules, const Vec4& mu_x) {
  std::size_t worst = 0;
  double worst_rs = rule_significance(rules[0], mu_x);
  for (std::size_t i = 1; i < rules.size(); ++i) {
    const double rs = rule_significance(rules[i], mu_x);
    if (rs < worst_rs) {
      worst = i;
      worst_rs = rs;
    }
  }
  return worst;
}

// One step of the covariance flow Ṗ = -P Λ Λᵀ P followed by the weight flow
// Ẇ = -(P Λ s)ᵀ. The covariance step uses the standard recursive
// least-squares form P ← P − dt·(PΛ)(PΛ)ᵀ/(1 + dt·ΛᵀPΛ), which tracks the
// exact solution of the flow: by Sherman–Morrison the information matrix P⁻¹
// grows by exactly dt·ΛΛᵀ, so positive definiteness is preserved for every
// step size (a plain forward-Euler step instead diverges once dt·ΛᵀPΛ ≥ 1).
// A non-positive diagonal can therefore only arise from floating-point
// pathology (overflow/NaN in the regressor); it triggers a reset to p0·I,
// reported through the return value so callers can count it.
struct AdaptOutcome {
  bool p_reset = false;
};

inline AdaptOutcome adapt_winner(HyperplaneRule& rule, const Vec4& lambda_xe,
                                 double s_s, double dt, double p0) {
  AdaptOutcome out;
  const Vec4 q = mat_vec(rule.p, lambda_xe);   // P Λ (P symmetric)
  const double c = dt * dot(lambda_xe, q);     // dt·ΛᵀPΛ, ≥ 0 for PD P
  Mat4 candidate = rule.p;
  sub_scaled_outer(candidate, q, dt / (1.0 + c));
  symmetrize(candidate);
  bool ok = c >= 0.0;  // NaN or an indefinite P fails here
  for (std::size_t i = 0; i < 4; ++i)
    if (!(candidate[i][i] > 0.0)) ok = false;
  if (ok) {
    rule.p = candidate;
  } else {
    rule.p = scaled_identity(p0);
    out.p_reset = true;
  }
  const Vec4 step = mat_vec(rule.p, lambda_xe);
  for (std::size_t i = 0; i < 4; ++i) rule.w[i] -= dt * s_s * step[i];
  return out;
}

}  // namespace pac
