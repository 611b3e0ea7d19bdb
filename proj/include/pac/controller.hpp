// Per-axis composite controller: saturated sliding surface minus the output
// of the self-evolving hyperplane network.
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "pac/network.hpp"
#include "pac/sliding.hpp"
#include "pac/stats.hpp"

namespace pac {

struct PacConfig {
  double alpha = 1.0;       // membership sharpness
  double p0 = 100.0;        // initial RLS covariance scale
  int r_max = 20;           // rule capacity
  int grace = 20;           // steps after a structural event with checks off
  int warmup = 20;          // samples before the first structural check
  double eps_w = 1e-12;     // zero-weight guard in the distance
  double eps_d = 1e-12;     // zero-distance guard in the membership
  VarianceForm variance_form = VarianceForm::hadamard;
  double integral_clamp = 0.0;  // |∫e| bound, 0 disables
};

enum class StepEvent { none, grow, prune };

// Everything observable about one controller step.
struct StepInfo {
  double e = 0.0;
  double s_s = 0.0;
  double v_us = 0.0;       // saturated surface term
  double v_up = 0.0;       // network term
  double command = 0.0;    // v_us - v_up, unclipped
  StepEvent event = StepEvent::none;
  bool p_reset = false;
  std::size_t winner = 0;
  int rule_count = 1;
  double bias_sq = 0.0;
  double variance = 0.0;
};

// One translational axis. Starts from a single zero rule and evolves its
// rule base online; enters a latched fault state on any non-finite value.
class AxisController {
 public:
  AxisController(const SlidingGains& gains, const PacConfig& cfg, double dt)
      : gains_(gains), cfg_(cfg), dt_(dt),
        steps_since_event_(cfg.grace + 1) {
    rules_.push_back(HyperplaneRule::fresh(cfg_.p0));
  }

  // Returns the velocity command for this axis. The caller owns actuator
  // limits; the command itself is not clipped.
  double step(double x_ref, double x_meas) {
    if (fault_) return 0.0;
    if (!std::isfinite(x_ref) || !std::isfinite(x_meas)) return enter_fault();

    info_ = StepInfo{};

    // 1. tracking error, rectangular integral, backward-difference rate
    const double e = x_ref - x_meas;
    integ_e_ += e * dt_;
    if (cfg_.integral_clamp > 0.0)
      integ_e_ = saturate(integ_e_, cfg_.integral_clamp);
    const double e_dot = first_step_ ? 0.0 : (e - prev_e_) / dt_;
    prev_e_ = e;
    first_step_ = false;

    // 2. regressor
    const ExtendedInput xe = extended_input(e, integ_e_, x_meas);

    // 3. memberships and network output
    std::vector<double> lambda = strengths(x_ref, xe);
    const double v_up = defuzzify(rules_, lambda, xe);

    // 4.-5. surface, saturation, composite command
    const double s_s = sliding_surface(e, integ_e_, e_dot, gains_);
    const double v_us = saturate(s_s, gains_.a_m);
    const double command = v_us - v_up;

    if (!std::isfinite(s_s) || !std::isfinite(v_up) ||
        !std::isfinite(command))
      return enter_fault();

    // 6. network statistics on the measured output
    update_stats(stats_, x_meas, rules_, xe, cfg_.variance_form);
    if (!std::isfinite(stats_.bias_sq) || !std::isfinite(stats_.variance))
      return enter_fault();

    // 7. at most one structural event per step, growth checked first
    ++steps_since_event_;
    bool structural = false;
    if (stats_.n_samples > cfg_.warmup && steps_since_event_ > cfg_.grace) {
      if (static_cast<int>(rules_.size()) < cfg_.r_max &&
          grow_condition(stats_)) {
        grow_rule();
        info_.event = StepEvent::grow;
        structural = true;
      } else if (rules_.size() > 1 && prune_condition(stats_)) {
        prune_rule();
        info_.event = StepEvent::prune;
        structural = true;
      }
    }
    if (structural) {
      steps_since_event_ = 0;
      lambda = strengths(x_ref, xe);
    }

    // 8. winner-only adaptation
    const std::size_t win = winning_rule(rules_, stats_.mu_x);
    const Vec4 lam_xe = scaled(xe.c, lambda[win]);
    const AdaptOutcome ao =
        adapt_winner(rules_[win], lam_xe, s_s, dt_, cfg_.p0);
    if (ao.p_reset) ++p_resets_;
    if (!finite(rules_[win].w)) return enter_fault();

    for (auto& r : rules_) ++r.age;

    info_.e = e;
    info_.s_s = s_s;
    info_.v_us = v_us;
    info_.v_up = v_up;
    info_.command = command;
    info_.p_reset = ao.p_reset;
    info_.winner = win;
    info_.rule_count = static_cast<int>(rules_.size());
    info_.bias_sq = stats_.bias_sq;
    info_.variance = stats_.variance;
    return command;
  }

  const StepInfo& last() const { return info_; }
  const std::vector<HyperplaneRule>& rules() const { return rules_; }
  const NetworkStats& stats() const { return stats_; }
  const SlidingGains& gains() const { return gains_; }
  const PacConfig& config() const { return cfg_; }
  bool faulted() const { return fault_; }
  long p_reset_count() const { return p_resets_; }
  double integral() const { return integ_e_; }

 private:
  std::vector<double> strengths(double x_ref, const ExtendedInput& xe) const {
    std::vector<double> delta(rules_.size());
    double delta_max = 0.0;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      delta[i] = hyperplane_distance(x_ref, rules_[i], xe, cfg_.eps_w);
      delta_max = std::max(delta_max, delta[i]);
    }
    std::vector<double> mu(rules_.size());
    for (std::size_t i = 0; i < rules_.size(); ++i)
      mu[i] = membership(delta[i], delta_max, cfg_.alpha, cfg_.eps_d);
    return firing_strengths(mu);
  }

  void grow_rule() {
    const std::size_t win = winning_rule(rules_, stats_.mu_x);
    HyperplaneRule r = HyperplaneRule::fresh(cfg_.p0);
    r.w = rules_[win].w;
    rules_.push_back(r);
    reset_bias_minima(stats_);
  }

  void prune_rule() {
    const std::size_t victim = least_significant_rule(rules_, stats_.mu_x);
    rules_.erase(rules_.begin() + static_cast<std::ptrdiff_t>(victim));
    reset_var_minima(stats_);
  }

  double enter_fault() {
    fault_ = true;
    info_ = StepInfo{};
    info_.rule_count = static_cast<int>(rules_.size());
    return 0.0;
  }

  SlidingGains gains_;
  PacConfig cfg_;
  double dt_;
  std::vector<HyperplaneRule> rules_;
  NetworkStats stats_;
  StepInfo info_;
  double integ_e_ = 0.0;
  double prev_e_ = 0.0;
  bool first_step_ = true;
  bool fault_ = false;
  long steps_since_event_;  // starts past grace so only real events suppress
  long p_resets_ = 0;
};

}  // namespace pac
