// Scenario configuration: flat key-value text with sections, strict
// validation, and the loader shared by files and built-in presets.
#pragma once

#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pac/controller.hpp"
#include "pac/plant.hpp"
#include "pac/sliding.hpp"
#include "pac/trajectory.hpp"

namespace pac {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ControllerSelection { pac, pid, both };

struct Scenario {
  std::string name;
  double dt = 0.01;
  double duration = 0.0;
  std::uint64_t seed = 0;  // reserved; no stochastic components yet
  ControllerSelection controller = ControllerSelection::both;
  bool skip_intercept_in_rmse = false;
  bool start_given = false;  // initial position from start_* keys vs ref(0)
  TrajectorySpec trajectory;
  DisturbanceSpec disturbance;
  InnerLoopSpec inner;
  std::array<SlidingGains, 3> gains{};  // x, y, z
  PacConfig pac;

  std::size_t step_count() const {
    return static_cast<std::size_t>(std::llround(duration / dt));
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

struct RawConfig {
  // section -> key -> value, plus consumption tracking for strictness
  std::map<std::string, std::map<std::string, std::string>> sections;
  mutable std::map<std::string, std::map<std::string, bool>> used;

  bool has(const std::string& sec, const std::string& key) const {
    auto s = sections.find(sec);
    return s != sections.end() && s->second.count(key) > 0;
  }
  std::string get(const std::string& sec, const std::string& key) const {
    used[sec][key] = true;
    return sections.at(sec).at(key);
  }
};

inline RawConfig parse_raw(const std::string& text) {
  RawConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::string section = "scenario";
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("line " + std::to_string(line_no) +
                          ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw ConfigError("line " + std::to_string(line_no) +
                          ": empty section name");
      cfg.sections[section];
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("line " + std::to_string(line_no) +
                        ": empty key or value");
    if (cfg.sections[section].count(key))
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" +
                        key + "' in [" + section + "]");
    cfg.sections[section][key] = value;
  }
  return cfg;
}

inline double to_double(const std::string& sec, const std::string& key,
                        const std::string& v) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("[" + sec + "] " + key + ": not a number: '" + v + "'");
  }
}

inline long to_long(const std::string& sec, const std::string& key,
                    const std::string& v) {
  try {
    std::size_t pos = 0;
    const long n = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw ConfigError("[" + sec + "] " + key + ": not an integer: '" + v + "'");
  }
}

inline bool to_bool(const std::string& sec, const std::string& key,
                    const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("[" + sec + "] " + key + ": not a boolean: '" + v + "'");
}

class Reader {
 public:
  explicit Reader(const RawConfig& cfg) : cfg_(cfg) {}

  double number(const std::string& sec, const std::string& key,
                double fallback) const {
    if (!cfg_.has(sec, key)) return fallback;
    return to_double(sec, key, cfg_.get(sec, key));
  }
  double required_number(const std::string& sec, const std::string& key) const {
    if (!cfg_.has(sec, key))
      throw ConfigError("[" + sec + "] missing required key '" + key + "'");
    return to_double(sec, key, cfg_.get(sec, key));
  }
  long integer(const std::string& sec, const std::string& key,
               long fallback) const {
    if (!cfg_.has(sec, key)) return fallback;
    return to_long(sec, key, cfg_.get(sec, key));
  }
  bool boolean(const std::string& sec, const std::string& key,
               bool fallback) const {
    if (!cfg_.has(sec, key)) return fallback;
    return to_bool(sec, key, cfg_.get(sec, key));
  }
  std::string text(const std::string& sec, const std::string& key,
                   const std::string& fallback) const {
    if (!cfg_.has(sec, key)) return fallback;
    return cfg_.get(sec, key);
  }
  std::string required_text(const std::string& sec,
                            const std::string& key) const {
    if (!cfg_.has(sec, key))
      throw ConfigError("[" + sec + "] missing required key '" + key + "'");
    return cfg_.get(sec, key);
  }

  // Every parsed key must have been consumed by the schema.
  void reject_unknown() const {
    for (const auto& [sec, keys] : cfg_.sections)
      for (const auto& [key, value] : keys) {
        (void)value;
        if (!cfg_.used[sec][key])
          throw ConfigError("[" + sec + "] unknown key '" + key + "'");
      }
  }

 private:
  const RawConfig& cfg_;
};

inline SlidingGains read_gains(const Reader& r, const std::string& sec) {
  SlidingGains g;
  g.k1 = r.required_number(sec, "k1");
  g.k2 = r.required_number(sec, "k2");
  g.k3 = r.required_number(sec, "k3");
  g.a_m = r.required_number(sec, "a_m");
  return g;
}

}  // namespace detail

inline Scenario parse_scenario(const std::string& text) {
  using detail::Reader;
  const detail::RawConfig raw = detail::parse_raw(text);
  const Reader r(raw);
  Scenario sc;

  sc.name = r.required_text("scenario", "name");
  sc.dt = r.required_number("scenario", "dt");
  sc.duration = r.required_number("scenario", "duration");
  sc.seed = static_cast<std::uint64_t>(r.integer("scenario", "seed", 0));
  sc.skip_intercept_in_rmse =
      r.boolean("scenario", "skip_intercept_in_rmse", false);
  const std::string ctrl = r.text("scenario", "controller", "both");
  if (ctrl == "pac")
    sc.controller = ControllerSelection::pac;
  else if (ctrl == "pid")
    sc.controller = ControllerSelection::pid;
  else if (ctrl == "both")
    sc.controller = ControllerSelection::both;
  else
    throw ConfigError("[scenario] controller must be pac, pid or both");

  // trajectory
  TrajectorySpec& t = sc.trajectory;
  const std::string kind = r.required_text("trajectory", "kind");
  double default_lead = 0.0;
  if (kind == "circle")
    t.kind = TrajectoryKind::circle;
  else if (kind == "eight")
    t.kind = TrajectoryKind::eight;
  else if (kind == "square_alt")
    t.kind = TrajectoryKind::square_alt;
  else if (kind == "hold")
    t.kind = TrajectoryKind::hold;
  else if (kind == "line_intercept") {
    t.kind = TrajectoryKind::circle;  // intercept leg into a circle
    default_lead = 10.0;
  } else
    throw ConfigError("[trajectory] unknown kind '" + kind + "'");
  t.center_x = r.number("trajectory", "center_x", 0.0);
  t.center_y = r.number("trajectory", "center_y", 0.0);
  t.amplitude = r.number("trajectory", "amplitude", 0.0);
  t.amplitude_y = r.number("trajectory", "amplitude_y", 0.0);
  t.period_x = r.number("trajectory", "period_x", 1.0);
  t.period_y = r.number("trajectory", "period_y", t.period_x);
  t.z_hold = r.number("trajectory", "z_hold", 1.0);
  t.square_offset = r.number("trajectory", "square_offset", 0.0);
  t.square_amplitude = r.number("trajectory", "square_amplitude", 0.0);
  t.square_period = r.number("trajectory", "square_period", 21.0);
  t.intercept_lead = r.number("trajectory", "intercept_lead", default_lead);
  sc.start_given = raw.has("trajectory", "start_x") ||
                   raw.has("trajectory", "start_y") ||
                   raw.has("trajectory", "start_z");
  t.start[0] = r.number("trajectory", "start_x", 0.0);
  t.start[1] = r.number("trajectory", "start_y", 0.0);
  t.start[2] = r.number("trajectory", "start_z", 0.0);
  t.duration = sc.duration;

  // disturbance
  DisturbanceSpec& d = sc.disturbance;
  const std::string dkind = r.text("disturbance", "kind", "none");
  if (dkind == "none")
    d.kind = DisturbanceKind::none;
  else if (dkind == "wind")
    d.kind = DisturbanceKind::wind;
  else if (dkind == "proximity")
    d.kind = DisturbanceKind::proximity;
  else
    throw ConfigError("[disturbance] unknown kind '" + dkind + "'");
  d.a_d = r.number("disturbance", "a_d", 0.0);
  d.b_d = r.number("disturbance", "b_d", 0.0);
  d.omega_d = r.number("disturbance", "omega_d", 0.0);
  const std::string axes = r.text("disturbance", "axes", "xy");
  d.axes = {false, false, false};
  for (char c : axes) {
    if (c == 'x')
      d.axes[0] = true;
    else if (c == 'y')
      d.axes[1] = true;
    else if (c == 'z')
      d.axes[2] = true;
    else
      throw ConfigError("[disturbance] axes may only contain x, y, z");
  }
  d.z_floor = r.number("disturbance", "z_floor", 0.0);
  d.z_ceil = r.number("disturbance", "z_ceil", 1.0);
  d.gain_ground = r.number("disturbance", "gain_ground", 0.05);
  d.gain_ceil = r.number("disturbance", "gain_ceil", 0.05);
  d.length_scale = r.number("disturbance", "length_scale", 0.1);

  // inner loop
  const std::string mode = r.text("inner_loop", "mode", "perfect");
  if (mode == "perfect")
    sc.inner.mode = InnerLoopMode::perfect;
  else if (mode == "first_order_lag")
    sc.inner.mode = InnerLoopMode::first_order_lag;
  else
    throw ConfigError("[inner_loop] mode must be perfect or first_order_lag");
  sc.inner.tau = r.number("inner_loop", "tau", 0.1);
  sc.inner.clip = r.number("inner_loop", "clip", 1.0);

  // gains per axis
  sc.gains[0] = detail::read_gains(r, "gains.x");
  sc.gains[1] = detail::read_gains(r, "gains.y");
  sc.gains[2] = detail::read_gains(r, "gains.z");

  // network configuration
  PacConfig& p = sc.pac;
  p.alpha = r.number("pac", "alpha", p.alpha);
  p.p0 = r.number("pac", "p0", p.p0);
  p.r_max = static_cast<int>(r.integer("pac", "r_max", p.r_max));
  p.grace = static_cast<int>(r.integer("pac", "grace", p.grace));
  p.warmup = static_cast<int>(r.integer("pac", "warmup", p.warmup));
  p.integral_clamp = r.number("pac", "integral_clamp", 0.0);
  const std::string vf = r.text("pac", "variance_form", "hadamard");
  if (vf == "hadamard")
    p.variance_form = VarianceForm::hadamard;
  else if (vf == "scalar")
    p.variance_form = VarianceForm::scalar;
  else
    throw ConfigError("[pac] variance_form must be hadamard or scalar");

  r.reject_unknown();

  // validation
  if (sc.name.empty()) throw ConfigError("[scenario] name must not be empty");
  if (!(sc.dt > 0.0)) throw ConfigError("[scenario] dt must be > 0");
  if (!(sc.duration > 0.0))
    throw ConfigError("[scenario] duration must be > 0");
  const double steps = sc.duration / sc.dt;
  if (std::fabs(steps - std::llround(steps)) > 1e-9)
    throw ConfigError("[scenario] duration must be an integer multiple of dt");
  static const char* axis_names[3] = {"x", "y", "z"};
  for (int i = 0; i < 3; ++i) {
    const SlidingGains& g = sc.gains[static_cast<std::size_t>(i)];
    if (!is_hurwitz(g))
      throw ConfigError(std::string("[gains.") + axis_names[i] +
                        "] gain set fails the stability gate (need k1 > 0, "
                        "k2 > 0, k3 >= 0)");
    if (!(g.a_m > 0.0))
      throw ConfigError(std::string("[gains.") + axis_names[i] +
                        "] a_m must be > 0");
  }
  if ((t.kind == TrajectoryKind::circle || t.kind == TrajectoryKind::eight)) {
    if (!(t.period_x > 0.0) || !(t.period_y > 0.0))
      throw ConfigError("[trajectory] periods must be > 0");
  }
  if (t.kind == TrajectoryKind::square_alt && !(t.square_period > 0.0))
    throw ConfigError("[trajectory] square_period must be > 0");
  if (t.intercept_lead < 0.0)
    throw ConfigError("[trajectory] intercept_lead must be >= 0");
  if (d.kind == DisturbanceKind::proximity) {
    if (!(d.length_scale > 0.0))
      throw ConfigError("[disturbance] length_scale must be > 0");
    if (!(d.z_floor < d.z_ceil))
      throw ConfigError("[disturbance] z_floor must be < z_ceil");
  }
  if (sc.inner.mode == InnerLoopMode::first_order_lag && !(sc.inner.tau > 0.0))
    throw ConfigError("[inner_loop] tau must be > 0 in first_order_lag mode");
  if (!(sc.inner.clip > 0.0))
    throw ConfigError("[inner_loop] clip must be > 0");
  if (!(p.alpha > 0.0)) throw ConfigError("[pac] alpha must be > 0");
  if (!(p.p0 > 0.0)) throw ConfigError("[pac] p0 must be > 0");
  if (p.r_max < 1) throw ConfigError("[pac] r_max must be >= 1");
  if (p.grace < 0) throw ConfigError("[pac] grace must be >= 0");
  if (p.warmup < 0) throw ConfigError("[pac] warmup must be >= 0");
  if (p.integral_clamp < 0.0)
    throw ConfigError("[pac] integral_clamp must be >= 0");
  return sc;
}

inline Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace pac
