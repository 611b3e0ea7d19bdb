// Closed-loop scenario execution, trace recording, CSV output and the
// per-run / comparison reports.
#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pac/controller.hpp"
#include "pac/metrics.hpp"
#include "pac/pid.hpp"
#include "pac/plant.hpp"
#include "pac/scenario.hpp"
#include "pac/trajectory.hpp"

namespace pac {

enum class ControllerKind { pac, pid };

inline const char* controller_name(ControllerKind k) {
  return k == ControllerKind::pac ? "pac" : "pid";
}

struct RunResult {
  ControllerKind kind = ControllerKind::pac;
  RunTrace trace;
  bool fault = false;
  std::string fault_reason;
  std::array<int, 3> rules_min{1, 1, 1};
  std::array<int, 3> rules_max{1, 1, 1};
  std::array<int, 3> rules_final{1, 1, 1};
  std::array<long, 3> p_resets{};
  std::vector<std::string> events;  // "t=12.34 grow_x" style log
  double rmse_value = 0.0;
  SummaryStats eps_xy;
};

namespace detail {

inline std::array<double, 3> initial_position(const Scenario& sc) {
  if (sc.start_given || sc.trajectory.intercept_lead > 0.0)
    return sc.trajectory.start;
  return reference(sc.trajectory, 0.0);
}

inline std::string format_time(double t) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", t);
  return buf;
}

}  // namespace detail

// Run one controller against its own plant instance on the scenario clock.
inline RunResult run_controller_loop(const Scenario& sc, ControllerKind kind) {
  RunResult res;
  res.kind = kind;
  res.trace.dt = sc.dt;
  const std::size_t steps = sc.step_count();
  res.trace.rows.reserve(steps);

  PlantState plant;
  plant.pos = detail::initial_position(sc);
  if (sc.inner.mode == InnerLoopMode::first_order_lag) plant.vel = {0, 0, 0};

  std::vector<AxisController> pac_axes;
  std::vector<PidController> pid_axes;
  for (int i = 0; i < 3; ++i) {
    const auto& g = sc.gains[static_cast<std::size_t>(i)];
    if (kind == ControllerKind::pac)
      pac_axes.emplace_back(g, sc.pac, sc.dt);
    else
      pid_axes.emplace_back(g, sc.dt);
  }

  static const char* axis_names[3] = {"x", "y", "z"};

  for (std::size_t k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * sc.dt;
    const std::array<double, 3> ref = reference(sc.trajectory, t);

    TraceRow row;
    row.t = t;
    row.ref = ref;
    row.pos = plant.pos;

    std::string event;
    for (std::size_t i = 0; i < 3; ++i) {
      if (kind == ControllerKind::pac) {
        AxisController& ax = pac_axes[i];
        const bool was_faulted = ax.faulted();
        row.cmd[i] = ax.step(ref[i], plant.pos[i]);
        const StepInfo& si = ax.last();
        row.v_us[i] = si.v_us;
        row.v_up[i] = si.v_up;
        row.rules[i] = si.rule_count;
        row.bias[i] = si.bias_sq;
        row.var[i] = si.variance;
        auto add_event = [&](const std::string& tag) {
          if (!event.empty()) event += "|";
          event += tag;
          res.events.push_back("t=" + detail::format_time(t) + " " + tag);
        };
        if (si.event == StepEvent::grow)
          add_event(std::string("grow_") + axis_names[i]);
        else if (si.event == StepEvent::prune)
          add_event(std::string("prune_") + axis_names[i]);
        if (si.p_reset) add_event(std::string("p_reset_") + axis_names[i]);
        if (ax.faulted() && !was_faulted) {
          add_event(std::string("fault_") + axis_names[i]);
          res.fault = true;
          res.fault_reason = "non-finite value in " +
                             std::string(axis_names[i]) + "-axis controller";
        }
        res.rules_min[i] = std::min(res.rules_min[i], row.rules[i]);
        res.rules_max[i] = std::max(res.rules_max[i], row.rules[i]);
        res.rules_final[i] = row.rules[i];
        res.p_resets[i] = ax.p_reset_count();
      } else {
        row.cmd[i] = pid_axes[i].step(ref[i], plant.pos[i]);
        row.v_us[i] = row.cmd[i];
        row.v_up[i] = 0.0;
        row.rules[i] = 0;
        row.bias[i] = 0.0;
        row.var[i] = 0.0;
      }
    }
    row.event = event;
    res.trace.rows.push_back(std::move(row));
    if (res.fault) break;

    plant_step(plant, row.cmd, sc.disturbance, sc.inner, sc.dt);
    if (plant.fault) {
      res.fault = true;
      res.fault_reason = "non-finite command reached the plant";
      break;
    }
  }

  const double skip =
      sc.skip_intercept_in_rmse ? sc.trajectory.intercept_lead : 0.0;
  if (!res.trace.rows.empty()) {
    res.rmse_value = rmse(res.trace, skip);
    res.eps_xy = summarize(euclidean_error(res.trace));
  }
  return res;
}

struct ScenarioOutcome {
  Scenario scenario;
  std::optional<RunResult> pac_run;
  std::optional<RunResult> pid_run;

  bool any_fault() const {
    return (pac_run && pac_run->fault) || (pid_run && pid_run->fault);
  }
};

inline ScenarioOutcome run_scenario(const Scenario& sc) {
  ScenarioOutcome out;
  out.scenario = sc;
  if (sc.controller != ControllerSelection::pid)
    out.pac_run = run_controller_loop(sc, ControllerKind::pac);
  if (sc.controller != ControllerSelection::pac)
    out.pid_run = run_controller_loop(sc, ControllerKind::pid);
  return out;
}

// ---- output -------------------------------------------------------------

namespace detail {

inline void append_g17(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

}  // namespace detail

inline std::string csv_text(const RunTrace& trace) {
  std::string out =
      "t,x_ref,y_ref,z_ref,x,y,z,vx_cmd,vy_cmd,vz_cmd,"
      "v_us_x,v_up_x,v_us_y,v_up_y,v_us_z,v_up_z,"
      "rules_x,rules_y,rules_z,"
      "bias_x,var_x,bias_y,var_y,bias_z,var_z,event\n";
  for (const auto& r : trace.rows) {
    detail::append_g17(out, r.t);
    for (double v : r.ref) {
      out += ',';
      detail::append_g17(out, v);
    }
    for (double v : r.pos) {
      out += ',';
      detail::append_g17(out, v);
    }
    for (double v : r.cmd) {
      out += ',';
      detail::append_g17(out, v);
    }
    for (std::size_t i = 0; i < 3; ++i) {
      out += ',';
      detail::append_g17(out, r.v_us[i]);
      out += ',';
      detail::append_g17(out, r.v_up[i]);
    }
    for (int v : r.rules) out += ',' + std::to_string(v);
    for (std::size_t i = 0; i < 3; ++i) {
      out += ',';
      detail::append_g17(out, r.bias[i]);
      out += ',';
      detail::append_g17(out, r.var[i]);
    }
    out += ',';
    out += r.event;
    out += '\n';
  }
  return out;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

inline nlohmann::json summary_json(const SummaryStats& s) {
  return {{"mean", s.mean}, {"std", s.stddev}, {"min", s.min}, {"q1", s.q1},
          {"median", s.median}, {"q3", s.q3}, {"max", s.max}};
}

inline nlohmann::json run_json(const RunResult& r) {
  nlohmann::json j;
  j["controller"] = controller_name(r.kind);
  j["rmse"] = r.rmse_value;
  j["eps_xy"] = summary_json(r.eps_xy);
  j["fault"] = r.fault;
  if (r.fault) j["fault_reason"] = r.fault_reason;
  if (r.kind == ControllerKind::pac) {
    for (int i = 0; i < 3; ++i) {
      const char* axis = i == 0 ? "x" : i == 1 ? "y" : "z";
      j["rules"][axis] = {{"min", r.rules_min[static_cast<std::size_t>(i)]},
                          {"max", r.rules_max[static_cast<std::size_t>(i)]},
                          {"final", r.rules_final[static_cast<std::size_t>(i)]}};
      j["p_resets"][axis] = r.p_resets[static_cast<std::size_t>(i)];
    }
    j["events"] = r.events;
  }
  return j;
}

inline nlohmann::json report_json(const ScenarioOutcome& out) {
  nlohmann::json j;
  j["scenario"] = out.scenario.name;
  j["dt"] = out.scenario.dt;
  j["duration"] = out.scenario.duration;
  j["skip_intercept_in_rmse"] = out.scenario.skip_intercept_in_rmse;
  if (out.pac_run) j["runs"]["pac"] = run_json(*out.pac_run);
  if (out.pid_run) j["runs"]["pid"] = run_json(*out.pid_run);
  if (out.pac_run && out.pid_run && out.pid_run->rmse_value > 0.0)
    j["rmse_ratio_pac_over_pid"] =
        out.pac_run->rmse_value / out.pid_run->rmse_value;
  return j;
}

inline std::string report_text(const ScenarioOutcome& out) {
  std::string s;
  char buf[256];
  s += "scenario: " + out.scenario.name + "\n";
  std::snprintf(buf, sizeof(buf), "dt: %g s, duration: %g s\n",
                out.scenario.dt, out.scenario.duration);
  s += buf;
  auto describe = [&](const RunResult& r) {
    std::snprintf(buf, sizeof(buf), "[%s] rmse: %.6f m\n",
                  controller_name(r.kind), r.rmse_value);
    s += buf;
    std::snprintf(buf, sizeof(buf),
                  "[%s] eps_xy mean/median/max: %.6f / %.6f / %.6f m\n",
                  controller_name(r.kind), r.eps_xy.mean, r.eps_xy.median,
                  r.eps_xy.max);
    s += buf;
    if (r.kind == ControllerKind::pac) {
      std::snprintf(buf, sizeof(buf),
                    "[pac] rules x/y/z min..max (final): %d..%d (%d) / "
                    "%d..%d (%d) / %d..%d (%d)\n",
                    r.rules_min[0], r.rules_max[0], r.rules_final[0],
                    r.rules_min[1], r.rules_max[1], r.rules_final[1],
                    r.rules_min[2], r.rules_max[2], r.rules_final[2]);
      s += buf;
      std::snprintf(buf, sizeof(buf),
                    "[pac] p resets x/y/z: %ld / %ld / %ld, events: %zu\n",
                    r.p_resets[0], r.p_resets[1], r.p_resets[2],
                    r.events.size());
      s += buf;
    }
    if (r.fault) s += std::string("[") + controller_name(r.kind) +
                      "] FAULT: " + r.fault_reason + "\n";
  };
  if (out.pid_run) describe(*out.pid_run);
  if (out.pac_run) describe(*out.pac_run);
  if (out.pac_run && out.pid_run && out.pid_run->rmse_value > 0.0) {
    std::snprintf(buf, sizeof(buf), "rmse ratio pac/pid: %.4f\n",
                  out.pac_run->rmse_value / out.pid_run->rmse_value);
    s += buf;
  }
  return s;
}

// Writes CSV traces and both report forms; returns written paths.
inline std::vector<std::string> write_outputs(const ScenarioOutcome& out,
                                              const std::string& out_dir) {
  std::vector<std::string> written;
  const std::string base =
      out_dir.empty() ? out.scenario.name : out_dir + "/" + out.scenario.name;
  if (out.pac_run) {
    write_file(base + "_pac.csv", csv_text(out.pac_run->trace));
    written.push_back(base + "_pac.csv");
  }
  if (out.pid_run) {
    write_file(base + "_pid.csv", csv_text(out.pid_run->trace));
    written.push_back(base + "_pid.csv");
  }
  write_file(base + "_report.txt", report_text(out));
  written.push_back(base + "_report.txt");
  write_file(base + "_report.json", report_json(out).dump(2) + "\n");
  written.push_back(base + "_report.json");
  return written;
}

inline nlohmann::json compare_json(const std::vector<ScenarioOutcome>& outs) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& out : outs) {
    nlohmann::json row;
    row["scenario"] = out.scenario.name;
    if (out.pid_run) row["rmse_pid"] = out.pid_run->rmse_value;
    if (out.pac_run) row["rmse_pac"] = out.pac_run->rmse_value;
    if (out.pac_run && out.pid_run && out.pid_run->rmse_value > 0.0)
      row["ratio"] = out.pac_run->rmse_value / out.pid_run->rmse_value;
    if (out.pac_run)
      row["rules_final"] = {out.pac_run->rules_final[0],
                            out.pac_run->rules_final[1],
                            out.pac_run->rules_final[2]};
    row["fault"] = out.any_fault();
    rows.push_back(row);
  }
  return nlohmann::json{{"comparison", rows}};
}

inline std::string compare_text(const std::vector<ScenarioOutcome>& outs) {
  std::string s;
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-28s %10s %10s %8s\n", "scenario",
                "rmse_pid", "rmse_pac", "ratio");
  s += buf;
  for (const auto& out : outs) {
    const double pid_v = out.pid_run ? out.pid_run->rmse_value : 0.0;
    const double pac_v = out.pac_run ? out.pac_run->rmse_value : 0.0;
    if (out.pac_run && out.pid_run && pid_v > 0.0)
      std::snprintf(buf, sizeof(buf), "%-28s %10.4f %10.4f %8.4f\n",
                    out.scenario.name.c_str(), pid_v, pac_v, pac_v / pid_v);
    else if (out.pid_run)
      std::snprintf(buf, sizeof(buf), "%-28s %10.4f %10s %8s\n",
                    out.scenario.name.c_str(), pid_v, "-", "-");
    else
      std::snprintf(buf, sizeof(buf), "%-28s %10s %10.4f %8s\n",
                    out.scenario.name.c_str(), "-", pac_v, "-");
    s += buf;
    if (out.any_fault()) s += "  (fault during run)\n";
  }
  return s;
}

}  // namespace pac
