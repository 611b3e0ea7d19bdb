// Command-line harness: run scenarios, compare controllers, inspect presets.
#include <cstdio>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pac/pac.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

// A config argument is a file path or a built-in preset name.
pac::Scenario resolve_config(const std::string& arg) {
  if (std::filesystem::exists(arg)) return pac::load_scenario_file(arg);
  if (const pac::Preset* p = pac::find_preset(arg))
    return pac::parse_scenario(p->text);
  throw pac::ConfigError("no such file or preset: " + arg);
}

void apply_overrides(pac::Scenario& sc, const std::string& controller,
                     bool skip_intercept) {
  if (controller == "pac")
    sc.controller = pac::ControllerSelection::pac;
  else if (controller == "pid")
    sc.controller = pac::ControllerSelection::pid;
  else if (controller == "both")
    sc.controller = pac::ControllerSelection::both;
  if (skip_intercept) sc.skip_intercept_in_rmse = true;
}

void ensure_out_dir(const std::string& out_dir) {
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"evolving-controller flight scenario harness"};
  app.require_subcommand(1);

  std::string out_dir;
  std::string controller;
  bool skip_intercept = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out-dir", out_dir, "directory for CSV and reports");
    cmd->add_option("--controller", controller,
                    "override controller selection: pac, pid or both")
        ->check(CLI::IsMember({"pac", "pid", "both"}));
    cmd->add_flag("--skip-intercept-in-rmse", skip_intercept,
                  "exclude the intercept leg from RMSE");
  };

  std::string run_config;
  CLI::App* run_cmd = app.add_subcommand("run", "run one scenario");
  run_cmd->add_option("config", run_config, "config file or preset name")
      ->required();
  add_common(run_cmd);

  std::vector<std::string> compare_configs;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "run several scenarios and tabulate");
  compare_cmd
      ->add_option("configs", compare_configs, "config files or preset names")
      ->required()
      ->expected(-1);
  add_common(compare_cmd);

  std::string validate_config;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "parse and validate a config");
  validate_cmd
      ->add_option("config", validate_config, "config file or preset name")
      ->required();

  CLI::App* presets_cmd = app.add_subcommand("presets", "preset utilities");
  presets_cmd->require_subcommand(1);
  CLI::App* presets_list =
      presets_cmd->add_subcommand("list", "list built-in presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (run_cmd->parsed()) {
      pac::Scenario sc = resolve_config(run_config);
      apply_overrides(sc, controller, skip_intercept);
      ensure_out_dir(out_dir);
      const pac::ScenarioOutcome out = pac::run_scenario(sc);
      for (const auto& path : pac::write_outputs(out, out_dir))
        std::printf("wrote %s\n", path.c_str());
      std::fputs(pac::report_text(out).c_str(), stdout);
      return out.any_fault() ? kExitRuntime : kExitOk;
    }
    if (compare_cmd->parsed()) {
      std::vector<pac::Scenario> scenarios;
      std::set<std::string> names;
      for (const auto& arg : compare_configs) {
        pac::Scenario sc = resolve_config(arg);
        apply_overrides(sc, controller, skip_intercept);
        if (!names.insert(sc.name).second)
          throw pac::ConfigError("duplicate scenario name: " + sc.name);
        scenarios.push_back(std::move(sc));
      }
      ensure_out_dir(out_dir);
      std::vector<pac::ScenarioOutcome> outs;
      for (const auto& sc : scenarios) {
        outs.push_back(pac::run_scenario(sc));
        pac::write_outputs(outs.back(), out_dir);
      }
      const std::string base =
          out_dir.empty() ? std::string("compare") : out_dir + "/compare";
      pac::write_file(base + "_report.txt", pac::compare_text(outs));
      pac::write_file(base + "_report.json",
                      pac::compare_json(outs).dump(2) + "\n");
      std::fputs(pac::compare_text(outs).c_str(), stdout);
      for (const auto& out : outs)
        if (out.any_fault()) return kExitRuntime;
      return kExitOk;
    }
    if (validate_cmd->parsed()) {
      const pac::Scenario sc = resolve_config(validate_config);
      std::printf("ok: %s (%zu steps, dt %g)\n", sc.name.c_str(),
                  sc.step_count(), sc.dt);
      return kExitOk;
    }
    if (presets_list->parsed()) {
      for (const auto& p : pac::presets())
        std::printf("%-26s %s\n", p.name.c_str(), p.summary.c_str());
      return kExitOk;
    }
  } catch (const pac::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
  return kExitOk;
}
