#include "pac/scenario.hpp"

#include <gtest/gtest.h>

#include <string>

#include "pac/presets.hpp"

namespace {

using pac::ConfigError;
using pac::ControllerSelection;
using pac::parse_scenario;
using pac::Scenario;

// A complete, valid config exercising only required keys.
std::string minimal_text() {
  return R"([scenario]
name = minimal
dt = 0.01
duration = 2

[trajectory]
kind = hold

[gains.x]
k1 = 0.4
k2 = 0.001
k3 = 0.001
a_m = 1.0

[gains.y]
k1 = 0.4
k2 = 0.001
k3 = 0.001
a_m = 1.0

[gains.z]
k1 = 0.35
k2 = 0.01
k3 = 0.65
a_m = 0.8
)";
}

// Returns the ConfigError message, failing the test if nothing is thrown.
std::string parse_error(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  ADD_FAILURE() << "expected ConfigError, config parsed cleanly";
  return {};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(ScenarioParse, MinimalConfigFillsDocumentedDefaults) {
  const Scenario sc = parse_scenario(minimal_text());
  EXPECT_EQ(sc.name, "minimal");
  EXPECT_DOUBLE_EQ(sc.dt, 0.01);
  EXPECT_DOUBLE_EQ(sc.duration, 2.0);
  EXPECT_EQ(sc.step_count(), 200u);
  EXPECT_EQ(sc.seed, 0u);
  EXPECT_EQ(sc.controller, ControllerSelection::both);
  EXPECT_FALSE(sc.skip_intercept_in_rmse);
  EXPECT_FALSE(sc.start_given);

  EXPECT_EQ(sc.trajectory.kind, pac::TrajectoryKind::hold);
  EXPECT_DOUBLE_EQ(sc.trajectory.z_hold, 1.0);
  EXPECT_DOUBLE_EQ(sc.trajectory.intercept_lead, 0.0);
  EXPECT_DOUBLE_EQ(sc.trajectory.duration, sc.duration);

  EXPECT_EQ(sc.disturbance.kind, pac::DisturbanceKind::none);
  EXPECT_EQ(sc.inner.mode, pac::InnerLoopMode::perfect);
  EXPECT_DOUBLE_EQ(sc.inner.clip, 1.0);

  const pac::PacConfig defaults;
  EXPECT_DOUBLE_EQ(sc.pac.alpha, defaults.alpha);
  EXPECT_DOUBLE_EQ(sc.pac.p0, defaults.p0);
  EXPECT_EQ(sc.pac.r_max, defaults.r_max);
  EXPECT_EQ(sc.pac.grace, defaults.grace);
  EXPECT_EQ(sc.pac.warmup, defaults.warmup);
  EXPECT_DOUBLE_EQ(sc.pac.integral_clamp, 0.0);
  EXPECT_EQ(sc.pac.variance_form, pac::VarianceForm::hadamard);

  EXPECT_DOUBLE_EQ(sc.gains[0].k1, 0.4);
  EXPECT_DOUBLE_EQ(sc.gains[2].k3, 0.65);
  EXPECT_DOUBLE_EQ(sc.gains[2].a_m, 0.8);
}

TEST(ScenarioParse, KeysBeforeAnySectionHeaderBelongToScenario) {
  std::string text = minimal_text();
  const std::string header = "[scenario]\n";
  ASSERT_EQ(text.rfind(header, 0), 0u);
  text.erase(0, header.size());
  const Scenario sc = parse_scenario(text);
  EXPECT_EQ(sc.name, "minimal");
}

TEST(ScenarioParse, CommentsAndBlankLinesAreIgnored) {
  const std::string text = "# leading comment\n\n" + minimal_text() +
                           "\n# trailing comment\n   \n";
  const Scenario sc = parse_scenario(text);
  EXPECT_EQ(sc.name, "minimal");
}

TEST(ScenarioParse, InlineCommentIsStripped) {
  std::string text = minimal_text();
  text += "\n[pac]\nalpha = 2.5  # sharper membership falloff\n";
  const Scenario sc = parse_scenario(text);
  EXPECT_DOUBLE_EQ(sc.pac.alpha, 2.5);
}

TEST(ScenarioParse, PeriodYDefaultsToPeriodX) {
  const std::string text = R"([scenario]
name = circ
dt = 0.01
duration = 1

[trajectory]
kind = circle
amplitude = 2
period_x = 40

[gains.x]
k1 = 1
k2 = 0.1
k3 = 0
a_m = 1

[gains.y]
k1 = 1
k2 = 0.1
k3 = 0
a_m = 1

[gains.z]
k1 = 1
k2 = 0.1
k3 = 0
a_m = 1
)";
  const Scenario sc = parse_scenario(text);
  EXPECT_DOUBLE_EQ(sc.trajectory.period_x, 40.0);
  EXPECT_DOUBLE_EQ(sc.trajectory.period_y, 40.0);
}

TEST(ScenarioParse, LineInterceptMapsToCircleWithTenSecondLead) {
  std::string text = minimal_text();
  const std::string from = "kind = hold";
  text.replace(text.find(from), from.size(),
               "kind = line_intercept\namplitude = 1.5\nperiod_x = 10");
  const Scenario sc = parse_scenario(text);
  EXPECT_EQ(sc.trajectory.kind, pac::TrajectoryKind::circle);
  EXPECT_DOUBLE_EQ(sc.trajectory.intercept_lead, 10.0);
}

TEST(ScenarioParse, ExplicitLeadOverridesLineInterceptDefault) {
  std::string text = minimal_text();
  const std::string from = "kind = hold";
  text.replace(text.find(from), from.size(),
               "kind = line_intercept\namplitude = 1.5\nperiod_x = 10\n"
               "intercept_lead = 4");
  const Scenario sc = parse_scenario(text);
  EXPECT_DOUBLE_EQ(sc.trajectory.intercept_lead, 4.0);
}

TEST(ScenarioParse, StartKeysFlagGivenStartPosition) {
  std::string text = minimal_text();
  const std::string from = "kind = hold";
  text.replace(text.find(from), from.size(), "kind = hold\nstart_z = 0.25");
  const Scenario sc = parse_scenario(text);
  EXPECT_TRUE(sc.start_given);
  EXPECT_DOUBLE_EQ(sc.trajectory.start[0], 0.0);
  EXPECT_DOUBLE_EQ(sc.trajectory.start[2], 0.25);
}

TEST(ScenarioParse, DisturbanceAxesLettersToggleFlags) {
  std::string text = minimal_text();
  text += R"(
[disturbance]
kind = wind
a_d = -0.2
b_d = 0.05
omega_d = 1
axes = xz
)";
  const Scenario sc = parse_scenario(text);
  EXPECT_TRUE(sc.disturbance.axes[0]);
  EXPECT_FALSE(sc.disturbance.axes[1]);
  EXPECT_TRUE(sc.disturbance.axes[2]);
  EXPECT_DOUBLE_EQ(sc.disturbance.a_d, -0.2);
}

TEST(ScenarioParse, ControllerSelectionParses) {
  std::string text = minimal_text();
  text += "\n[scenario]\ncontroller = pid\n";
  // Duplicate [scenario] section reopens it; controller was not set before.
  EXPECT_EQ(parse_scenario(text).controller, ControllerSelection::pid);
}

TEST(ScenarioErrors, MissingGainKeyNamesSectionAndKey) {
  std::string text = minimal_text();
  const std::string from = "[gains.x]\nk1 = 0.4\n";
  text.replace(text.find(from), from.size(), "[gains.x]\n");
  const std::string msg = parse_error(text);
  EXPECT_TRUE(contains(msg, "[gains.x]")) << msg;
  EXPECT_TRUE(contains(msg, "k1")) << msg;
  EXPECT_TRUE(contains(msg, "missing required key")) << msg;
}

TEST(ScenarioErrors, UnknownKeyIsRejected) {
  std::string text = minimal_text();
  text += "\n[pac]\nlearning_rate = 0.5\n";
  const std::string msg = parse_error(text);
  EXPECT_TRUE(contains(msg, "unknown key")) << msg;
  EXPECT_TRUE(contains(msg, "learning_rate")) << msg;
}

TEST(ScenarioErrors, MalformedNumberNamesKey) {
  std::string text = minimal_text();
  const std::string from = "dt = 0.01";
  text.replace(text.find(from), from.size(), "dt = fast");
  const std::string msg = parse_error(text);
  EXPECT_TRUE(contains(msg, "not a number")) << msg;
  EXPECT_TRUE(contains(msg, "dt")) << msg;
}

TEST(ScenarioErrors, TrailingGarbageOnNumberIsRejected) {
  std::string text = minimal_text();
  const std::string from = "duration = 2";
  text.replace(text.find(from), from.size(), "duration = 2s");
  EXPECT_TRUE(contains(parse_error(text), "not a number"));
}

TEST(ScenarioErrors, NonHurwitzGainsNameTheFailingAxis) {
  std::string text = minimal_text();
  const std::string from = "[gains.y]\nk1 = 0.4";
  text.replace(text.find(from), from.size(), "[gains.y]\nk1 = -0.4");
  const std::string msg = parse_error(text);
  EXPECT_TRUE(contains(msg, "[gains.y]")) << msg;
  EXPECT_TRUE(contains(msg, "stability gate")) << msg;
}

TEST(ScenarioErrors, NegativeDerivativeGainFailsStabilityGate) {
  std::string text = minimal_text();
  const std::string from = "k3 = 0.65";
  text.replace(text.find(from), from.size(), "k3 = -0.01");
  const std::string msg = parse_error(text);
  EXPECT_TRUE(contains(msg, "[gains.z]")) << msg;
}

TEST(ScenarioErrors, DurationMustBeIntegerMultipleOfDt) {
  std::string text = minimal_text();
  const std::string from = "duration = 2";
  text.replace(text.find(from), from.size(), "duration = 2.005");
  EXPECT_TRUE(contains(parse_error(text), "integer multiple"));
}

TEST(ScenarioErrors, DuplicateKeyInSectionIsRejected) {
  std::string text = minimal_text();
  const std::string from = "dt = 0.01";
  text.replace(text.find(from), from.size(), "dt = 0.01\ndt = 0.02");
  EXPECT_TRUE(contains(parse_error(text), "duplicate key"));
}

TEST(ScenarioErrors, MissingEqualsSignReportsLineNumber) {
  const std::string msg = parse_error("[scenario]\nname broken\n");
  EXPECT_TRUE(contains(msg, "line 2")) << msg;
  EXPECT_TRUE(contains(msg, "key = value")) << msg;
}

TEST(ScenarioErrors, UnterminatedSectionHeader) {
  EXPECT_TRUE(contains(parse_error("[scenario\nname = x\n"),
                       "unterminated section header"));
}

TEST(ScenarioErrors, UnknownTrajectoryKind) {
  std::string text = minimal_text();
  const std::string from = "kind = hold";
  text.replace(text.find(from), from.size(), "kind = spiral");
  EXPECT_TRUE(contains(parse_error(text), "unknown kind 'spiral'"));
}

TEST(ScenarioErrors, UnknownControllerSelection) {
  std::string text = minimal_text();
  text += "\n[scenario]\ncontroller = fuzzy\n";
  EXPECT_TRUE(contains(parse_error(text), "pac, pid or both"));
}

TEST(ScenarioErrors, BadBooleanIsRejected) {
  std::string text = minimal_text();
  text += "\n[scenario]\nskip_intercept_in_rmse = maybe\n";
  EXPECT_TRUE(contains(parse_error(text), "not a boolean"));
}

TEST(ScenarioErrors, NonPositiveActuatorBoundRejected) {
  std::string text = minimal_text();
  const std::string from = "a_m = 0.8";
  text.replace(text.find(from), from.size(), "a_m = 0");
  const std::string msg = parse_error(text);
  EXPECT_TRUE(contains(msg, "a_m must be > 0")) << msg;
}

TEST(ScenarioErrors, NonPositiveCovarianceSeedRejected) {
  std::string text = minimal_text();
  text += "\n[pac]\np0 = 0\n";
  EXPECT_TRUE(contains(parse_error(text), "p0 must be > 0"));
}

TEST(ScenarioErrors, ProximityNeedsFloorBelowCeiling) {
  std::string text = minimal_text();
  text += R"(
[disturbance]
kind = proximity
z_floor = 1.0
z_ceil = 1.0
)";
  EXPECT_TRUE(contains(parse_error(text), "z_floor must be < z_ceil"));
}

TEST(ScenarioErrors, LagModeNeedsPositiveTimeConstant) {
  std::string text = minimal_text();
  text += "\n[inner_loop]\nmode = first_order_lag\ntau = 0\n";
  EXPECT_TRUE(contains(parse_error(text), "tau must be > 0"));
}

TEST(ScenarioErrors, InvalidDisturbanceAxisLetter) {
  std::string text = minimal_text();
  text += "\n[disturbance]\nkind = wind\naxes = xq\n";
  EXPECT_TRUE(contains(parse_error(text), "axes may only contain x, y, z"));
}

TEST(Presets, TableHasEightEntriesWithUniqueNames) {
  const auto& table = pac::presets();
  ASSERT_EQ(table.size(), 8u);
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = i + 1; j < table.size(); ++j)
      EXPECT_NE(table[i].name, table[j].name);
}

TEST(Presets, EveryPresetParsesAndKeepsItsName) {
  for (const auto& p : pac::presets()) {
    SCOPED_TRACE(p.name);
    Scenario sc;
    ASSERT_NO_THROW(sc = parse_scenario(p.text));
    EXPECT_EQ(sc.name, p.name);
    EXPECT_GT(sc.step_count(), 0u);
    EXPECT_EQ(sc.controller, ControllerSelection::both);
    for (const auto& g : sc.gains) EXPECT_TRUE(pac::is_hurwitz(g));
  }
}

TEST(Presets, WindTiersDifferOnlyInMeanWind) {
  const pac::Preset* low = pac::find_preset("sim_circle_low_wind");
  const pac::Preset* high = pac::find_preset("sim_circle_high_wind");
  ASSERT_NE(low, nullptr);
  ASSERT_NE(high, nullptr);
  const Scenario a = parse_scenario(low->text);
  const Scenario b = parse_scenario(high->text);
  EXPECT_DOUBLE_EQ(a.disturbance.a_d, -0.1);
  EXPECT_DOUBLE_EQ(b.disturbance.a_d, -0.5);
  EXPECT_DOUBLE_EQ(a.disturbance.b_d, b.disturbance.b_d);
  EXPECT_DOUBLE_EQ(a.trajectory.amplitude, b.trajectory.amplitude);
  EXPECT_DOUBLE_EQ(a.duration, b.duration);
}

TEST(Presets, InterceptPresetsStartAtRestAwayFromThePath) {
  const pac::Preset* p = pac::find_preset("exp_circle");
  ASSERT_NE(p, nullptr);
  const Scenario sc = parse_scenario(p->text);
  EXPECT_TRUE(sc.start_given);
  EXPECT_DOUBLE_EQ(sc.trajectory.intercept_lead, 10.0);
  EXPECT_DOUBLE_EQ(sc.trajectory.start[2], 1.0);
}

TEST(Presets, AltitudePresetUsesProximityDisturbance) {
  const pac::Preset* p = pac::find_preset("exp_altitude_proximity");
  ASSERT_NE(p, nullptr);
  const Scenario sc = parse_scenario(p->text);
  EXPECT_EQ(sc.disturbance.kind, pac::DisturbanceKind::proximity);
  EXPECT_EQ(sc.trajectory.kind, pac::TrajectoryKind::square_alt);
  EXPECT_DOUBLE_EQ(sc.trajectory.square_offset, 0.55);
  EXPECT_DOUBLE_EQ(sc.trajectory.square_amplitude, 0.6);
  EXPECT_DOUBLE_EQ(sc.trajectory.square_period, 21.0);
  // No start override: the run begins on the first (high) reference sample.
  EXPECT_FALSE(sc.start_given);
  EXPECT_EQ(sc.pac.r_max, 1);
}

TEST(Presets, LookupMissesReturnNull) {
  EXPECT_EQ(pac::find_preset("no_such_preset"), nullptr);
}

}  // namespace
