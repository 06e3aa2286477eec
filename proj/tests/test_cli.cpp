#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "giantmol/cli/commands.hpp"

using namespace giantmol;
using namespace giantmol::cli;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("giantmol_test_" + name);
  fs::remove_all(p);
  return p;
}

RunConfig fig_config(double phi_over_pi, double tau = 0.0) {
  RunConfig rc;
  rc.phi_a_static_over_pi = rc.phi_b_static_over_pi = phi_over_pi;
  rc.tau_a = rc.tau_b = tau;
  rc.resolution = {41, 41};
  return rc;
}

}  // namespace

TEST(FormatDouble, RoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, -6.0, 1e-300, 0.25, 8.0136355115695643}) {
    const std::string s = format_double(v);
    EXPECT_EQ(std::stod(s), v) << s;
  }
  EXPECT_EQ(format_double(-6.0), "-6");
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(std::numeric_limits<double>::quiet_NaN()), "nan");
}

TEST(RunConfig, RoundTripFixedPoint) {
  RunConfig rc = fig_config(0.36, 0.4);
  rc.label = "x";
  rc.chirality = Chirality::IdealChiral;
  rc.coords = AxisMode::BareCoordinates;
  rc.tolerance_critical = 1e-6;
  rc.workers = 3;
  rc.probe = {-1.5, 2.25};
  const std::string once = serialize(rc);
  const RunConfig back = parse(once);
  EXPECT_EQ(serialize(back), once);
  EXPECT_EQ(back.molecule(), rc.molecule());
  EXPECT_EQ(back.workers, 3);
}

TEST(RunConfig, Rejections) {
  EXPECT_THROW(parse(R"({"omega": -1})"), ConfigError);
  EXPECT_THROW(parse(R"({"tau_a": -0.1})"), ConfigError);
  EXPECT_THROW(parse(R"({"resolution_probe": 0})"), ConfigError);
  EXPECT_THROW(parse(R"({"resolution_atoms": -3})"), ConfigError);
  EXPECT_THROW(parse(R"({"n1": 0})"), ConfigError);
  EXPECT_THROW(parse(R"({"bogus": 1})"), ConfigError);
  EXPECT_THROW(parse(R"({"chirality": "left"})"), ConfigError);
  EXPECT_THROW(parse("{not json"), ConfigError);
  EXPECT_THROW(parse("[1, 2]"), ConfigError);
  EXPECT_THROW(parse(R"({"omega": "big"})"), ConfigError);
  EXPECT_THROW(load("/nonexistent/config.json"), ConfigError);
  EXPECT_NO_THROW(parse("{}"));
}

TEST(RunConfig, TauShorthand) {
  const RunConfig rc = parse(R"({"tau": 0.24})");
  EXPECT_EQ(rc.tau_a, 0.24);
  EXPECT_EQ(rc.tau_b, 0.24);
}

TEST(RunConfig, ShippedConfigsLoad) {
  const fs::path dir = fs::path(GIANTMOL_SOURCE_DIR) / "configs";
  int n = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    const RunConfig rc = load(e.path().string());
    EXPECT_EQ(serialize(parse(serialize(rc))), serialize(rc));
    ++n;
  }
  EXPECT_EQ(n, 15);
}

TEST(Spectrum, CsvShapeAndSummary) {
  RunConfig rc = fig_config(0.36);
  rc.coords = AxisMode::TildeCoordinates;
  rc.out_dir = scratch("spectrum").string();
  std::ostringstream log;
  ASSERT_EQ(cmd_spectrum(rc, log), kExitOk);
  const std::string csv = slurp(fs::path(rc.out_dir) / "spectrum.csv");
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "probe_detuning,atomic_detuning,T12,R11,T13,T14,C,regime,gamma1,gamma2,lamb1,lamb2,"
            "phi_a,phi_b");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 41 * 41 + 1);

  const auto j = nlohmann::ordered_json::parse(slurp(fs::path(rc.out_dir) / "spectrum.json"));
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j.begin().key(), "schema_version");
  const double c = j["extrema"]["T13"]["max"]["value"];
  const double coop = static_couplings(rc.molecule()).cooperativity;
  EXPECT_NEAR(c, coop / ((1 + coop) * (1 + coop)), 1e-12);
  EXPECT_EQ(j["extrema"]["T13"]["max"]["probe"], 0.0);
  EXPECT_EQ(j["extrema"]["T13"]["max"]["atoms"], 0.0);
  EXPECT_EQ(j["features"]["T13_peaks"].size(), 1u);
}

TEST(Spectrum, SingleCell) {
  RunConfig rc = fig_config(0.36);
  rc.resolution = {1, 1};
  rc.out_dir = scratch("single").string();
  std::ostringstream log;
  ASSERT_EQ(cmd_spectrum(rc, log), kExitOk);
  const std::string csv = slurp(fs::path(rc.out_dir) / "spectrum.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
}

TEST(Spectrum, StrictPoleExitCode) {
  RunConfig rc;
  rc.n1 = rc.n2 = 2;
  rc.phi_a_static_over_pi = rc.phi_b_static_over_pi = 1.0;
  rc.probe = {-1.0, 1.0};
  rc.atoms = {0.0, 1.0};
  rc.resolution = {3, 2};
  rc.out_dir = scratch("pole").string();
  std::ostringstream log;
  EXPECT_EQ(cmd_spectrum(rc, log), kExitOk);
  const std::string csv = slurp(fs::path(rc.out_dir) / "spectrum.csv");
  EXPECT_NE(csv.find("nan"), std::string::npos);
  rc.strict = true;
  EXPECT_EQ(cmd_spectrum(rc, log), kExitStrictPole);
}

TEST(Spectrum, UnwritableOutputIsIoError) {
  RunConfig rc = fig_config(0.36);
  rc.resolution = {2, 2};
  const fs::path blocker = scratch("blocker");
  { std::ofstream(blocker) << "x"; }
  rc.out_dir = (blocker / "sub").string();
  std::ostringstream log;
  EXPECT_THROW(cmd_spectrum(rc, log), IoError);
}

TEST(Spectrum, ByteIdenticalAcrossWorkers) {
  RunConfig rc = fig_config(0.36, 0.4);
  rc.probe = rc.atoms = {-10, 10};
  rc.resolution = {61, 53};
  std::ostringstream log;
  const fs::path a = scratch("w1"), b = scratch("w4");
  rc.out_dir = a.string();
  cmd_spectrum(rc, log);
  rc.workers = 4;
  rc.out_dir = b.string();
  cmd_spectrum(rc, log);
  for (const char* f : {"spectrum.csv", "spectrum.json"}) EXPECT_EQ(slurp(a / f), slurp(b / f));
}

TEST(PhaseDiagramCmd, WritesBoundary) {
  RunConfig rc = fig_config(0.36, 0.4);
  rc.probe = rc.atoms = {-10, 10};
  rc.out_dir = scratch("pd").string();
  std::ostringstream log;
  ASSERT_EQ(cmd_phase_diagram(rc, log), kExitOk);
  const auto j = nlohmann::json::parse(slurp(fs::path(rc.out_dir) / "phase_diagram.json"));
  EXPECT_FALSE(j["boundary"].empty());
  EXPECT_GT(j["strong_fraction"].get<double>(), 0.0);
  EXPECT_LT(j["strong_fraction"].get<double>(), 1.0);
}

TEST(OptimizeCmd, Fig4Report) {
  RunConfig rc = fig_config(9.0 / 16.0);
  rc.resolution = {121, 121};
  const auto j = optimize_report(rc);
  EXPECT_EQ(j["optimum"].size(), 2u);
  EXPECT_TRUE(j["grid_check"]["consistent"].get<bool>());
  EXPECT_NEAR(j["anticrossing_gap"].get<double>(), 2.0, 0.04);
  rc = fig_config(0.36);
  EXPECT_TRUE(optimize_report(rc)["anticrossing_gap"].is_null());
}

TEST(ResonancesCmd, Fig6Weak) {
  RunConfig rc = fig_config(9.0 / 16.0, 0.24);
  rc.probe = {-6, 6};
  const auto j = resonances_report(rc);
  ASSERT_EQ(j["atom1"].size(), 1u);
  EXPECT_NEAR(j["atom1"][0]["probe"].get<double>(), 1.679, 1e-3);
  EXPECT_EQ(j["atom1"][0]["regime"], "weak");
}

TEST(ValidateCmd, RandomPasses) {
  int code = -1;
  const auto j = validate_report(std::nullopt, {1000, 42}, false, code);
  EXPECT_EQ(code, kExitOk);
  EXPECT_LT(j["result"]["max_probability_deviation"].get<double>(), 1e-10);
}

TEST(ValidateCmd, RandomNeedsSeed) {
  int code = -1;
  EXPECT_THROW(validate_report(std::nullopt, {10, std::nullopt}, false, code), ConfigError);
}

TEST(ValidateCmd, Fig3CentrePartition) {
  RunConfig rc = fig_config(0.8);
  rc.coords = AxisMode::TildeCoordinates;
  int code = -1;
  const auto j = validate_report(rc, {}, false, code);
  EXPECT_EQ(code, kExitOk);
  for (const char* k : {"T12", "R11", "T13", "T14"})
    EXPECT_NEAR(j["centre"][k].get<double>(), 0.25, 1e-12);
}

TEST(ValidateCmd, StrictPoleFails) {
  RunConfig rc;
  rc.n1 = rc.n2 = 2;
  rc.phi_a_static_over_pi = rc.phi_b_static_over_pi = 1.0;
  rc.probe = {1.0, 1.0};
  rc.atoms = {0.0, 0.0};
  rc.resolution = {1, 1};
  int code = -1;
  auto j = validate_report(rc, {}, true, code);
  EXPECT_EQ(code, kExitValidationFailed);
  EXPECT_EQ(j["result"]["failures"][0]["check"], "pole");
  validate_report(rc, {}, false, code);
  EXPECT_EQ(code, kExitOk);
}
