// giantmol: spectra, phase diagrams, resonances, optimal transfer and
// self-validation for two coupled giant atoms on separate waveguides.

#include <cstdint>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include "CLI11.hpp"

#include "giantmol/cli/commands.hpp"

namespace gm = giantmol;
namespace gc = giantmol::cli;

namespace {

struct Flags {
  std::string config;
  std::optional<std::string> out;
  std::optional<std::string> resolution;
  std::optional<std::string> coords;
  bool chiral = false;
  bool strict = false;
  std::optional<int> workers;
  std::optional<long long> random;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance_critical;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "run configuration (JSON)");
  sub->add_option("--out", f.out, "output directory");
  sub->add_option("--resolution", f.resolution, "grid resolution NxM (probe x atoms)");
  sub->add_option("--coords", f.coords, "axis convention")->check(CLI::IsMember({"tilde", "bare"}));
  sub->add_flag("--chiral", f.chiral, "ideal chiral coupling");
  sub->add_flag("--strict", f.strict, "treat poles as errors");
  sub->add_option("--workers", f.workers, "worker threads");
  sub->add_option("--tolerance-critical", f.tolerance_critical, "half-width of the C = 1 band");
}

gc::RunConfig apply(gc::RunConfig rc, const Flags& f) {
  if (f.out) rc.out_dir = *f.out;
  if (f.resolution) {
    static const std::regex re(R"(^\s*(\d+)\s*[xX]\s*(\d+)\s*$)");
    std::smatch m;
    if (!std::regex_match(*f.resolution, m, re))
      throw gm::ConfigError("--resolution must look like NxM");
    try {
      rc.resolution = {std::stoi(m[1].str()), std::stoi(m[2].str())};
    } catch (const std::exception&) {
      throw gm::ConfigError("--resolution out of range");
    }
  }
  if (f.coords) rc.coords = *f.coords == "tilde" ? gm::AxisMode::TildeCoordinates
                                                 : gm::AxisMode::BareCoordinates;
  if (f.chiral) rc.chirality = gm::Chirality::IdealChiral;
  if (f.strict) rc.strict = true;
  if (f.workers) rc.workers = *f.workers;
  if (f.tolerance_critical) rc.tolerance_critical = *f.tolerance_critical;
  gc::check(rc);
  return rc;
}

gc::RunConfig load_required(const Flags& f) {
  if (f.config.empty()) throw gm::ConfigError("--config is required");
  return apply(gc::load(f.config), f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"giantmol: scattering of a single photon off a giant molecule"};
  app.require_subcommand(1);
  Flags f;
  CLI::App* spectrum = app.add_subcommand("spectrum", "T/R maps over (probe, atomic) detuning");
  CLI::App* phase = app.add_subcommand("phase-diagram", "cooperativity map and C = 1 boundary");
  CLI::App* optimize = app.add_subcommand("optimize", "optimal transfer points and anti-crossing gap");
  CLI::App* resonances = app.add_subcommand("resonances", "self-consistent resonance roots");
  CLI::App* validate = app.add_subcommand("validate", "closed form vs brute-force oracle");
  for (CLI::App* s : {spectrum, phase, optimize, resonances, validate}) add_common(s, f);
  validate->add_option("--random", f.random, "number of random configurations");
  validate->add_option("--seed", f.seed, "seed for --random");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? gc::kExitOk : gc::kExitConfigError;
  }

  try {
    if (spectrum->parsed()) return gc::cmd_spectrum(load_required(f), std::cerr);
    if (phase->parsed()) return gc::cmd_phase_diagram(load_required(f), std::cerr);
    if (optimize->parsed()) return gc::cmd_optimize(load_required(f), std::cerr);
    if (resonances->parsed()) return gc::cmd_resonances(load_required(f), std::cerr);

    std::optional<gc::RunConfig> rc;
    if (!f.config.empty()) rc = load_required(f);
    const gc::ValidateOptions vo{f.random, f.seed};
    const std::string out = f.out ? *f.out : (rc ? rc->out_dir : std::string("out"));
    const bool strict = f.strict || (rc && rc->strict);
    return gc::cmd_validate(rc, vo, strict, out, std::cerr);
  } catch (const gm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return gc::kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return gc::kExitConfigError;
  } catch (const gc::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return gc::kExitIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gc::kExitIoError;
  }
}
