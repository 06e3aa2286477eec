#pragma once

// Subcommand implementations behind the giantmol executable. Each command
// computes everything first and then writes its files from a single thread,
// in grid order, so outputs do not depend on the worker count.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <system_error>
#include <vector>

#include "json.hpp"

#include "giantmol/analysis.hpp"
#include "giantmol/cli/run_config.hpp"
#include "giantmol/core_model.hpp"
#include "giantmol/errors.hpp"
#include "giantmol/oracle.hpp"
#include "giantmol/scattering.hpp"

namespace giantmol::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kArtifactVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitValidationFailed = 1,
  kExitConfigError = 2,
  kExitIoError = 3,
  kExitStrictPole = 4,
};

class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

using ojson = nlohmann::ordered_json;

// 17 significant digits, locale independent: "nan" and "inf" for non-finite.
inline std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, r.ptr);
}

inline ojson number_or_null(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw IoError("cannot create directory '" + path.parent_path().string() + "'");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

inline ojson header(const char* command, const RunConfig& rc) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["artifact_version"] = kArtifactVersion;
  j["command"] = command;
  j["config"] = to_json(rc, false);
  return j;
}

// ---------------------------------------------------------------------------
// spectrum

inline std::string spectrum_csv(const SpectrumGrid& g) {
  std::string out =
      "probe_detuning,atomic_detuning,T12,R11,T13,T14,C,regime,gamma1,gamma2,lamb1,lamb2,"
      "phi_a,phi_b\n";
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t ia = 0; ia < g.axis_atoms.size(); ++ia) {
    for (std::size_t ip = 0; ip < g.axis_probe.size(); ++ip) {
      const GridCell& c = g.at(ip, ia);
      const PortProbabilities p =
          c.result ? c.result->probs : PortProbabilities{nan, nan, nan, nan};
      const EffectiveCouplings& e = c.couplings;
      for (double v : {g.axis_probe[ip], g.axis_atoms[ia], p.t12, p.r11, p.t13, p.t14,
                       e.cooperativity}) {
        out += format_double(v);
        out += ',';
      }
      out += to_string(c.regime);
      for (double v : {e.gamma1, e.gamma2, e.lamb1, e.lamb2, e.phi_a, e.phi_b}) {
        out += ',';
        out += format_double(v);
      }
      out += '\n';
    }
  }
  return out;
}

inline ojson features_json(const std::vector<Feature>& fs) {
  ojson arr = ojson::array();
  for (const Feature& f : fs)
    arr.push_back({{"location", f.location}, {"value", f.value}, {"fwhm", f.fwhm},
                   {"prominence", f.prominence}});
  return arr;
}

inline ojson spectrum_summary(const RunConfig& rc, const SpectrumGrid& g) {
  ojson j = header("spectrum", rc);
  j["grid"] = {{"coords", std::string(to_string(g.mode))},
               {"n_probe", g.axis_probe.size()},
               {"n_atoms", g.axis_atoms.size()},
               {"cells", g.cells.size()},
               {"pole_cells", g.pole_count()}};

  struct Port {
    const char* name;
    double PortProbabilities::*field;
  };
  const Port ports[] = {{"T12", &PortProbabilities::t12},
                        {"R11", &PortProbabilities::r11},
                        {"T13", &PortProbabilities::t13},
                        {"T14", &PortProbabilities::t14}};
  ojson extrema;
  for (const Port& port : ports) {
    std::optional<std::size_t> lo, hi;
    for (std::size_t k = 0; k < g.cells.size(); ++k) {
      if (!g.cells[k].result) continue;
      const double v = g.cells[k].result->probs.*port.field;
      if (!lo || v < g.cells[*lo].result->probs.*port.field) lo = k;
      if (!hi || v > g.cells[*hi].result->probs.*port.field) hi = k;
    }
    auto entry = [&](std::optional<std::size_t> k) -> ojson {
      if (!k) return nullptr;
      const std::size_t np = g.axis_probe.size();
      return {{"value", g.cells[*k].result->probs.*port.field},
              {"probe", g.axis_probe[*k % np]},
              {"atoms", g.axis_atoms[*k / np]}};
    };
    extrema[port.name] = {{"max", entry(hi)}, {"min", entry(lo)}};
  }
  j["extrema"] = extrema;

  ojson counts;
  for (Regime r : {Regime::Weak, Regime::Critical, Regime::Strong, Regime::Decoupled}) {
    std::size_t n = 0;
    for (const GridCell& c : g.cells) n += c.regime == r ? 1 : 0;
    counts[std::string(to_string(r))] = n;
  }
  j["regime_counts"] = counts;

  // 1-D cut along the probe axis through the resonant intersection row
  ojson cut;
  if (g.axis_probe.size() >= 5) {
    const MoleculeConfig m = rc.molecule();
    const double target =
        g.mode == AxisMode::TildeCoordinates
            ? 0.0
            : static_couplings(m).lamb1 - static_couplings(m).lamb2;
    std::size_t ia = 0;
    for (std::size_t k = 1; k < g.axis_atoms.size(); ++k)
      if (std::abs(g.axis_atoms[k] - target) < std::abs(g.axis_atoms[ia] - target)) ia = k;
    cut["atoms"] = g.axis_atoms[ia];
    std::vector<double> x, t12, r11, t13, t14;
    for (std::size_t ip = 0; ip < g.axis_probe.size(); ++ip) {
      const GridCell& c = g.at(ip, ia);
      if (!c.result) continue;
      x.push_back(g.axis_probe[ip]);
      t12.push_back(c.result->probs.t12);
      r11.push_back(c.result->probs.r11);
      t13.push_back(c.result->probs.t13);
      t14.push_back(c.result->probs.t14);
    }
    if (x.size() >= 5) {
      FeatureOptions fo;
      fo.skip_unresolved = true;
      cut["T12_dips"] = features_json(find_features_1d(x, t12, fo).dips);
      cut["R11_peaks"] = features_json(find_features_1d(x, r11, fo).peaks);
      cut["T13_peaks"] = features_json(find_features_1d(x, t13, fo).peaks);
      cut["T14_peaks"] = features_json(find_features_1d(x, t14, fo).peaks);
    }
  }
  j["features"] = cut.is_null() ? ojson::object() : cut;
  return j;
}

inline int cmd_spectrum(const RunConfig& rc, std::ostream& log) {
  const MoleculeConfig m = rc.molecule();
  if (rc.coords == AxisMode::TildeCoordinates && !m.markovian())
    throw ConfigError("coords = tilde requires tau_a = tau_b = 0");
  const SpectrumGrid g = sweep(m, rc.probe, rc.atoms, rc.resolution, rc.coords, rc.sweep_options());
  const std::filesystem::path dir(rc.out_dir);
  write_file(dir / "spectrum.csv", spectrum_csv(g));
  write_file(dir / "spectrum.json", spectrum_summary(rc, g).dump(2) + "\n");
  log << "spectrum: " << g.cells.size() << " cells, " << g.pole_count() << " poles -> "
      << (dir / "spectrum.csv").string() << "\n";
  return rc.strict && g.pole_count() > 0 ? kExitStrictPole : kExitOk;
}

// ---------------------------------------------------------------------------
// phase-diagram

inline std::string phase_diagram_csv(const PhaseDiagram& pd) {
  std::string out =
      "probe_detuning,atomic_detuning,C,regime,gamma1,gamma2,lamb1,lamb2,phi_a,phi_b\n";
  for (std::size_t ia = 0; ia < pd.axis_atoms.size(); ++ia) {
    for (std::size_t ip = 0; ip < pd.axis_probe.size(); ++ip) {
      const std::size_t k = pd.index(ip, ia);
      const EffectiveCouplings& e = pd.couplings[k];
      out += format_double(pd.axis_probe[ip]) + ',' + format_double(pd.axis_atoms[ia]) + ',' +
             format_double(e.cooperativity) + ',' + std::string(to_string(pd.regimes[k]));
      for (double v : {e.gamma1, e.gamma2, e.lamb1, e.lamb2, e.phi_a, e.phi_b}) {
        out += ',';
        out += format_double(v);
      }
      out += '\n';
    }
  }
  return out;
}

inline ojson phase_diagram_summary(const RunConfig& rc, const PhaseDiagram& pd) {
  ojson j = header("phase-diagram", rc);
  j["grid"] = {{"coords", "bare"},
               {"n_probe", pd.axis_probe.size()},
               {"n_atoms", pd.axis_atoms.size()}};
  ojson counts;
  for (Regime r : {Regime::Weak, Regime::Critical, Regime::Strong, Regime::Decoupled})
    counts[std::string(to_string(r))] =
        std::count(pd.regimes.begin(), pd.regimes.end(), r);
  j["regime_counts"] = counts;
  j["strong_fraction"] = pd.strong_fraction();
  double cmin = std::numeric_limits<double>::infinity();
  double cmax = -cmin;
  for (double c : pd.cooperativity)
    if (std::isfinite(c)) {
      cmin = std::min(cmin, c);
      cmax = std::max(cmax, c);
    }
  j["cooperativity_range"] = {number_or_null(cmin), number_or_null(cmax)};
  ojson lines = ojson::array();
  for (const Polyline& pl : pd.boundary) {
    ojson pts = ojson::array();
    for (const Point2& p : pl) pts.push_back({p.probe, p.atoms});
    lines.push_back(pts);
  }
  j["boundary"] = lines;
  return j;
}

inline int cmd_phase_diagram(const RunConfig& rc, std::ostream& log) {
  const PhaseDiagram pd =
      phase_diagram(rc.molecule(), rc.probe, rc.atoms, rc.resolution, rc.sweep_options());
  const std::filesystem::path dir(rc.out_dir);
  write_file(dir / "phase_diagram.csv", phase_diagram_csv(pd));
  write_file(dir / "phase_diagram.json", phase_diagram_summary(rc, pd).dump(2) + "\n");
  log << "phase-diagram: strong fraction " << pd.strong_fraction() << ", "
      << pd.boundary.size() << " boundary polylines\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// optimize

inline ojson optimize_report(const RunConfig& rc) {
  const MoleculeConfig m = rc.molecule();
  const EffectiveCouplings ec = static_couplings(m);
  ojson j = header("optimize", rc);
  j["port"] = m.chirality == Chirality::IdealChiral ? "T14" : "T13";

  const std::vector<OptimumPoint> pts = optimal_transfer(m);
  ojson arr = ojson::array();
  for (const OptimumPoint& p : pts)
    arr.push_back({{"probe", p.bare.delta_probe},
                   {"atoms", p.bare.delta_atoms},
                   {"tilde_probe", p.tilde.probe},
                   {"tilde_atoms", p.tilde.atoms},
                   {"predicted_transfer", p.transfer},
                   {"analytic", p.analytic}});
  j["optimum"] = arr;

  // independent grid check of the reported optimum
  SpectrumGrid g;
  if (m.markovian()) {
    const double w = 3.0 * (ec.gamma1 + ec.gamma2) *
                     std::sqrt(std::max(1.0, std::isfinite(ec.cooperativity) ? ec.cooperativity : 1.0));
    const AxisRange win{-w, w};
    g = sweep(m, win, win, rc.resolution, AxisMode::TildeCoordinates, rc.sweep_options());
  } else {
    g = sweep(m, rc.probe, rc.atoms, rc.resolution, AxisMode::BareCoordinates, rc.sweep_options());
  }
  double best = -1.0;
  std::size_t arg = 0;
  for (std::size_t k = 0; k < g.cells.size(); ++k) {
    if (!g.cells[k].result) continue;
    const double v = transfer_probability(m, *g.cells[k].result);
    if (v > best) {
      best = v;
      arg = k;
    }
  }
  const std::size_t np = g.axis_probe.size();
  double predicted = 0.0;
  for (const OptimumPoint& p : pts) predicted = std::max(predicted, p.transfer);
  j["grid_check"] = {{"coords", std::string(to_string(g.mode))},
                     {"n_probe", g.axis_probe.size()},
                     {"n_atoms", g.axis_atoms.size()},
                     {"grid_max", best},
                     {"probe", g.axis_probe[arg % np]},
                     {"atoms", g.axis_atoms[arg / np]},
                     {"predicted_max", predicted},
                     {"consistent", best <= predicted + 1e-6}};

  try {
    j["anticrossing_gap"] = anticrossing_gap(m);
    j["gap_status"] = "resolved";
  } catch (const std::runtime_error&) {
    // GapUnresolved, or a pole on the trace
    j["anticrossing_gap"] = nullptr;
    j["gap_status"] = "unresolved";
  }
  return j;
}

inline int cmd_optimize(const RunConfig& rc, std::ostream& log) {
  const ojson j = optimize_report(rc);
  const std::filesystem::path dir(rc.out_dir);
  write_file(dir / "optimize.json", j.dump(2) + "\n");
  log << "optimize: " << j["optimum"].size() << " optimum point(s), grid check "
      << (j["grid_check"]["consistent"].get<bool>() ? "consistent" : "INCONSISTENT") << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// resonances

inline ojson resonances_report(const RunConfig& rc) {
  const MoleculeConfig m = rc.molecule();
  const Resonances r = locate_resonances(m, rc.resonance_delta_atoms, rc.probe);
  ojson j = header("resonances", rc);
  j["delta_atoms"] = rc.resonance_delta_atoms;
  j["window"] = {rc.probe.min, rc.probe.max};
  auto roots = [&](const std::vector<double>& xs) {
    ojson arr = ojson::array();
    for (double x : xs) {
      const EffectiveCouplings ec = effective_couplings(m, {x, rc.resonance_delta_atoms});
      arr.push_back({{"probe", x},
                     {"cooperativity", number_or_null(ec.cooperativity)},
                     {"regime", std::string(to_string(classify_regime(ec, rc.tolerance_critical)))}});
    }
    return arr;
  };
  j["atom1"] = roots(r.atom1);
  j["atom2"] = roots(r.atom2);
  return j;
}

inline int cmd_resonances(const RunConfig& rc, std::ostream& log) {
  const ojson j = resonances_report(rc);
  const std::filesystem::path dir(rc.out_dir);
  write_file(dir / "resonances.json", j.dump(2) + "\n");
  log << "resonances: " << j["atom1"].size() << " (atom 1), " << j["atom2"].size()
      << " (atom 2)\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// validate

struct ValidateOptions {
  std::optional<long long> random;  // number of random draws
  std::optional<std::uint64_t> seed;
};

struct ValidationTolerances {
  double probability = 1e-10;  // closed form vs oracle, per port
  double conservation = 1e-12;  // closed form
  double oracle_flux = 1e-10;
  double amplitude_rel = 1e-8;  // gauge-free complex amplitude checks
  double amplitude_floor = 1e-6;
};

struct ValidationPoint {
  MoleculeConfig molecule;
  Detunings det;
};

struct ValidationReport {
  std::size_t points = 0;
  std::size_t poles = 0;
  double max_probability_deviation = 0.0;
  double max_conservation_error = 0.0;
  double max_oracle_flux_error = 0.0;
  double max_amplitude_deviation = 0.0;
  ojson failures = ojson::array();

  bool passed() const { return failures.empty(); }
};

// Random configurations spanning Markovian and non-Markovian regimes.
inline std::vector<ValidationPoint> random_points(long long n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> points(1, 6);
  std::vector<ValidationPoint> out;
  out.reserve(static_cast<std::size_t>(std::max(0LL, n)));
  for (long long k = 0; k < n; ++k) {
    ValidationPoint p;
    p.molecule.n1 = points(rng);
    p.molecule.n2 = points(rng);
    p.molecule.omega = 3.0 * unit(rng);
    p.molecule.phi_a_static = 2.0 * std::numbers::pi * unit(rng);
    p.molecule.phi_b_static = 2.0 * std::numbers::pi * unit(rng);
    const bool delayed = unit(rng) < 0.5;
    p.molecule.tau_a = delayed ? 0.5 * unit(rng) : 0.0;
    p.molecule.tau_b = delayed ? 0.5 * unit(rng) : 0.0;
    p.molecule.chirality = unit(rng) < 0.25 ? Chirality::IdealChiral : Chirality::Symmetric;
    p.det = {20.0 * unit(rng) - 10.0, 20.0 * unit(rng) - 10.0};
    out.push_back(p);
  }
  return out;
}

inline ojson point_json(const ValidationPoint& p) {
  return {{"n1", p.molecule.n1},
          {"n2", p.molecule.n2},
          {"omega", p.molecule.omega},
          {"phi_a_static", p.molecule.phi_a_static},
          {"phi_b_static", p.molecule.phi_b_static},
          {"tau_a", p.molecule.tau_a},
          {"tau_b", p.molecule.tau_b},
          {"chirality", std::string(to_string(p.molecule.chirality))},
          {"probe", p.det.delta_probe},
          {"atoms", p.det.delta_atoms}};
}

inline ValidationReport validate_points(const std::vector<ValidationPoint>& pts, bool strict,
                                        const ValidationTolerances& tol = {}) {
  ValidationReport rep;
  auto fail = [&](const ValidationPoint& p, const std::string& check, double value) {
    if (rep.failures.size() < 100)
      rep.failures.push_back({{"check", check}, {"value", number_or_null(value)}, {"point", point_json(p)}});
    else if (rep.failures.size() == 100)
      rep.failures.push_back({{"check", "truncated"}, {"value", nullptr}, {"point", nullptr}});
  };
  auto rel = [&](cdouble a, cdouble b) {
    return std::abs(b) > tol.amplitude_floor ? std::abs(a - b) / std::abs(b) : 0.0;
  };

  for (const ValidationPoint& p : pts) {
    ++rep.points;
    ScatteringResult cf;
    OracleSolution os;
    try {
      cf = scatter(p.molecule, p.det);
      os = solve_exact(p.molecule, p.det);
    } catch (const PoleError&) {
      ++rep.poles;
      if (strict) fail(p, "pole", std::numeric_limits<double>::quiet_NaN());
      continue;
    } catch (const SingularSystem&) {
      ++rep.poles;
      if (strict) fail(p, "singular_oracle", std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    const PortProbabilities po = os.probabilities();
    const PortProbabilities& pc = cf.probs;
    const double dev = std::max({std::abs(po.t12 - pc.t12), std::abs(po.r11 - pc.r11),
                                 std::abs(po.t13 - pc.t13), std::abs(po.t14 - pc.t14)});
    const double cons = std::abs(pc.total() - 1.0);
    const double flux = std::abs(po.total() - 1.0);
    const CentredPorts cp = os.centred();
    double amp = rel(cp.t12, cf.t12);
    if (p.molecule.chirality == Chirality::Symmetric)
      amp = std::max({amp, rel(cp.r11, cf.r11), rel(cp.t13 * cp.t14, cf.t13 * cf.t14)});

    rep.max_probability_deviation = std::max(rep.max_probability_deviation, dev);
    rep.max_conservation_error = std::max(rep.max_conservation_error, cons);
    rep.max_oracle_flux_error = std::max(rep.max_oracle_flux_error, flux);
    rep.max_amplitude_deviation = std::max(rep.max_amplitude_deviation, amp);
    if (!(dev <= tol.probability)) fail(p, "oracle_probability", dev);
    if (!(cons <= tol.conservation)) fail(p, "conservation", cons);
    if (!(flux <= tol.oracle_flux)) fail(p, "oracle_flux", flux);
    if (!(amp <= tol.amplitude_rel)) fail(p, "oracle_amplitude", amp);
    if (p.molecule.chirality == Chirality::IdealChiral && (cf.r11 != cdouble{} || cf.t13 != cdouble{}))
      fail(p, "chiral_zero_ports", std::abs(cf.r11) + std::abs(cf.t13));
  }
  return rep;
}

inline ojson validation_json(const ValidationReport& rep, const ValidationTolerances& tol) {
  ojson j;
  j["points"] = rep.points;
  j["poles"] = rep.poles;
  j["max_probability_deviation"] = rep.max_probability_deviation;
  j["max_conservation_error"] = rep.max_conservation_error;
  j["max_oracle_flux_error"] = rep.max_oracle_flux_error;
  j["max_amplitude_deviation"] = rep.max_amplitude_deviation;
  j["tolerances"] = {{"probability", tol.probability},
                     {"conservation", tol.conservation},
                     {"oracle_flux", tol.oracle_flux},
                     {"amplitude_rel", tol.amplitude_rel}};
  j["passed"] = rep.passed();
  j["failures"] = rep.failures;
  return j;
}

// Points of the configured grid, capped at 41 x 41.
inline std::vector<ValidationPoint> config_points(const RunConfig& rc) {
  const MoleculeConfig m = rc.molecule();
  const Resolution res{std::min(rc.resolution.probe, 41), std::min(rc.resolution.atoms, 41)};
  const std::vector<double> xs = uniform_axis(rc.probe, res.probe);
  const std::vector<double> ys = uniform_axis(rc.atoms, res.atoms);
  std::vector<ValidationPoint> pts;
  for (double y : ys)
    for (double x : xs) {
      Detunings d{x, y};
      if (rc.coords == AxisMode::TildeCoordinates) d = bare_from_tilde(m, {x, y});
      pts.push_back({m, d});
    }
  return pts;
}

inline ojson validate_report(const std::optional<RunConfig>& rc, const ValidateOptions& vo,
                             bool strict, int& exit_code) {
  ValidationTolerances tol;
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["artifact_version"] = kArtifactVersion;
  j["command"] = "validate";
  std::vector<ValidationPoint> pts;
  if (vo.random) {
    if (!vo.seed) throw ConfigError("--random requires --seed");
    if (*vo.random < 1) throw ConfigError("--random must be >= 1");
    j["random"] = *vo.random;
    j["seed"] = *vo.seed;
    pts = random_points(*vo.random, *vo.seed);
  } else {
    if (!rc) throw ConfigError("validate needs --config or --random with --seed");
    j["config"] = to_json(*rc, false);
    if (rc->coords == AxisMode::TildeCoordinates && !rc->molecule().markovian())
      throw ConfigError("coords = tilde requires tau_a = tau_b = 0");
    pts = config_points(*rc);
  }
  const ValidationReport rep = validate_points(pts, strict, tol);
  j["result"] = validation_json(rep, tol);

  if (rc && !vo.random) {
    const MoleculeConfig m = rc->molecule();
    if (m.markovian()) {
      // probabilities where the probe is resonant with both shifted atoms
      try {
        const ScatteringResult r = scatter_with(m, static_couplings(m), {0.0, 0.0});
        j["centre"] = {{"T12", r.probs.t12}, {"R11", r.probs.r11}, {"T13", r.probs.t13},
                       {"T14", r.probs.t14}, {"cooperativity", number_or_null(r.couplings.cooperativity)}};
      } catch (const PoleError&) {
        j["centre"] = nullptr;
      }
    }
  }
  exit_code = rep.passed() ? kExitOk : kExitValidationFailed;
  return j;
}

inline int cmd_validate(const std::optional<RunConfig>& rc, const ValidateOptions& vo, bool strict,
                        const std::string& out_dir, std::ostream& log) {
  int code = kExitOk;
  const ojson j = validate_report(rc, vo, strict, code);
  write_file(std::filesystem::path(out_dir) / "validate.json", j.dump(2) + "\n");
  const ojson& r = j["result"];
  log << "validate: " << r["points"].get<std::size_t>() << " points, max |dP| "
      << r["max_probability_deviation"].get<double>() << ", max conservation error "
      << r["max_conservation_error"].get<double>() << ", " << r["poles"].get<std::size_t>()
      << " poles -> " << (code == kExitOk ? "PASS" : "FAIL") << "\n";
  return code;
}

}  // namespace giantmol::cli
