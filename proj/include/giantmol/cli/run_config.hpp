#pragma once

// Run configuration: a flat JSON object whose keys follow the usual
// parameterization (phases in units of pi), plus sweep ranges and run flags.
//
//   {
//     "label": "fig3a",
//     "omega": 1.0, "n1": 4, "n2": 4,
//     "phi_a_static_over_pi": 0.8, "phi_b_static_over_pi": 0.8,
//     "tau_a": 0.0, "tau_b": 0.0, "chirality": "symmetric",
//     "probe_min": -6.0, "probe_max": 6.0, "atoms_min": -6.0, "atoms_max": 6.0,
//     "resolution_probe": 401, "resolution_atoms": 401,
//     "coords": "tilde", "tolerance_critical": 1e-9,
//     "resonance_delta_atoms": 0.0, "strict": false, "workers": 1, "out_dir": "out"
//   }
//
// Missing keys take the defaults below; unknown keys are rejected.

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "json.hpp"

#include "giantmol/analysis.hpp"
#include "giantmol/core_model.hpp"
#include "giantmol/errors.hpp"

namespace giantmol::cli {

struct RunConfig {
  std::string label;
  double omega = 1.0;
  int n1 = 4;
  int n2 = 4;
  double phi_a_static_over_pi = 0.0;
  double phi_b_static_over_pi = 0.0;
  double tau_a = 0.0;
  double tau_b = 0.0;
  Chirality chirality = Chirality::Symmetric;
  AxisRange probe{-6.0, 6.0};
  AxisRange atoms{-6.0, 6.0};
  Resolution resolution{401, 401};
  AxisMode coords = AxisMode::BareCoordinates;
  double tolerance_critical = kDefaultCriticalTolerance;
  double resonance_delta_atoms = 0.0;
  bool strict = false;
  int workers = 1;
  std::string out_dir = "out";

  MoleculeConfig molecule() const {
    MoleculeConfig m;
    m.omega = omega;
    m.n1 = n1;
    m.n2 = n2;
    m.phi_a_static = phi_a_static_over_pi * std::numbers::pi;
    m.phi_b_static = phi_b_static_over_pi * std::numbers::pi;
    m.tau_a = tau_a;
    m.tau_b = tau_b;
    m.chirality = chirality;
    return m;
  }

  SweepOptions sweep_options() const { return {tolerance_critical, workers}; }
};

inline void check(const RunConfig& rc) {
  auto fail = [](const std::string& m) { throw ConfigError(m); };
  if (!std::isfinite(rc.omega) || rc.omega < 0.0) fail("omega must be finite and >= 0");
  if (rc.n1 < 1 || rc.n2 < 1) fail("n1 and n2 must be >= 1");
  if (!std::isfinite(rc.tau_a) || rc.tau_a < 0.0 || !std::isfinite(rc.tau_b) || rc.tau_b < 0.0)
    fail("delays must be finite and >= 0");
  if (!std::isfinite(rc.phi_a_static_over_pi) || !std::isfinite(rc.phi_b_static_over_pi))
    fail("static phases must be finite");
  if (rc.resolution.probe < 1 || rc.resolution.atoms < 1) fail("resolutions must be positive");
  for (const AxisRange* r : {&rc.probe, &rc.atoms}) {
    if (!std::isfinite(r->min) || !std::isfinite(r->max)) fail("sweep ranges must be finite");
    if (r->max < r->min) fail("sweep ranges need min <= max");
  }
  if ((rc.resolution.probe > 1 && !(rc.probe.max > rc.probe.min)) ||
      (rc.resolution.atoms > 1 && !(rc.atoms.max > rc.atoms.min)))
    fail("a multi-point axis needs max > min");
  if (!(rc.tolerance_critical > 0.0)) fail("tolerance_critical must be > 0");
  if (!std::isfinite(rc.resonance_delta_atoms)) fail("resonance_delta_atoms must be finite");
  if (rc.workers < 1) fail("workers must be >= 1");
}

inline nlohmann::ordered_json to_json(const RunConfig& rc, bool include_runtime = true) {
  nlohmann::ordered_json j;
  j["label"] = rc.label;
  j["omega"] = rc.omega;
  j["n1"] = rc.n1;
  j["n2"] = rc.n2;
  j["phi_a_static_over_pi"] = rc.phi_a_static_over_pi;
  j["phi_b_static_over_pi"] = rc.phi_b_static_over_pi;
  j["tau_a"] = rc.tau_a;
  j["tau_b"] = rc.tau_b;
  j["chirality"] = std::string(to_string(rc.chirality));
  j["probe_min"] = rc.probe.min;
  j["probe_max"] = rc.probe.max;
  j["atoms_min"] = rc.atoms.min;
  j["atoms_max"] = rc.atoms.max;
  j["resolution_probe"] = rc.resolution.probe;
  j["resolution_atoms"] = rc.resolution.atoms;
  j["coords"] = std::string(to_string(rc.coords));
  j["tolerance_critical"] = rc.tolerance_critical;
  j["resonance_delta_atoms"] = rc.resonance_delta_atoms;
  j["strict"] = rc.strict;
  if (include_runtime) {
    j["workers"] = rc.workers;
    j["out_dir"] = rc.out_dir;
  }
  return j;
}

inline std::string serialize(const RunConfig& rc) { return to_json(rc).dump(2) + "\n"; }

inline RunConfig from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig rc;
  for (const auto& [key, v] : j.items()) {
    try {
      if (key == "label") rc.label = v.get<std::string>();
      else if (key == "omega") rc.omega = v.get<double>();
      else if (key == "n1") rc.n1 = v.get<int>();
      else if (key == "n2") rc.n2 = v.get<int>();
      else if (key == "phi_a_static_over_pi") rc.phi_a_static_over_pi = v.get<double>();
      else if (key == "phi_b_static_over_pi") rc.phi_b_static_over_pi = v.get<double>();
      else if (key == "tau_a") rc.tau_a = v.get<double>();
      else if (key == "tau_b") rc.tau_b = v.get<double>();
      else if (key == "tau") rc.tau_a = rc.tau_b = v.get<double>();
      else if (key == "chirality") {
        const auto s = v.get<std::string>();
        if (s == "symmetric") rc.chirality = Chirality::Symmetric;
        else if (s == "ideal_chiral") rc.chirality = Chirality::IdealChiral;
        else throw ConfigError("chirality must be 'symmetric' or 'ideal_chiral'");
      }
      else if (key == "probe_min") rc.probe.min = v.get<double>();
      else if (key == "probe_max") rc.probe.max = v.get<double>();
      else if (key == "atoms_min") rc.atoms.min = v.get<double>();
      else if (key == "atoms_max") rc.atoms.max = v.get<double>();
      else if (key == "resolution_probe") rc.resolution.probe = v.get<int>();
      else if (key == "resolution_atoms") rc.resolution.atoms = v.get<int>();
      else if (key == "coords") {
        const auto s = v.get<std::string>();
        if (s == "tilde") rc.coords = AxisMode::TildeCoordinates;
        else if (s == "bare") rc.coords = AxisMode::BareCoordinates;
        else throw ConfigError("coords must be 'tilde' or 'bare'");
      }
      else if (key == "tolerance_critical") rc.tolerance_critical = v.get<double>();
      else if (key == "resonance_delta_atoms") rc.resonance_delta_atoms = v.get<double>();
      else if (key == "strict") rc.strict = v.get<bool>();
      else if (key == "workers") rc.workers = v.get<int>();
      else if (key == "out_dir") rc.out_dir = v.get<std::string>();
      else throw ConfigError("unknown config key '" + key + "'");
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("bad value for '" + key + "': " + e.what());
    }
  }
  check(rc);
  return rc;
}

inline RunConfig parse(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return from_json(j);
}

inline RunConfig load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace giantmol::cli
