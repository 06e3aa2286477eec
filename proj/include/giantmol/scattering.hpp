#pragma once

// Closed-form single-photon scattering amplitudes for a photon incident from
// port 1 (left end of waveguide A). Ports 2, 3, 4 are the right end of A, the
// left end of B and the right end of B. Overall propagation phases are
// omitted, so only moduli and phase-invariant ratios are physical.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include "giantmol/core_model.hpp"
#include "giantmol/errors.hpp"

namespace giantmol {

using cdouble = std::complex<double>;

struct PortProbabilities {
  double t12 = 0.0;
  double r11 = 0.0;
  double t13 = 0.0;
  double t14 = 0.0;

  double total() const { return t12 + r11 + t13 + t14; }
};

struct ScatteringResult {
  cdouble t12{1.0, 0.0};
  cdouble r11{0.0, 0.0};
  cdouble t13{0.0, 0.0};
  cdouble t14{0.0, 0.0};
  PortProbabilities probs;
  double tilde_delta = 0.0;        // Delta - lamb1
  double tilde_small_delta = 0.0;  // delta - lamb1 + lamb2
  EffectiveCouplings couplings;
};

// Decay rates at or below this are treated as an exact decoupling.
inline constexpr double kVanishingRate = 1e-14;
inline constexpr double kPoleThreshold = 1e-14;
inline constexpr double kEitTolerance = 1e-12;

namespace detail {

inline void fill_probabilities(ScatteringResult& r) {
  r.probs = {std::norm(r.t12), std::norm(r.r11), std::norm(r.t13), std::norm(r.t14)};
}

}  // namespace detail

// Amplitudes for given couplings and shifted detunings. Exposed separately so
// the resonance-line and EIT paths can be checked against the same algebra.
inline ScatteringResult scatter_with(const MoleculeConfig& c, const EffectiveCouplings& ec,
                                     const TildeDetunings& td) {
  ScatteringResult res;
  res.couplings = ec;
  res.tilde_delta = td.probe;
  res.tilde_small_delta = td.atoms;

  const bool chiral = c.chirality == Chirality::IdealChiral;
  const double g1 = ec.gamma1;
  const double g2 = ec.gamma2;
  const double a = td.probe;             // detuning from the shifted atom 1
  const double b = td.probe - td.atoms;  // detuning from the shifted atom 2
  const cdouble i(0.0, 1.0);

  if (c.omega == 0.0) {
    // atom 2 is disconnected; the common factor (b + i g2) cancels
    if (g1 > kVanishingRate) {
      const cdouble den = a + i * g1;
      if (chiral) {
        res.t12 = (a - i * g1) / den;
      } else {
        res.t12 = a / den;
        res.r11 = -i * g1 / den;
      }
    }
    detail::fill_probabilities(res);
    return res;
  }

  const double om2 = c.omega * c.omega;
  const cdouble x = b + i * g2;
  const cdouble den = om2 - (a + i * g1) * x;
  // only reachable when both decay rates vanish
  if (std::abs(den) < kPoleThreshold)
    throw PoleError("scattering denominator vanishes (bound-state pole)");

  if (g1 <= kVanishingRate) {
    // atom 1 does not see waveguide A: perfect transmission
    detail::fill_probabilities(res);
    return res;
  }

  const double root = std::sqrt(g1 * g2);
  if (chiral) {
    res.t12 = 1.0 + 2.0 * i * g1 * x / den;
    res.t14 = 2.0 * i * root * c.omega / den;
  } else {
    res.t12 = (om2 - a * x) / den;
    res.r11 = i * g1 * x / den;
    res.t13 = i * root * c.omega / den;
    res.t14 = res.t13;
  }
  detail::fill_probabilities(res);
  return res;
}

inline ScatteringResult scatter(const MoleculeConfig& c, const Detunings& d) {
  const EffectiveCouplings ec = effective_couplings(c, d);
  return scatter_with(c, ec, to_tilde(ec, d));
}

namespace detail {

inline EffectiveCouplings resonance_line_couplings(const MoleculeConfig& c) {
  if (!c.markovian())
    throw std::invalid_argument("resonance-line formulas hold in the Markovian limit only");
  if (c.chirality != Chirality::Symmetric)
    throw std::invalid_argument("resonance-line formulas are for symmetric coupling");
  EffectiveCouplings ec = static_couplings(c);
  if (ec.gamma1 <= kVanishingRate || ec.gamma2 <= kVanishingRate)
    throw std::invalid_argument("resonance-line formulas need both decay rates nonzero");
  return ec;
}

}  // namespace detail

// Delta~ = 0 line, written in terms of C and delta~ / gamma2.
inline ScatteringResult scatter_on_atom1_resonance(const MoleculeConfig& c, double tilde_atoms) {
  const EffectiveCouplings ec = detail::resonance_line_couplings(c);
  const double cc = ec.cooperativity;
  const cdouble i(0.0, 1.0);
  const cdouble den = cc + 1.0 + i * tilde_atoms / ec.gamma2;

  ScatteringResult res;
  res.couplings = ec;
  res.tilde_delta = 0.0;
  res.tilde_small_delta = tilde_atoms;
  res.t12 = cc / den;
  res.r11 = (-1.0 - i * tilde_atoms / ec.gamma2) / den;
  res.t13 = i * std::sqrt(cc) / den;
  res.t14 = res.t13;
  detail::fill_probabilities(res);
  return res;
}

// Delta~ = delta~ line, written in terms of C and delta~ / gamma1.
inline ScatteringResult scatter_on_atom2_resonance(const MoleculeConfig& c, double tilde_atoms) {
  const EffectiveCouplings ec = detail::resonance_line_couplings(c);
  const double cc = ec.cooperativity;
  const cdouble i(0.0, 1.0);
  const cdouble den = cc + 1.0 - i * tilde_atoms / ec.gamma1;

  ScatteringResult res;
  res.couplings = ec;
  res.tilde_delta = tilde_atoms;
  res.tilde_small_delta = tilde_atoms;
  res.t12 = 1.0 - 1.0 / den;
  res.r11 = -1.0 / den;
  res.t13 = i * std::sqrt(cc) / den;
  res.t14 = res.t13;
  detail::fill_probabilities(res);
  return res;
}

// Transmission t12 when atom 2 is dark to waveguide B (gamma2 = 0).
inline cdouble eit_transmission(const MoleculeConfig& c, const Detunings& d) {
  const EffectiveCouplings ec = effective_couplings(c, d);
  if (ec.gamma2 > kEitTolerance)
    throw NotInEitLimit("gamma2 = " + std::to_string(ec.gamma2) + " is not zero");
  if (ec.gamma1 <= kVanishingRate) return {1.0, 0.0};
  const TildeDetunings td = to_tilde(ec, d);
  const double a = td.probe;
  const double b = td.probe - td.atoms;
  const cdouble i(0.0, 1.0);
  if (c.omega == 0.0) return a / (a + i * ec.gamma1);
  const double om2 = c.omega * c.omega;
  const cdouble den = om2 - (a + i * ec.gamma1) * b;
  if (std::abs(den) < kPoleThreshold)
    throw PoleError("EIT denominator vanishes");
  return (om2 - a * b) / den;
}

// Real roots Delta_+ >= Delta_- of the EIT numerator Omega^2 - Delta~ (Delta~ - delta~),
// with Lamb shifts at the static phases.
inline std::pair<double, double> eit_peak_positions(const MoleculeConfig& c, double delta_atoms) {
  const EffectiveCouplings ec = static_couplings(c);
  const double centre = ec.lamb1 + ec.lamb2 + delta_atoms;
  const double split = ec.lamb1 - ec.lamb2 - delta_atoms;
  const double disc = std::sqrt(split * split + 4.0 * c.omega * c.omega);
  return {0.5 * (centre + disc), 0.5 * (centre - disc)};
}

}  // namespace giantmol
