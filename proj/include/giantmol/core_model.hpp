#pragma once

// Physical configuration of the giant molecule and the phase-dependent
// Lamb shifts, effective decay rates and cooperativity derived from it.
//
// Units: the single-point decay rate Gamma = g^2 / v_g is 1. Rates, detunings
// and the exchange coupling are in units of Gamma; delays are in 1 / Gamma.

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace giantmol {

enum class Chirality { Symmetric, IdealChiral };

enum class Regime { Weak, Critical, Strong, Decoupled };

inline std::string_view to_string(Chirality c) {
  return c == Chirality::Symmetric ? "symmetric" : "ideal_chiral";
}

inline std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Weak: return "weak";
    case Regime::Critical: return "critical";
    case Regime::Strong: return "strong";
    case Regime::Decoupled: return "decoupled";
  }
  return "unknown";
}

struct MoleculeConfig {
  double omega = 1.0;         // interatomic exchange coupling
  int n1 = 4;                 // coupling points of atom 1 on waveguide A
  int n2 = 4;                 // coupling points of atom 2 on waveguide B
  double phi_a_static = 0.0;  // k1 * spacing on waveguide A, radians, unreduced
  double phi_b_static = 0.0;  // k2 * spacing on waveguide B, radians, unreduced
  double tau_a = 0.0;         // neighbour-to-neighbour delay on A
  double tau_b = 0.0;         // neighbour-to-neighbour delay on B
  Chirality chirality = Chirality::Symmetric;

  bool markovian() const { return tau_a == 0.0 && tau_b == 0.0; }

  bool operator==(const MoleculeConfig&) const = default;
};

inline void validate(const MoleculeConfig& c) {
  if (!(c.omega >= 0.0) || !std::isfinite(c.omega))
    throw std::invalid_argument("omega must be finite and >= 0");
  if (c.n1 < 1 || c.n2 < 1)
    throw std::invalid_argument("coupling-point counts must be >= 1");
  if (!(c.tau_a >= 0.0) || !(c.tau_b >= 0.0) || !std::isfinite(c.tau_a) ||
      !std::isfinite(c.tau_b))
    throw std::invalid_argument("delays must be finite and >= 0");
  if (!std::isfinite(c.phi_a_static) || !std::isfinite(c.phi_b_static))
    throw std::invalid_argument("static phases must be finite");
}

// Probe detuning relative to atom 1 and atomic detuning omega_2 - omega_1.
struct Detunings {
  double delta_probe = 0.0;
  double delta_atoms = 0.0;
};

struct EffectiveCouplings {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double lamb1 = 0.0;
  double lamb2 = 0.0;
  double phi_a = 0.0;
  double phi_b = 0.0;
  double cooperativity = 0.0;  // +inf when gamma1 * gamma2 == 0
  double ratio = 0.0;          // gamma1 / gamma2, non-finite when gamma2 == 0
};

// Below this |sin(phi/2)| the decay-rate ratio is replaced by its Taylor series.
inline constexpr double kSeriesSwitch = 1e-6;

// Default half-width of the critical band around C = 1.
inline constexpr double kDefaultCriticalTolerance = 1e-9;

namespace detail {

inline double reduce_phase(double phi) {
  return std::remainder(phi, 2.0 * std::numbers::pi);
}

// sin(pi x) with exact zeros at integer x.
inline double sin_pi(double x) {
  const double r = std::remainder(x, 2.0);
  if (r == 0.0 || std::abs(r) == 1.0) return 0.0;
  return std::sin(std::numbers::pi * r);
}

}  // namespace detail

// Gamma_eff(N, phi) = sin^2(N phi / 2) / sin^2(phi / 2); N^2 at phi = 0 mod 2 pi.
inline double effective_decay(int n, double phi) {
  const double eps = detail::reduce_phase(phi);
  const double t = eps / std::numbers::pi;
  const double s = detail::sin_pi(0.5 * t);
  const double nn = static_cast<double>(n) * n;
  if (std::abs(s) < kSeriesSwitch) {
    const double e2 = eps * eps;
    return nn - e2 * nn * (nn - 1.0) / 12.0 +
           e2 * e2 * nn * (nn - 1.0) * (2.0 * nn - 3.0) / 720.0;
  }
  const double num = detail::sin_pi(0.5 * n * t);
  return (num * num) / (s * s);
}

// Lamb shift (N sin phi - sin N phi) / (1 - cos phi), evaluated through the
// equivalent interference sum 2 sum_m (N - m) sin(m phi), which has no
// removable singularity and no cancellation near phi = 0 mod 2 pi.
inline double lamb_shift(int n, double phi) {
  const double t = detail::reduce_phase(phi) / std::numbers::pi;
  double s = 0.0;
  for (int m = 1; m < n; ++m) s += (n - m) * detail::sin_pi(m * t);
  return 2.0 * s;
}

// Retardation-corrected propagation phases between neighbouring points.
inline std::pair<double, double> effective_phase(const MoleculeConfig& c, const Detunings& d) {
  return {c.phi_a_static + d.delta_probe * c.tau_a,
          c.phi_b_static + (d.delta_probe - d.delta_atoms) * c.tau_b};
}

// Products |Delta| tau_a and |Delta - delta| tau_b; the Markovian picture
// needs both to be small. Reported only, never enforced.
inline std::pair<double, double> markov_products(const MoleculeConfig& c, const Detunings& d) {
  return {std::abs(d.delta_probe) * c.tau_a,
          std::abs(d.delta_probe - d.delta_atoms) * c.tau_b};
}

inline EffectiveCouplings couplings_at_phases(const MoleculeConfig& c, double phi_a,
                                              double phi_b) {
  EffectiveCouplings ec;
  ec.phi_a = phi_a;
  ec.phi_b = phi_b;
  ec.gamma1 = effective_decay(c.n1, phi_a);
  ec.gamma2 = effective_decay(c.n2, phi_b);
  ec.lamb1 = lamb_shift(c.n1, phi_a);
  ec.lamb2 = lamb_shift(c.n2, phi_b);
  const double prod = ec.gamma1 * ec.gamma2;
  ec.cooperativity =
      prod > 0.0 ? c.omega * c.omega / prod : std::numeric_limits<double>::infinity();
  if (ec.gamma2 > 0.0)
    ec.ratio = ec.gamma1 / ec.gamma2;
  else
    ec.ratio = ec.gamma1 > 0.0 ? std::numeric_limits<double>::infinity()
                               : std::numeric_limits<double>::quiet_NaN();
  return ec;
}

inline EffectiveCouplings effective_couplings(const MoleculeConfig& c, const Detunings& d) {
  const auto [pa, pb] = effective_phase(c, d);
  return couplings_at_phases(c, pa, pb);
}

// Couplings at the static phases (the Markovian values).
inline EffectiveCouplings static_couplings(const MoleculeConfig& c) {
  return couplings_at_phases(c, c.phi_a_static, c.phi_b_static);
}

// Static phase in (0, 2 pi / N] on the main interference lobe where the
// effective decay rate equals `gamma` (0 <= gamma <= N^2). Bisection.
inline double phase_for_decay(int n, double gamma) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const double nn = static_cast<double>(n) * n;
  if (!(gamma >= 0.0 && gamma <= nn)) throw std::invalid_argument("gamma outside [0, N^2]");
  if (n == 1) throw std::invalid_argument("a single coupling point has gamma = 1 at every phase");
  double lo = 0.0;
  double hi = 2.0 * std::numbers::pi / n;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (effective_decay(n, mid) > gamma ? lo : hi) = mid;
  }
  return std::abs(effective_decay(n, lo) - gamma) <= std::abs(effective_decay(n, hi) - gamma) ? lo : hi;
}

inline Regime classify_regime(const EffectiveCouplings& ec,
                              double tol = kDefaultCriticalTolerance) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");
  if (ec.gamma1 <= tol || ec.gamma2 <= tol) return Regime::Decoupled;
  if (std::abs(ec.cooperativity - 1.0) <= tol) return Regime::Critical;
  return ec.cooperativity < 1.0 ? Regime::Weak : Regime::Strong;
}

// Shifted detunings Delta~ = Delta - lamb1 and delta~ = delta - lamb1 + lamb2.
struct TildeDetunings {
  double probe = 0.0;
  double atoms = 0.0;
};

inline TildeDetunings to_tilde(const EffectiveCouplings& ec, const Detunings& d) {
  return {d.delta_probe - ec.lamb1, d.delta_atoms - ec.lamb1 + ec.lamb2};
}

// Inverse of to_tilde. Only defined in the Markovian limit, where the Lamb
// shifts do not depend on the detunings.
inline Detunings bare_from_tilde(const MoleculeConfig& c, const TildeDetunings& t) {
  if (!c.markovian())
    throw std::invalid_argument("shifted coordinates need zero delays (Markovian limit)");
  const EffectiveCouplings ec = static_couplings(c);
  return {t.probe + ec.lamb1, t.atoms + ec.lamb1 - ec.lamb2};
}

}  // namespace giantmol
