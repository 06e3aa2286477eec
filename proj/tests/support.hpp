#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "giantmol/core_model.hpp"

namespace giantmol::fixtures {

// Markovian molecule with N1 = N2 = 4 and static phases tuned so the decay
// rates are exactly (g1, g2); C = omega^2 / (g1 g2).
inline MoleculeConfig calibrated(double g1, double g2, double omega = 1.0,
                                 Chirality ch = Chirality::Symmetric) {
  MoleculeConfig c;
  c.omega = omega;
  c.n1 = c.n2 = 4;
  c.phi_a_static = phase_for_decay(4, g1);
  c.phi_b_static = phase_for_decay(4, g2);
  c.chirality = ch;
  return c;
}

struct Draw {
  MoleculeConfig c;
  Detunings d;
};

// N <= 6, Omega <= 3, delays up to 0.5 on half the draws, detunings in [-10, 10].
inline Draw random_draw(std::mt19937_64& rng, Chirality ch = Chirality::Symmetric) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> n(1, 6);
  Draw r;
  r.c.n1 = n(rng);
  r.c.n2 = n(rng);
  r.c.omega = 3.0 * u(rng);
  r.c.phi_a_static = 2.0 * std::numbers::pi * u(rng);
  r.c.phi_b_static = 2.0 * std::numbers::pi * u(rng);
  if (u(rng) < 0.5) {
    r.c.tau_a = 0.5 * u(rng);
    r.c.tau_b = 0.5 * u(rng);
  }
  r.c.chirality = ch;
  r.d = {20.0 * u(rng) - 10.0, 20.0 * u(rng) - 10.0};
  return r;
}

}  // namespace giantmol::fixtures
