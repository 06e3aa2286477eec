#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "giantmol/core_model.hpp"
#include "support.hpp"

using namespace giantmol;
constexpr double pi = std::numbers::pi;

TEST(EffectivePhase, ZeroDelayIsIdentity) {
  MoleculeConfig c;
  c.phi_a_static = c.phi_b_static = 0.36 * pi;
  const auto [pa, pb] = effective_phase(c, {5.0, 3.0});
  EXPECT_EQ(pa, 0.36 * pi);
  EXPECT_EQ(pb, 0.36 * pi);
}

TEST(EffectivePhase, LinearRetardationLaw) {
  MoleculeConfig c;
  c.phi_a_static = 9 * pi / 16;
  c.tau_a = 0.4;
  EXPECT_NEAR(effective_phase(c, {2.0, 0.0}).first, 0.8 + 9 * pi / 16, 1e-15);

  c.phi_b_static = 9 * pi / 25;
  c.tau_b = 0.04;
  EXPECT_NEAR(effective_phase(c, {1.0, 4.0}).second, -0.12 + 9 * pi / 25, 1e-15);
}

TEST(EffectivePhase, StoredUnreduced) {
  MoleculeConfig c;
  c.phi_a_static = 1.0;
  c.tau_a = 0.5;
  EXPECT_DOUBLE_EQ(effective_phase(c, {40.0, 0.0}).first, 21.0);
}

TEST(MarkovProducts, Reported) {
  MoleculeConfig c;
  c.tau_a = 0.1;
  c.tau_b = 0.2;
  const auto [a, b] = markov_products(c, {-3.0, 2.0});
  EXPECT_DOUBLE_EQ(a, 0.3);
  EXPECT_DOUBLE_EQ(b, 1.0);
}

TEST(EffectiveDecay, NamedValues) {
  EXPECT_EQ(effective_decay(2, pi), 0.0);
  EXPECT_EQ(lamb_shift(2, pi), 0.0);
  EXPECT_NEAR(effective_decay(4, 4 * pi / 5), 1.0, 1e-14);
  EXPECT_DOUBLE_EQ(effective_decay(4, 0.0), 16.0);
  EXPECT_DOUBLE_EQ(lamb_shift(4, 0.0), 0.0);
  EXPECT_NEAR(effective_decay(4, 1e-9), 16.0, 1e-12);
  EXPECT_NEAR(effective_decay(4, 0.36 * pi), 2.0678, 1e-4);
  EXPECT_NEAR(effective_decay(4, 9 * pi / 16), 0.245, 1e-3);
}

TEST(EffectiveDecay, SmallAtomLimit) {
  for (double phi : {0.0, 0.3, 1.7, pi, 5.0}) {
    EXPECT_NEAR(effective_decay(1, phi), 1.0, 1e-14);
    EXPECT_EQ(lamb_shift(1, phi), 0.0);
  }
}

TEST(EffectiveDecay, ClosedFormLambShift) {
  // (N sin phi - sin N phi) / (1 - cos phi) away from the singular point
  for (int n = 1; n <= 6; ++n)
    for (double phi : {0.3, 1.1, 2.5, 3.9, 5.5}) {
      const double ref = (n * std::sin(phi) - std::sin(n * phi)) / (1.0 - std::cos(phi));
      EXPECT_NEAR(lamb_shift(n, phi), ref, 1e-12) << n << " " << phi;
    }
}

TEST(EffectiveDecay, EvenNZeroAtPi) {
  for (int n : {2, 4, 6}) EXPECT_EQ(effective_decay(n, pi), 0.0);
}

TEST(EffectiveDecay, PeriodicityParityBounds) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int k = 0; k < 2000; ++k) {
    const double phi = u(rng);
    for (int n = 1; n <= 6; ++n) {
      const double g = effective_decay(n, phi);
      EXPECT_GE(g, 0.0);
      EXPECT_LE(g, n * n * (1.0 + 1e-15));
      EXPECT_NEAR(effective_decay(n, phi + 2 * pi), g, 1e-9 * (1 + g));
      EXPECT_NEAR(effective_decay(n, -phi), g, 1e-9 * (1 + g));
      const double l = lamb_shift(n, phi);
      EXPECT_NEAR(lamb_shift(n, phi + 2 * pi), l, 1e-9 * (1 + std::abs(l)));
      EXPECT_NEAR(lamb_shift(n, -phi), -l, 1e-12 * (1 + std::abs(l)));
    }
  }
}

TEST(EffectiveDecay, SeriesContinuityAcrossSwitch) {
  // |sin(phi/2)| = 10 * switch: direct formula vs Taylor series
  const double phi = 2.0 * std::asin(10.0 * kSeriesSwitch);
  for (int n = 1; n <= 6; ++n) {
    const double nn = double(n) * n;
    const double e2 = phi * phi;
    const double series = nn - e2 * nn * (nn - 1) / 12 + e2 * e2 * nn * (nn - 1) * (2 * nn - 3) / 720;
    EXPECT_NEAR(effective_decay(n, phi) / series, 1.0, 1e-9);
    // and across the switch itself
    const double below = 2.0 * std::asin(0.999 * kSeriesSwitch);
    const double above = 2.0 * std::asin(1.001 * kSeriesSwitch);
    EXPECT_NEAR(effective_decay(n, below) / effective_decay(n, above), 1.0, 1e-9);
  }
}

TEST(Couplings, CooperativityIdentity) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 1000; ++k) {
    const auto dr = fixtures::random_draw(rng);
    const EffectiveCouplings ec = effective_couplings(dr.c, dr.d);
    if (ec.gamma1 * ec.gamma2 > 0.0)
      EXPECT_NEAR(ec.cooperativity * ec.gamma1 * ec.gamma2, dr.c.omega * dr.c.omega,
                  1e-12 * (1 + dr.c.omega * dr.c.omega));
  }
}

TEST(Couplings, DecoupledAtomGivesInfiniteC) {
  MoleculeConfig c;
  c.n2 = 2;
  c.phi_b_static = pi;
  c.phi_a_static = 1.0;
  const auto ec = static_couplings(c);
  EXPECT_TRUE(std::isinf(ec.cooperativity));
  EXPECT_TRUE(std::isinf(ec.ratio));
  EXPECT_EQ(classify_regime(ec), Regime::Decoupled);
}

TEST(Regime, Named) {
  EffectiveCouplings ec;
  ec.gamma1 = ec.gamma2 = 1.0;
  ec.cooperativity = 0.25;
  EXPECT_EQ(classify_regime(ec), Regime::Weak);
  ec.cooperativity = 1.0;
  EXPECT_EQ(classify_regime(ec), Regime::Critical);
  ec.cooperativity = 1.0 + 1e-10;
  EXPECT_EQ(classify_regime(ec), Regime::Critical);
  ec.cooperativity = 1.0 + 1e-6;
  EXPECT_EQ(classify_regime(ec), Regime::Strong);
  EXPECT_EQ(classify_regime(ec, 1e-3), Regime::Critical);
  ec.cooperativity = 16.0;
  EXPECT_EQ(classify_regime(ec), Regime::Strong);
  EXPECT_THROW(classify_regime(ec, 0.0), std::invalid_argument);
}

TEST(Regime, SymmetricInRates) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 500; ++k) {
    const auto dr = fixtures::random_draw(rng);
    MoleculeConfig sw = dr.c;
    std::swap(sw.n1, sw.n2);
    std::swap(sw.phi_a_static, sw.phi_b_static);
    EXPECT_EQ(classify_regime(static_couplings(dr.c), 1e-6),
              classify_regime(static_couplings(sw), 1e-6));
  }
}

TEST(Tilde, RoundTrip) {
  MoleculeConfig c;
  c.phi_a_static = 0.3;
  c.phi_b_static = 1.9;
  const Detunings d = bare_from_tilde(c, {0.7, -1.2});
  const TildeDetunings t = to_tilde(static_couplings(c), d);
  EXPECT_NEAR(t.probe, 0.7, 1e-14);
  EXPECT_NEAR(t.atoms, -1.2, 1e-14);
  c.tau_a = 0.1;
  EXPECT_THROW(bare_from_tilde(c, {0, 0}), std::invalid_argument);
}

TEST(Validate, RejectsBadConfigs) {
  MoleculeConfig c;
  c.omega = -1;
  EXPECT_THROW(validate(c), std::invalid_argument);
  c = {};
  c.n1 = 0;
  EXPECT_THROW(validate(c), std::invalid_argument);
  c = {};
  c.tau_b = -0.1;
  EXPECT_THROW(validate(c), std::invalid_argument);
  c = {};
  c.phi_a_static = NAN;
  EXPECT_THROW(validate(c), std::invalid_argument);
}

TEST(PhaseForDecay, Inverts) {
  for (double g : {0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 15.0})
    EXPECT_NEAR(effective_decay(4, phase_for_decay(4, g)), g, 1e-13 * (1 + g));
  EXPECT_THROW(phase_for_decay(4, 17.0), std::invalid_argument);
}
