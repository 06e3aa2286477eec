#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "giantmol/oracle.hpp"
#include "support.hpp"

using namespace giantmol;
constexpr double pi = std::numbers::pi;

TEST(Oracle, SmallAtomsMatchBareFormula) {
  MoleculeConfig c;
  c.n1 = c.n2 = 1;
  c.omega = 0.8;
  for (auto d : {Detunings{0.0, 0.0}, {1.3, -0.4}, {-2.0, 3.0}}) {
    const auto o = solve_exact(c, d).probabilities();
    const auto r = scatter(c, d).probs;
    EXPECT_NEAR(o.t12, r.t12, 1e-10);
    EXPECT_NEAR(o.r11, r.r11, 1e-10);
    EXPECT_NEAR(o.t13, r.t13, 1e-10);
    EXPECT_NEAR(o.t14, r.t14, 1e-10);
  }
}

TEST(Oracle, DarkAtomTransmitsPerfectly) {
  MoleculeConfig c;
  c.n1 = 2;
  c.phi_a_static = pi;
  c.phi_b_static = 0.9;
  EXPECT_NEAR(std::abs(solve_exact(c, {0.4, 0.1}).t12()), 1.0, 1e-12);
}

TEST(Oracle, RandomAgreementWithClosedForm) {
  std::mt19937_64 rng(5);
  int solved = 0;
  for (int k = 0; k < 3000; ++k) {
    const Chirality ch = k % 4 == 0 ? Chirality::IdealChiral : Chirality::Symmetric;
    const auto dr = fixtures::random_draw(rng, ch);
    OracleSolution o;
    ScatteringResult r;
    try {
      r = scatter(dr.c, dr.d);
      o = solve_exact(dr.c, dr.d);
    } catch (const std::runtime_error&) {
      continue;
    }
    ++solved;
    const auto p = o.probabilities();
    ASSERT_NEAR(p.t12, r.probs.t12, 1e-10);
    ASSERT_NEAR(p.r11, r.probs.r11, 1e-10);
    ASSERT_NEAR(p.t13, r.probs.t13, 1e-10);
    ASSERT_NEAR(p.t14, r.probs.t14, 1e-10);
    ASSERT_NEAR(p.total(), 1.0, 1e-10);
    if (ch == Chirality::Symmetric) ASSERT_NEAR(p.t13, p.t14, 1e-10);
    ASSERT_LT(residual(o, dr.c, dr.d), 1e-10);

    // phase-sensitive comparison after moving reference planes to atom centres
    const auto cp = o.centred();
    auto rel = [](cdouble a, cdouble b) {
      return std::abs(b) > 1e-6 ? std::abs(a - b) / std::abs(b) : 0.0;
    };
    ASSERT_LT(rel(cp.t12, r.t12), 1e-8);
    if (ch == Chirality::Symmetric) {
      ASSERT_LT(rel(cp.r11, r.r11), 1e-8);
      ASSERT_LT(rel(cp.t13 * cp.t14, r.t13 * r.t14), 1e-8);
    }
  }
  EXPECT_GT(solved, 2900);
}

TEST(Oracle, ResidualSensitivity) {
  MoleculeConfig c;
  c.phi_a_static = 0.7;
  c.phi_b_static = 1.9;
  const Detunings d{0.3, -0.2};
  OracleSolution s = solve_exact(c, d);
  EXPECT_LT(residual(s, c, d), 1e-10);
  s.u1 += 1e-3;
  EXPECT_GT(residual(s, c, d), 1e-6);

  OracleSolution zero = solve_exact(c, d);
  for (auto* v : {&zero.t_a, &zero.r_a, &zero.t_b, &zero.r_b})
    for (auto& x : *v) x = 0.0;
  zero.u1 = zero.u2 = 0.0;
  EXPECT_NEAR(residual(zero, c, d), 1.0, 1e-12);
}

TEST(Oracle, BoundStateIsSingular) {
  MoleculeConfig c;
  c.n1 = c.n2 = 2;
  c.phi_a_static = c.phi_b_static = pi;
  c.omega = 1.0;
  EXPECT_THROW(solve_exact(c, {1.0, 0.0}), SingularSystem);
}

TEST(Oracle, ChiralHasNoLeftMovers) {
  MoleculeConfig c;
  c.chirality = Chirality::IdealChiral;
  c.phi_a_static = c.phi_b_static = 0.5;
  const auto s = solve_exact(c, {0.1, 0.2});
  EXPECT_TRUE(s.r_a.empty());
  EXPECT_EQ(s.r11(), cdouble{});
  EXPECT_EQ(s.t13(), cdouble{});
  EXPECT_NEAR(s.probabilities().total(), 1.0, 1e-12);
}
