#pragma once

// Brute-force reference solver. Builds the real-space amplitude equations for
// a photon incident from port 1 directly from the delta-coupled model and
// solves the resulting dense linear system, without using any of the
// closed-form Lamb shifts, decay rates or amplitudes.
//
// Layout per waveguide: coupling points sit at z_j = (j - 1) d, j = 1..N,
// with k d equal to the retardation-corrected neighbour phase. Region j lies
// between points j - 1 and j (region 1 is left of point 1, region N + 1 is
// right of point N). Right-movers carry e^{ikz} t_j after point j, left-movers
// carry e^{-ikz} r_j before point j. The field at a coupling point is the mean
// of its left and right limits.
//
// Units: g = v_g = 1, so Gamma = g^2 / v_g = 1. Ideal chiral coupling keeps only
// right-movers with g_R = sqrt(2), which gives the same single-point decay
// rate Gamma into the one remaining direction.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <tuple>
#include <vector>

#include "giantmol/core_model.hpp"
#include "giantmol/errors.hpp"
#include "giantmol/scattering.hpp"

namespace giantmol {

// Port amplitudes with the propagation phases to each giant atom's centre
// removed (reference planes at the middle of its coupling points).
struct CentredPorts {
  cdouble t12;
  cdouble r11;
  cdouble t13;
  cdouble t14;
};

struct OracleSolution {
  Chirality chirality = Chirality::Symmetric;
  int n1 = 1;
  int n2 = 1;
  double phi_a = 0.0;  // neighbour phases actually used
  double phi_b = 0.0;
  std::vector<cdouble> t_a;  // right-mover amplitude after point j on A
  std::vector<cdouble> r_a;  // left-mover amplitude before point j on A (empty when chiral)
  std::vector<cdouble> t_b;
  std::vector<cdouble> r_b;
  cdouble u1{};
  cdouble u2{};

  cdouble t12() const { return t_a.back(); }
  cdouble r11() const { return r_a.empty() ? cdouble{} : r_a.front(); }
  cdouble t13() const { return r_b.empty() ? cdouble{} : r_b.front(); }
  cdouble t14() const { return t_b.back(); }

  PortProbabilities probabilities() const {
    return {std::norm(t12()), std::norm(r11()), std::norm(t13()), std::norm(t14())};
  }

  CentredPorts centred() const {
    const double ca = 0.5 * (n1 - 1) * phi_a;  // k times centre of A's points
    const double cb = 0.5 * (n2 - 1) * phi_b;
    return {t12(), r11() * std::polar(1.0, -2.0 * ca), t13() * std::polar(1.0, -ca - cb),
            t14() * std::polar(1.0, -ca + cb)};
  }
};

namespace detail {

struct OracleSystem {
  Eigen::MatrixXcd a;
  Eigen::VectorXcd b;
};

struct OracleLayout {
  int n1;
  int n2;
  bool chiral;

  int dim() const { return chiral ? n1 + n2 + 2 : 2 * (n1 + n2) + 2; }
  int ta(int j) const { return j; }  // j = 0..n1-1
  int ra(int j) const { return n1 + j; }
  int tb(int j) const { return chiral ? n1 + j : 2 * n1 + j; }
  int rb(int j) const { return 2 * n1 + n2 + j; }
  int u1() const { return dim() - 2; }
  int u2() const { return dim() - 1; }
};

// Rows for one waveguide: N right-mover jumps, N left-mover jumps (symmetric
// only), and the waveguide part of the atom's equation of motion.
//   t_j - t_{j-1} = -i g u e^{-i (j-1) phi}
//   r_{j+1} - r_j = +i g u e^{+i (j-1) phi},  r_{N+1} = 0
//   detuning u - Omega u_other - g sum_j [e^{i(j-1)phi} (t_{j-1}+t_j)/2
//                                        + e^{-i(j-1)phi} (r_j+r_{j+1})/2] = 0
template <class TIndex, class RIndex>
void add_waveguide(OracleSystem& sys, int& row, int n, double phi, double g, bool chiral,
                   cdouble incoming, TIndex t_idx, RIndex r_idx, int u, int u_other,
                   double detuning, double omega) {
  const cdouble i(0.0, 1.0);
  for (int j = 0; j < n; ++j) {
    const cdouble ph = std::polar(1.0, j * phi);
    sys.a(row, t_idx(j)) += 1.0;
    if (j > 0) sys.a(row, t_idx(j - 1)) -= 1.0;
    sys.a(row, u) += i * g * std::conj(ph);
    if (j == 0) sys.b(row) += incoming;
    ++row;
  }
  if (!chiral) {
    for (int j = 0; j < n; ++j) {
      const cdouble ph = std::polar(1.0, j * phi);
      if (j + 1 < n) sys.a(row, r_idx(j + 1)) += 1.0;
      sys.a(row, r_idx(j)) -= 1.0;
      sys.a(row, u) -= i * g * ph;
      ++row;
    }
  }
  // atomic row
  sys.a(row, u) += detuning;
  sys.a(row, u_other) -= omega;
  for (int j = 0; j < n; ++j) {
    const cdouble ph = std::polar(1.0, j * phi);
    const cdouble w_right = 0.5 * g * ph;
    sys.a(row, t_idx(j)) -= w_right;
    if (j > 0)
      sys.a(row, t_idx(j - 1)) -= w_right;
    else
      sys.b(row) += w_right * incoming;
    if (!chiral) {
      const cdouble w_left = 0.5 * g * std::conj(ph);
      sys.a(row, r_idx(j)) -= w_left;
      if (j + 1 < n) sys.a(row, r_idx(j + 1)) -= w_left;
    }
  }
  ++row;
}

inline OracleSystem assemble(const MoleculeConfig& c, const Detunings& d) {
  const OracleLayout lay{c.n1, c.n2, c.chirality == Chirality::IdealChiral};
  const auto [phi_a, phi_b] = effective_phase(c, d);
  const double g = lay.chiral ? std::sqrt(2.0) : 1.0;

  OracleSystem sys{Eigen::MatrixXcd::Zero(lay.dim(), lay.dim()),
                   Eigen::VectorXcd::Zero(lay.dim())};
  int row = 0;
  // rows are grouped per waveguide; the atomic rows close each group
  add_waveguide(sys, row, c.n1, phi_a, g, lay.chiral, cdouble{1.0, 0.0},
                [&](int j) { return lay.ta(j); }, [&](int j) { return lay.ra(j); }, lay.u1(),
                lay.u2(), d.delta_probe, c.omega);
  add_waveguide(sys, row, c.n2, phi_b, g, lay.chiral, cdouble{0.0, 0.0},
                [&](int j) { return lay.tb(j); }, [&](int j) { return lay.rb(j); }, lay.u2(),
                lay.u1(), d.delta_probe - d.delta_atoms, c.omega);
  return sys;
}

inline Eigen::VectorXcd pack(const OracleSolution& s, const OracleLayout& lay) {
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(lay.dim());
  for (int j = 0; j < lay.n1; ++j) x(lay.ta(j)) = s.t_a.at(j);
  for (int j = 0; j < lay.n2; ++j) x(lay.tb(j)) = s.t_b.at(j);
  if (!lay.chiral) {
    for (int j = 0; j < lay.n1; ++j) x(lay.ra(j)) = s.r_a.at(j);
    for (int j = 0; j < lay.n2; ++j) x(lay.rb(j)) = s.r_b.at(j);
  }
  x(lay.u1()) = s.u1;
  x(lay.u2()) = s.u2;
  return x;
}

}  // namespace detail

inline OracleSolution solve_exact(const MoleculeConfig& c, const Detunings& d) {
  validate(c);
  const detail::OracleLayout lay{c.n1, c.n2, c.chirality == Chirality::IdealChiral};
  const detail::OracleSystem sys = detail::assemble(c, d);

  Eigen::FullPivLU<Eigen::MatrixXcd> lu(sys.a);
  if (!lu.isInvertible())
    throw SingularSystem("amplitude equations are singular (bound-state pole)");
  const Eigen::VectorXcd x = lu.solve(sys.b);

  const double scale = sys.a.cwiseAbs().rowwise().sum().maxCoeff();
  const double res = (sys.a * x - sys.b).cwiseAbs().maxCoeff();
  if (!std::isfinite(res) || res > 1e-10 * scale)
    throw SingularSystem("linear solve did not converge to a solution");

  OracleSolution s;
  s.chirality = c.chirality;
  s.n1 = c.n1;
  s.n2 = c.n2;
  std::tie(s.phi_a, s.phi_b) = effective_phase(c, d);
  for (int j = 0; j < lay.n1; ++j) s.t_a.push_back(x(lay.ta(j)));
  for (int j = 0; j < lay.n2; ++j) s.t_b.push_back(x(lay.tb(j)));
  if (!lay.chiral) {
    for (int j = 0; j < lay.n1; ++j) s.r_a.push_back(x(lay.ra(j)));
    for (int j = 0; j < lay.n2; ++j) s.r_b.push_back(x(lay.rb(j)));
  }
  s.u1 = x(lay.u1());
  s.u2 = x(lay.u2());
  return s;
}

// Max-norm of the assembled equations at the given amplitudes.
inline double residual(const OracleSolution& s, const MoleculeConfig& c, const Detunings& d) {
  const detail::OracleLayout lay{c.n1, c.n2, c.chirality == Chirality::IdealChiral};
  const detail::OracleSystem sys = detail::assemble(c, d);
  return (sys.a * detail::pack(s, lay) - sys.b).cwiseAbs().maxCoeff();
}

}  // namespace giantmol
