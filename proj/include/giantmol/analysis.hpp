#pragma once

// Grid sweeps over (probe, atomic) detuning, cooperativity phase diagrams with
// the C = 1 boundary, 1-D spectral feature extraction, self-consistent
// resonance location under retardation, and the optimal-transfer search.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "giantmol/core_model.hpp"
#include "giantmol/errors.hpp"
#include "giantmol/parallel.hpp"
#include "giantmol/scattering.hpp"

namespace giantmol {

struct AxisRange {
  double min = 0.0;
  double max = 0.0;
};

struct Resolution {
  int probe = 401;
  int atoms = 401;
};

// Axes in shifted (Delta~, delta~) or bare (Delta, delta) detunings.
enum class AxisMode { TildeCoordinates, BareCoordinates };

inline std::string_view to_string(AxisMode m) {
  return m == AxisMode::TildeCoordinates ? "tilde" : "bare";
}

struct SweepOptions {
  double critical_tolerance = kDefaultCriticalTolerance;
  int workers = 1;
};

// n uniformly spaced values from min to max inclusive; a single point sits at min.
inline std::vector<double> uniform_axis(const AxisRange& r, int n) {
  if (n < 1) throw std::invalid_argument("axis resolution must be >= 1");
  if (!std::isfinite(r.min) || !std::isfinite(r.max))
    throw std::invalid_argument("axis range must be finite");
  if (n >= 2 && !(r.max > r.min))
    throw std::invalid_argument("axis range must satisfy max > min");
  std::vector<double> axis(static_cast<std::size_t>(n));
  if (n == 1) {
    axis[0] = r.min;
    return axis;
  }
  const double step = (r.max - r.min) / (n - 1);
  for (int k = 0; k < n; ++k) axis[k] = r.min + k * step;
  axis.back() = r.max;
  return axis;
}

struct GridCell {
  Detunings bare;
  EffectiveCouplings couplings;
  Regime regime = Regime::Weak;
  std::optional<ScatteringResult> result;  // empty when the cell hit a pole

  bool pole() const { return !result.has_value(); }
};

struct SpectrumGrid {
  std::vector<double> axis_probe;
  std::vector<double> axis_atoms;
  AxisMode mode = AxisMode::BareCoordinates;
  std::vector<GridCell> cells;  // atoms-major: index = ia * axis_probe.size() + ip

  std::size_t index(std::size_t ip, std::size_t ia) const { return ia * axis_probe.size() + ip; }
  const GridCell& at(std::size_t ip, std::size_t ia) const { return cells.at(index(ip, ia)); }

  std::size_t pole_count() const {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [](const GridCell& c) { return c.pole(); }));
  }
};

inline SpectrumGrid sweep(const MoleculeConfig& c, const AxisRange& probe_range,
                          const AxisRange& atoms_range, const Resolution& res, AxisMode mode,
                          const SweepOptions& opts = {}) {
  validate(c);
  if (mode == AxisMode::TildeCoordinates && !c.markovian())
    throw std::invalid_argument("shifted-coordinate sweeps need zero delays");

  SpectrumGrid grid;
  grid.mode = mode;
  grid.axis_probe = uniform_axis(probe_range, res.probe);
  grid.axis_atoms = uniform_axis(atoms_range, res.atoms);
  const std::size_t np = grid.axis_probe.size();
  grid.cells.resize(np * grid.axis_atoms.size());

  const EffectiveCouplings fixed = static_couplings(c);
  parallel_for(grid.cells.size(), opts.workers, [&](std::size_t k) {
    const double x = grid.axis_probe[k % np];
    const double y = grid.axis_atoms[k / np];
    GridCell& cell = grid.cells[k];
    if (mode == AxisMode::TildeCoordinates) {
      // the Lamb shifts are detuning-independent here, so shifted axes map exactly
      cell.couplings = fixed;
      cell.bare = {x + fixed.lamb1, y + fixed.lamb1 - fixed.lamb2};
      try {
        cell.result = scatter_with(c, fixed, {x, y});
      } catch (const PoleError&) {
      }
    } else {
      cell.bare = {x, y};
      cell.couplings = effective_couplings(c, cell.bare);
      try {
        cell.result = scatter_with(c, cell.couplings, to_tilde(cell.couplings, cell.bare));
      } catch (const PoleError&) {
      }
    }
    cell.regime = classify_regime(cell.couplings, opts.critical_tolerance);
  });
  return grid;
}

// ---------------------------------------------------------------------------
// Phase diagram and C = 1 boundary

struct Point2 {
  double probe = 0.0;
  double atoms = 0.0;
};

using Polyline = std::vector<Point2>;

// Grid edge holding a contour vertex. A horizontal edge joins (ip, ia) and
// (ip + 1, ia); a vertical one joins (ip, ia) and (ip, ia + 1).
struct GridEdge {
  std::size_t ip = 0;
  std::size_t ia = 0;
  bool horizontal = true;

  auto operator<=>(const GridEdge&) const = default;
};

struct ContourSegment {
  GridEdge from;
  GridEdge to;
  Point2 p0;
  Point2 p1;
};

struct PhaseDiagram {
  std::vector<double> axis_probe;
  std::vector<double> axis_atoms;
  std::vector<EffectiveCouplings> couplings;  // atoms-major like SpectrumGrid
  std::vector<double> cooperativity;
  std::vector<Regime> regimes;
  std::vector<ContourSegment> segments;
  std::vector<Polyline> boundary;

  std::size_t index(std::size_t ip, std::size_t ia) const { return ia * axis_probe.size() + ip; }

  // Fraction of all cells with C > 1 (decoupled cells count as not strong).
  double strong_fraction() const {
    if (regimes.empty()) return 0.0;
    const auto n = std::count(regimes.begin(), regimes.end(), Regime::Strong);
    return static_cast<double>(n) / static_cast<double>(regimes.size());
  }
};

namespace detail {

// Chains segments sharing a grid edge into polylines. Open chains start at
// edges used once; the remaining closed loops follow in edge order.
inline std::vector<Polyline> chain_segments(const std::vector<ContourSegment>& segs) {
  std::map<GridEdge, std::vector<std::size_t>> incident;
  std::map<GridEdge, Point2> where;
  for (std::size_t s = 0; s < segs.size(); ++s) {
    incident[segs[s].from].push_back(s);
    incident[segs[s].to].push_back(s);
    where[segs[s].from] = segs[s].p0;
    where[segs[s].to] = segs[s].p1;
  }
  std::vector<bool> used(segs.size(), false);
  std::vector<Polyline> lines;

  auto walk = [&](GridEdge start) {
    Polyline line{where[start]};
    GridEdge cur = start;
    for (;;) {
      std::optional<std::size_t> next;
      for (std::size_t s : incident[cur])
        if (!used[s]) {
          next = s;
          break;
        }
      if (!next) break;
      used[*next] = true;
      cur = segs[*next].from == cur ? segs[*next].to : segs[*next].from;
      line.push_back(where[cur]);
    }
    if (line.size() > 1) lines.push_back(std::move(line));
  };

  for (const auto& [edge, list] : incident)
    if (list.size() == 1) walk(edge);
  for (const auto& [edge, list] : incident) walk(edge);
  return lines;
}

}  // namespace detail

inline PhaseDiagram phase_diagram(const MoleculeConfig& c, const AxisRange& probe_range,
                                  const AxisRange& atoms_range, const Resolution& res,
                                  const SweepOptions& opts = {}) {
  validate(c);
  PhaseDiagram pd;
  pd.axis_probe = uniform_axis(probe_range, res.probe);
  pd.axis_atoms = uniform_axis(atoms_range, res.atoms);
  const std::size_t np = pd.axis_probe.size();
  const std::size_t na = pd.axis_atoms.size();
  pd.couplings.resize(np * na);
  pd.cooperativity.resize(np * na);
  pd.regimes.resize(np * na);

  parallel_for(np * na, opts.workers, [&](std::size_t k) {
    const EffectiveCouplings ec =
        effective_couplings(c, {pd.axis_probe[k % np], pd.axis_atoms[k / np]});
    pd.couplings[k] = ec;
    pd.cooperativity[k] = ec.cooperativity;
    pd.regimes[k] = classify_regime(ec, opts.critical_tolerance);
  });

  auto usable = [&](std::size_t ip, std::size_t ia) {
    const std::size_t k = pd.index(ip, ia);
    return pd.regimes[k] != Regime::Decoupled && std::isfinite(pd.cooperativity[k]);
  };
  auto level = [&](std::size_t ip, std::size_t ia) { return pd.cooperativity[pd.index(ip, ia)] - 1.0; };
  auto vertex = [&](const GridEdge& e) {
    const std::size_t ip2 = e.horizontal ? e.ip + 1 : e.ip;
    const std::size_t ia2 = e.horizontal ? e.ia : e.ia + 1;
    const double f0 = level(e.ip, e.ia);
    const double f1 = level(ip2, ia2);
    const double t = f0 / (f0 - f1);
    return Point2{pd.axis_probe[e.ip] + t * (pd.axis_probe[ip2] - pd.axis_probe[e.ip]),
                  pd.axis_atoms[e.ia] + t * (pd.axis_atoms[ia2] - pd.axis_atoms[e.ia])};
  };

  for (std::size_t ia = 0; ia + 1 < na; ++ia) {
    for (std::size_t ip = 0; ip + 1 < np; ++ip) {
      if (!usable(ip, ia) || !usable(ip + 1, ia) || !usable(ip + 1, ia + 1) ||
          !usable(ip, ia + 1))
        continue;
      // corners counter-clockwise from (ip, ia); bit set when C > 1
      const std::array<double, 4> f{level(ip, ia), level(ip + 1, ia), level(ip + 1, ia + 1),
                                    level(ip, ia + 1)};
      int mask = 0;
      for (int q = 0; q < 4; ++q)
        if (f[q] > 0.0) mask |= 1 << q;
      if (mask == 0 || mask == 15) continue;

      const GridEdge bottom{ip, ia, true};
      const GridEdge right{ip + 1, ia, false};
      const GridEdge top{ip, ia + 1, true};
      const GridEdge left{ip, ia, false};
      std::vector<std::pair<GridEdge, GridEdge>> pairs;
      switch (mask) {
        case 1: case 14: pairs = {{left, bottom}}; break;
        case 2: case 13: pairs = {{bottom, right}}; break;
        case 3: case 12: pairs = {{left, right}}; break;
        case 4: case 11: pairs = {{right, top}}; break;
        case 6: case 9: pairs = {{bottom, top}}; break;
        case 7: case 8: pairs = {{left, top}}; break;
        case 5: case 10: {
          // saddle: the centre value decides which corners connect
          const double centre = 0.25 * (f[0] + f[1] + f[2] + f[3]);
          const bool centre_high = centre > 0.0;
          const bool corner0_high = (mask & 1) != 0;
          if (centre_high == corner0_high)
            pairs = {{left, top}, {bottom, right}};
          else
            pairs = {{left, bottom}, {right, top}};
          break;
        }
        default: break;
      }
      for (const auto& [e0, e1] : pairs) pd.segments.push_back({e0, e1, vertex(e0), vertex(e1)});
    }
  }
  pd.boundary = detail::chain_segments(pd.segments);
  return pd;
}

// ---------------------------------------------------------------------------
// 1-D feature extraction

struct Feature {
  double location = 0.0;
  double value = 0.0;
  double fwhm = 0.0;
  double prominence = 0.0;
};

struct FeatureSet {
  std::vector<Feature> peaks;
  std::vector<Feature> dips;
};

struct FeatureOptions {
  double prominence = 1e-4;  // absolute probability
  // Drop features whose half-maximum crossing leaves the window instead of
  // throwing FeatureNotResolved.
  bool skip_unresolved = false;
};

namespace detail {

// Vertex of the parabola through three points; falls back to the middle sample.
inline std::pair<double, double> parabola_vertex(double x0, double y0, double x1, double y1,
                                                 double x2, double y2) {
  const double d0 = (y1 - y0) / (x1 - x0);
  const double d1 = (y2 - y1) / (x2 - x1);
  const double curv = (d1 - d0) / (x2 - x0);
  if (curv == 0.0) return {x1, y1};
  const double xv = 0.5 * (x0 + x1) - d0 / (2.0 * curv);
  if (!(xv >= x0 && xv <= x2)) return {x1, y1};
  const double yv = y1 + (xv - x1) * (d0 + curv * (xv - x0));
  return {xv, yv};
}

// Topographic prominence of the local maximum at i.
inline double prominence_at(std::span<const double> y, std::size_t i) {
  double left_min = y[i];
  for (std::size_t j = i; j-- > 0;) {
    if (y[j] > y[i]) break;
    left_min = std::min(left_min, y[j]);
  }
  double right_min = y[i];
  for (std::size_t j = i + 1; j < y.size(); ++j) {
    if (y[j] > y[i]) break;
    right_min = std::min(right_min, y[j]);
  }
  return y[i] - std::max(left_min, right_min);
}

// Interpolated crossing of `level` walking away from index i; empty if the
// walk reaches the end of the trace first.
inline std::optional<double> crossing(std::span<const double> x, std::span<const double> y,
                                      std::size_t i, double level, bool above, int dir) {
  auto inside = [&](double v) { return above ? v > level : v < level; };
  std::size_t j = i;
  for (;;) {
    if (dir < 0 && j == 0) return std::nullopt;
    if (dir > 0 && j + 1 >= y.size()) return std::nullopt;
    const std::size_t k = dir < 0 ? j - 1 : j + 1;
    if (!inside(y[k])) {
      const double t = (level - y[j]) / (y[k] - y[j]);
      return x[j] + t * (x[k] - x[j]);
    }
    j = k;
  }
}

inline std::vector<Feature> find_maxima(std::span<const double> x, std::span<const double> y,
                                        const FeatureOptions& opts, bool dips,
                                        double background) {
  std::vector<Feature> out;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (!(y[i] > y[i - 1] && y[i] >= y[i + 1])) continue;
    const double prom = prominence_at(y, i);
    if (prom < opts.prominence) continue;
    auto [xv, yv] = parabola_vertex(x[i - 1], y[i - 1], x[i], y[i], x[i + 1], y[i + 1]);
    // y holds the sign-flipped trace for dips
    const double half = dips ? 0.5 * (yv + background) : 0.5 * yv;
    const auto lo = crossing(x, y, i, half, true, -1);
    const auto hi = crossing(x, y, i, half, true, +1);
    if (!lo || !hi) {
      if (opts.skip_unresolved) continue;
      throw FeatureNotResolved("half-maximum crossing outside the scan window near x = " +
                               std::to_string(x[i]));
    }
    out.push_back({xv, dips ? -yv : yv, *hi - *lo, prom});
  }
  return out;
}

}  // namespace detail

// Peaks and dips of a sampled probability trace. Peak widths are measured at
// half the peak value (zero background); dip widths at half depth below the
// trace maximum. Extrema are refined by a three-point parabola.
inline FeatureSet find_features_1d(std::span<const double> x, std::span<const double> y,
                                   const FeatureOptions& opts = {}) {
  if (x.size() != y.size()) throw std::invalid_argument("trace axes differ in length");
  if (y.size() < 5) throw std::invalid_argument("trace needs at least 5 samples");
  for (std::size_t k = 1; k < x.size(); ++k)
    if (!(x[k] > x[k - 1])) throw std::invalid_argument("trace abscissa must increase");

  FeatureSet fs;
  fs.peaks = detail::find_maxima(x, y, opts, false, 0.0);
  std::vector<double> flipped(y.size());
  std::transform(y.begin(), y.end(), flipped.begin(), [](double v) { return -v; });
  const double background = *std::max_element(y.begin(), y.end());
  fs.dips = detail::find_maxima(x, flipped, opts, true, -background);
  return fs;
}

// ---------------------------------------------------------------------------
// Self-consistent resonances

struct Resonances {
  std::vector<double> atom1;  // roots of Delta - lamb1(phi_a(Delta))
  std::vector<double> atom2;  // roots of (Delta - delta) - lamb2(phi_b(Delta, delta))
};

inline constexpr double kResonanceResidual = 1e-10;

namespace detail {

template <class F>
std::vector<double> bracket_roots(F&& f, const AxisRange& w, int samples) {
  std::vector<double> roots;
  const std::vector<double> xs = uniform_axis(w, samples + 1);
  std::vector<double> fs(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) fs[k] = f(xs[k]);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (fs[k] == 0.0) {
      roots.push_back(xs[k]);
      continue;
    }
    if (k + 1 >= xs.size() || fs[k + 1] == 0.0 || (fs[k] > 0.0) == (fs[k + 1] > 0.0)) continue;
    double lo = xs[k], hi = xs[k + 1];
    double flo = fs[k];
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double fm = f(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm > 0.0) == (flo > 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    roots.push_back(std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi);
  }
  return roots;
}

}  // namespace detail

// Sign-change bracketing on `samples` uniform steps plus bisection. Tangential
// roots without a sign change are not reported.
inline Resonances locate_resonances(const MoleculeConfig& c, double delta_atoms,
                                    const AxisRange& probe_window, int samples = 4096) {
  validate(c);
  if (!std::isfinite(probe_window.min) || !std::isfinite(probe_window.max))
    throw std::invalid_argument("probe window must be finite");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  Resonances r;
  r.atom1 = detail::bracket_roots(
      [&](double x) { return x - lamb_shift(c.n1, c.phi_a_static + x * c.tau_a); }, probe_window,
      samples);
  r.atom2 = detail::bracket_roots(
      [&](double x) {
        const double y = x - delta_atoms;
        return y - lamb_shift(c.n2, c.phi_b_static + y * c.tau_b);
      },
      probe_window, samples);
  return r;
}

// ---------------------------------------------------------------------------
// Optimal transfer into waveguide B

struct OptimumPoint {
  Detunings bare;
  TildeDetunings tilde;
  double transfer = 0.0;  // T13 (symmetric) or T14 (ideal chiral)
  bool analytic = true;
};

struct OptimizeOptions {
  // Search window for the numerical (non-Markovian) optimum; centred on the
  // Markovian resonance with half-width 4 (Omega + gamma1 + gamma2) when empty.
  std::optional<AxisRange> probe_window;
  std::optional<AxisRange> atoms_window;
  int coarse = 161;
  int refine_rounds = 6;
};

inline double transfer_probability(const MoleculeConfig& c, const ScatteringResult& r) {
  return c.chirality == Chirality::IdealChiral ? r.probs.t14 : r.probs.t13;
}

namespace detail {

template <class F>
double golden_max(F&& f, double lo, double hi, int iters = 80) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int k = 0; k < iters; ++k) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  return f1 > f2 ? x1 : x2;
}

inline double safe_transfer(const MoleculeConfig& c, const Detunings& d) {
  try {
    return transfer_probability(c, scatter(c, d));
  } catch (const PoleError&) {
    return -1.0;
  }
}

}  // namespace detail

// Markovian: closed-form stationary points (two for C > 1, the origin
// otherwise) in shifted coordinates. With delays: coarse grid search followed
// by alternating golden-section refinement; returns the single best point.
inline std::vector<OptimumPoint> optimal_transfer(const MoleculeConfig& c,
                                                  const OptimizeOptions& opts = {}) {
  validate(c);
  const EffectiveCouplings ec = static_couplings(c);
  std::vector<OptimumPoint> out;

  if (c.markovian()) {
    auto make = [&](double tp, double ta, bool analytic) {
      OptimumPoint p;
      p.tilde = {tp, ta};
      p.bare = {tp + ec.lamb1, ta + ec.lamb1 - ec.lamb2};
      p.transfer = transfer_probability(c, scatter_with(c, ec, p.tilde));
      p.analytic = analytic;
      return p;
    };
    const bool decoupled = ec.gamma1 <= kVanishingRate || ec.gamma2 <= kVanishingRate;
    if (!decoupled && ec.cooperativity > 1.0) {
      const double s = std::sqrt(ec.cooperativity - 1.0);
      const double tp = ec.gamma1 * s;
      const double ta = (1.0 - 1.0 / ec.ratio) * tp;  // (gamma1 - gamma2) sqrt(C - 1)
      out.push_back(make(tp, ta, true));
      out.push_back(make(-tp, -ta, true));
    } else {
      out.push_back(make(0.0, 0.0, true));
    }
    return out;
  }

  const double half = 4.0 * (c.omega + ec.gamma1 + ec.gamma2);
  const AxisRange pw = opts.probe_window.value_or(AxisRange{ec.lamb1 - half, ec.lamb1 + half});
  const double centre_atoms = ec.lamb1 - ec.lamb2;
  const AxisRange aw =
      opts.atoms_window.value_or(AxisRange{centre_atoms - half, centre_atoms + half});
  const std::vector<double> xs = uniform_axis(pw, opts.coarse);
  const std::vector<double> ys = uniform_axis(aw, opts.coarse);

  double best = -1.0;
  Detunings arg{xs[0], ys[0]};
  for (double y : ys)
    for (double x : xs) {
      const double v = detail::safe_transfer(c, {x, y});
      if (v > best) {
        best = v;
        arg = {x, y};
      }
    }

  const double hx = xs.size() > 1 ? xs[1] - xs[0] : 1.0;
  const double hy = ys.size() > 1 ? ys[1] - ys[0] : 1.0;
  for (int round = 0; round < opts.refine_rounds; ++round) {
    arg.delta_probe = detail::golden_max(
        [&](double x) { return detail::safe_transfer(c, {x, arg.delta_atoms}); },
        arg.delta_probe - hx, arg.delta_probe + hx);
    arg.delta_atoms = detail::golden_max(
        [&](double y) { return detail::safe_transfer(c, {arg.delta_probe, y}); },
        arg.delta_atoms - hy, arg.delta_atoms + hy);
  }
  const ScatteringResult r = scatter(c, arg);
  const double refined = transfer_probability(c, r);
  OptimumPoint p;
  if (refined >= best) {
    p.bare = arg;
    p.transfer = refined;
    p.tilde = {r.tilde_delta, r.tilde_small_delta};
  } else {
    // refinement wandered off a ridge; keep the grid point (not expected)
    p.transfer = best;
  }
  p.analytic = false;
  out.push_back(p);
  return out;
}

// ---------------------------------------------------------------------------
// Anti-crossing gap

struct GapOptions {
  std::optional<double> half_width;  // default 4 (Omega + gamma1 + gamma2)
  int samples = 20001;
  double prominence = 1e-4;
};

// Trace of T12 through the resonant intersection. Markovian: along Delta~ at
// delta~ = 0. With delays: along bare Delta at the Markovian intersection
// delta = lamb1 - lamb2 (static phases).
inline std::pair<std::vector<double>, std::vector<double>> intersection_trace(
    const MoleculeConfig& c, const GapOptions& opts = {}) {
  validate(c);
  const EffectiveCouplings ec = static_couplings(c);
  const double half = opts.half_width.value_or(4.0 * (c.omega + ec.gamma1 + ec.gamma2));
  std::vector<double> x, y;
  if (c.markovian()) {
    x = uniform_axis({-half, half}, opts.samples);
    y.reserve(x.size());
    for (double v : x) y.push_back(scatter_with(c, ec, {v, 0.0}).probs.t12);
  } else {
    x = uniform_axis({ec.lamb1 - half, ec.lamb1 + half}, opts.samples);
    y.reserve(x.size());
    const double delta = ec.lamb1 - ec.lamb2;
    for (double v : x) y.push_back(scatter(c, {v, delta}).probs.t12);
  }
  return {std::move(x), std::move(y)};
}

inline double anticrossing_gap(const MoleculeConfig& c, const GapOptions& opts = {}) {
  const auto [x, y] = intersection_trace(c, opts);
  FeatureOptions fo;
  fo.prominence = opts.prominence;
  fo.skip_unresolved = true;
  FeatureSet fs = find_features_1d(x, y, fo);
  if (fs.dips.size() < 2)
    throw GapUnresolved("fewer than two transmission dips at the resonant intersection");
  std::sort(fs.dips.begin(), fs.dips.end(),
            [](const Feature& a, const Feature& b) { return a.prominence > b.prominence; });
  return std::abs(fs.dips[0].location - fs.dips[1].location);
}

}  // namespace giantmol
