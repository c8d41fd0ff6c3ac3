#include "saext/spectrum.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "saext/errors.hpp"

namespace saext {

namespace {

const cplx kI{0.0, 1.0};
constexpr double kAcceptSigma = 1e-7;
constexpr double kDegenerate = 1e-5;
constexpr double kResidualGate = 1e-6;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPhaseNoise = 1e-9;
constexpr double kReliableDefect = 1e-8;
constexpr double kIsolate = 1e-7;
constexpr double kWellConditioned = 1e-4;
constexpr int kMaxSplit = 40;

double isolation_width(double E) { return kIsolate * std::max(1.0, std::abs(E)); }

double endpoint_scale(const OdeSolution& u) {
  return std::max({std::abs(u.f0), std::abs(u.df0), std::abs(u.f1), std::abs(u.df1)});
}

/// sigma_min / sigma_max of the endpoint data (f(a), f'(a), f(-a), f'(-a)) of u and v,
/// each column scaled to unit largest entry.
double pair_condition(const OdeSolution& u, const OdeSolution& v) {
  Eigen::Matrix<cplx, 4, 2> data;
  const std::array<const OdeSolution*, 2> us{&u, &v};
  for (int k = 0; k < 2; ++k) {
    const auto& w = *us[k];
    data.col(k) << w.f1, w.df1, w.f0, w.df0;
    data.col(k) /= endpoint_scale(w);
  }
  const Eigen::JacobiSVD<Eigen::Matrix<cplx, 4, 2>> svd(data);
  const auto& sv = svd.singularValues();
  return sv(0) > 0.0 ? sv(1) / sv(0) : 0.0;
}

OdeSolution reversed(OdeSolution u) {
  std::reverse(u.samples.begin(), u.samples.end());
  std::swap(u.x0, u.x1);
  std::swap(u.f0, u.f1);
  std::swap(u.df0, u.df1);
  return u;
}

PhasePoint phases_of(const Matrix2c& W) {
  const Eigen::ComplexEigenSolver<Matrix2c> es(W, false);
  PhasePoint out;
  for (int k = 0; k < 2; ++k) {
    const double t = std::arg(es.eigenvalues()(k));
    out.theta[k] = t < 0.0 ? t + kTwoPi : t;
  }
  out.arg_det = std::arg(W.determinant());
  out.defect = W.allFinite() ? unitarity_defect(W) : std::numeric_limits<double>::infinity();
  return out;
}

Matrix2c gap_matrix(const Potential& p, const Matrix2c& Ucal, double E, const OdeOptions& opt) {
  return boundary_unitary(stable_pair(p, E, opt), Ucal) - Matrix2c::Identity();
}

int count_between(const Potential& p, const Matrix2c& Ucal, const PhasePoint& l, const PhasePoint& r,
                  const OdeOptions& opt, int depth) {
  double turn = std::remainder(r.arg_det - l.arg_det, kTwoPi);
  if (turn > kPhaseNoise) {
    turn -= kTwoPi;
  } else if (turn > 0.0) {
    turn = 0.0;
  }
  const double winding = (r.theta[0] + r.theta[1] - l.theta[0] - l.theta[1] - turn) / kTwoPi;
  const bool resolved = turn > -0.5 * std::numbers::pi && std::abs(winding - std::round(winding)) < 1e-3;
  if (resolved || depth >= kMaxSplit || r.E - l.E <= isolation_width(r.E)) {
    return std::max(0, static_cast<int>(std::lround(winding)));
  }
  const auto m = phases_at(p, Ucal, 0.5 * (l.E + r.E), opt);
  if (!(m.defect <= kReliableDefect)) return -1;
  const int left = count_between(p, Ucal, l, m, opt, depth + 1);
  const int right = count_between(p, Ucal, m, r, opt, depth + 1);
  return left < 0 || right < 0 ? -1 : left + right;
}

struct GridPoint {
  double gap = 0.0;  // |det(W - I)|
  PhasePoint phase;
};

GridPoint grid_point(const Potential& p, const Matrix2c& Ucal, double E, const OdeOptions& opt) {
  const Matrix2c W = boundary_unitary(stable_pair(p, E, opt), Ucal);
  GridPoint g{std::abs((W - Matrix2c::Identity()).determinant()), phases_of(W)};
  g.phase.E = E;
  return g;
}

std::vector<GridPoint> scan_grid(const Potential& p, const Matrix2c& Ucal, const std::vector<double>& energies,
                                 const OdeOptions& opt, int threads) {
  std::vector<GridPoint> out(energies.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < energies.size(); ++i) out[i] = grid_point(p, Ucal, energies[i], opt);
    return out;
  }
  const auto n = static_cast<long>(energies.size());
  bool failed = false;
  std::string failure;
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = grid_point(p, Ucal, energies[i], opt);
    } catch (const std::exception& e) {
#pragma omp critical
      {
        failed = true;
        failure = e.what();
      }
    }
  }
  if (failed) throw IntegrationError("scan failed: " + failure, 0.0);
  return out;
}

OdeSolution normalized(const OdeSolution& f) {
  const double n = std::sqrt(std::real(l2_inner(f, f)));
  // Fix the phase: the largest sample is real and positive.
  const auto peak = std::max_element(f.samples.begin(), f.samples.end(),
                                     [](const auto& l, const auto& r) { return std::abs(l.f) < std::abs(r.f); });
  const cplx phase = std::abs(peak->f) > 0.0 ? std::conj(peak->f) / std::abs(peak->f) : cplx{1.0};
  return scaled(f, phase / n);
}

double worst_bc_residual(const Matrix2c& U, const std::vector<OdeSolution>& fs) {
  double worst = 0.0;
  for (const auto& f : fs) worst = std::max(worst, apply_bc(U, f.f1, f.f0, f.df1, f.df0));
  return worst;
}

// Fourth-order first derivative of y at index i within [lo, hi] (uniform spacing h).
cplx derivative5(const std::vector<cplx>& y, std::size_t i, std::size_t lo, std::size_t hi, double h) {
  if (i >= lo + 2 && i + 2 <= hi) {
    return (y[i - 2] - 8.0 * y[i - 1] + 8.0 * y[i + 1] - y[i + 2]) / (12.0 * h);
  }
  if (i == lo) {
    return (-25.0 * y[i] + 48.0 * y[i + 1] - 36.0 * y[i + 2] + 16.0 * y[i + 3] - 3.0 * y[i + 4]) /
           (12.0 * h);
  }
  if (i == lo + 1) {
    return (-3.0 * y[i - 1] - 10.0 * y[i] + 18.0 * y[i + 1] - 6.0 * y[i + 2] + y[i + 3]) / (12.0 * h);
  }
  if (i == hi) {
    return (25.0 * y[i] - 48.0 * y[i - 1] + 36.0 * y[i - 2] - 16.0 * y[i - 3] + 3.0 * y[i - 4]) /
           (12.0 * h);
  }
  return (3.0 * y[i + 1] + 10.0 * y[i] - 18.0 * y[i - 1] + 6.0 * y[i - 2] - y[i - 3]) / (12.0 * h);
}

// Brent on sigma_min only resolves about half the mantissa. A real projection of
// det(W - I) (simple roots) or of W - I itself (double roots, where it vanishes)
// changes sign across the root, so a bracketing solver finishes the job.
double polish_root(const Potential& p, const Matrix2c& Ucal, double E, bool degenerate,
                   const OdeOptions& opt) {
  const auto probe = [&](double e) { return gap_matrix(p, Ucal, e, opt); };
  const auto project = [&](const Matrix2c& G, const Matrix2c& ref) {
    if (degenerate) return std::real((ref.adjoint() * G).trace());
    return std::real(std::conj(ref.determinant()) * G.determinant());
  };
  // Levels weakly coupled to the boundary turn W quickly; narrower brackets keep the
  // projection single-signed on each side.
  for (const double rel : {1e-6, 1e-7, 1e-8}) {
    const double delta = rel * std::max(1.0, std::abs(E));
    const double lo = E - delta, hi = E + delta;
    const Matrix2c ref = probe(hi);
    const double g_lo = project(probe(lo), ref);
    const double g_hi = project(ref, ref);
    if (!(g_lo < 0.0 && g_hi > 0.0)) continue;
    const auto g = [&](double e) { return project(probe(e), ref); };
    std::uintmax_t iters = 100;
    const auto bracket = boost::math::tools::toms748_solve(
        g, lo, hi, g_lo, g_hi, boost::math::tools::eps_tolerance<double>(50), iters);
    return 0.5 * (bracket.first + bracket.second);
  }
  return E;
}

}  // namespace

ShootingPair shoot(const Potential& p, double E, const OdeOptions& options) {
  const double a = p.half_width();
  return {integrate(p, E, -a, a, 1.0, 0.0, options), integrate(p, E, -a, a, 0.0, 1.0, options)};
}

ShootingPair stable_pair(const Potential& p, double E, const OdeOptions& options) {
  auto left = shoot(p, E, options);
  if (pair_condition(left.u1, left.u2) >= kWellConditioned) return left;
  const double a = p.half_width();
  const std::array<OdeSolution, 4> all{std::move(left.u1), std::move(left.u2),
                                       reversed(integrate(p, E, a, -a, 1.0, 0.0, options)),
                                       reversed(integrate(p, E, a, -a, 0.0, 1.0, options))};
  std::size_t bi = 0, bj = 1;
  double best = -1.0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const double c = pair_condition(all[i], all[j]);
      if (c > best) {
        best = c;
        bi = i;
        bj = j;
      }
    }
  }
  return {all[bi], all[bj]};
}

BoundaryMatrix boundary_matrix(const ShootingPair& shots, const Matrix2c& Ucal) {
  BoundaryMatrix bm;
  bm.reference = 0.0;
  const std::array<const OdeSolution*, 2> us{&shots.u1, &shots.u2};
  for (int k = 0; k < 2; ++k) {
    const auto& u = *us[k];
    const double s = endpoint_scale(u);
    bm.column_scale[k] = s;
    const Vector2c minus{(u.df1 - kI * u.f1) / s, (u.df0 + kI * u.f0) / s};
    const Vector2c plus{(u.df1 + kI * u.f1) / s, (u.df0 - kI * u.f0) / s};
    const Vector2c mapped = Ucal * plus;
    bm.M.col(k) = minus - mapped;
    bm.reference = std::max(bm.reference, minus.norm() + mapped.norm());
  }
  return bm;
}

Matrix2c boundary_unitary(const ShootingPair& shots, const Matrix2c& Ucal) {
  Matrix2c minus, plus;
  const std::array<const OdeSolution*, 2> us{&shots.u1, &shots.u2};
  for (int k = 0; k < 2; ++k) {
    const auto& u = *us[k];
    const double s = endpoint_scale(u);
    minus.col(k) = Vector2c{(u.df1 - kI * u.f1) / s, (u.df0 + kI * u.f0) / s};
    plus.col(k) = Vector2c{(u.df1 + kI * u.f1) / s, (u.df0 - kI * u.f0) / s};
  }
  return Ucal.adjoint() * minus * plus.inverse();
}

PhasePoint boundary_phases(const ShootingPair& shots, const Matrix2c& Ucal) {
  return phases_of(boundary_unitary(shots, Ucal));
}

PhasePoint phases_at(const Potential& p, const Matrix2c& Ucal, double E, const OdeOptions& options) {
  auto out = boundary_phases(stable_pair(p, E, options), Ucal);
  out.E = E;
  return out;
}

int count_eigenvalues(const Potential& p, const Matrix2c& Ucal, const PhasePoint& l, const PhasePoint& r,
                      const OdeOptions& options) {
  if (!(l.defect <= kReliableDefect && r.defect <= kReliableDefect)) return -1;
  const double step = std::pow(std::numbers::pi / (2.0 * p.half_width()), 2) / 8.0;
  const int pieces = std::max(1, static_cast<int>(std::ceil((r.E - l.E) / step)));
  int total = 0;
  PhasePoint from = l;
  for (int k = 1; k <= pieces; ++k) {
    const PhasePoint to = k == pieces ? r : phases_at(p, Ucal, l.E + (r.E - l.E) * k / pieces, options);
    if (!(to.defect <= kReliableDefect)) return -1;
    const int n = count_between(p, Ucal, from, to, options, 0);
    if (n < 0) return -1;
    total += n;
    from = to;
  }
  return total;
}

cplx det_function(const Potential& p, const BoundaryCondition& bc, double E,
                  const OdeOptions& options) {
  return boundary_matrix(shoot(p, E, options), bc.Ucal.matrix()).M.determinant();
}

std::vector<double> scan_det_serial(const Potential& p, const Matrix2c& Ucal,
                                    const std::vector<double>& energies, const OdeOptions& options) {
  std::vector<double> out(energies.size());
  for (std::size_t i = 0; i < energies.size(); ++i) {
    out[i] = std::abs(boundary_matrix(shoot(p, energies[i], options), Ucal).M.determinant());
  }
  return out;
}

std::vector<double> scan_det_parallel(const Potential& p, const Matrix2c& Ucal,
                                      const std::vector<double>& energies,
                                      const OdeOptions& options, int threads) {
  std::vector<double> out(energies.size());
  const auto n = static_cast<long>(energies.size());
  bool failed = false;
  std::string failure;
#pragma omp parallel for schedule(dynamic, 4) num_threads(std::max(1, threads))
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = std::abs(boundary_matrix(shoot(p, energies[i], options), Ucal).M.determinant());
    } catch (const std::exception& e) {
#pragma omp critical
      {
        failed = true;
        failure = e.what();
      }
    }
  }
  if (failed) throw IntegrationError("scan failed: " + failure, 0.0);
  return out;
}

double default_e_min(const Potential& p, const BoundaryCondition& bc) {
  // Eigenvalue e^{i chi} of U acts like a Robin coefficient -cot(chi/2); positive values bind.
  const Eigen::ComplexEigenSolver<Matrix2c> es(bc.Ucal.matrix());
  double h = 0.0;
  for (int k = 0; k < 2; ++k) {
    const cplx z = es.eigenvalues()(k);
    if (std::abs(z - 1.0) <= 1e-8) continue;  // Dirichlet component
    double chi = std::arg(z);
    if (chi < 0.0) chi += 2.0 * std::numbers::pi;
    h = std::max(h, -1.0 / std::tan(0.5 * chi));
  }
  const double a = p.half_width();
  return -p.sup_norm() - 1.0 - 2.0 * std::max(h * h, h / a);
}

int default_grid(double a, double e_min, double e_max) {
  const double step = std::pow(std::numbers::pi / (2.0 * a), 2) / 8.0;
  return std::max(16, static_cast<int>(std::ceil((e_max - e_min) / step)));
}

SpectrumResult find_eigenvalues(const Potential& p, const BoundaryCondition& bc,
                                const ScanOptions& opt) {
  if (!(opt.e_min < opt.e_max)) throw ParameterError("scan range is empty (need e_min < e_max)");
  if (opt.grid < 16) throw ParameterError("scan grid must be >= 16");
  const Matrix2c& U = bc.Ucal.matrix();

  std::vector<double> energies(opt.grid + 1);
  for (int i = 0; i <= opt.grid; ++i) {
    energies[i] = opt.e_min + (opt.e_max - opt.e_min) * i / opt.grid;
  }
  const auto grid = scan_grid(p, U, energies, opt.ode, opt.threads);

  SpectrumResult r{.bc = bc, .potential = p};
  r.det_trace.reserve(energies.size());
  for (std::size_t i = 0; i < energies.size(); ++i) r.det_trace.emplace_back(energies[i], grid[i].gap);

  struct Root {
    double E;
    double sigma;
    int degeneracy;
    std::vector<OdeSolution> modes;
    double residual;
  };
  std::vector<Root> roots;

  // Polishes a candidate near E and stores it when it passes the acceptance gates.
  const auto consider = [&](double E) {
    // Two levels inside the polishing bracket form a double root; an unreliable count falls
    // back to both singular values of W - I vanishing.
    const double w = 10.0 * isolation_width(E);
    const int nearby = count_eigenvalues(p, U, phases_at(p, U, E - w, opt.ode), phases_at(p, U, E + w, opt.ode),
                                         opt.ode);
    const bool degenerate =
        nearby < 0 ? singular_values(gap_matrix(p, U, E, opt.ode)).max <= kDegenerate : nearby >= 2;
    E = polish_root(p, U, E, degenerate, opt.ode);
    const auto shots = stable_pair(p, E, opt.ode);
    const auto sv = singular_values(boundary_unitary(shots, U) - Matrix2c::Identity());
    if (!(sv.min <= kAcceptSigma)) return;
    const auto bm = boundary_matrix(shots, U);

    Root root{E, sv.min, degenerate ? 2 : 1, {}, 0.0};
    if (root.degeneracy == 2) {
      auto f1 = normalized(shots.u1);
      const cplx c = l2_inner(f1, shots.u2);
      auto f2 = normalized(combine(1.0, shots.u2, -c, f1));
      root.modes = {std::move(f1), std::move(f2)};
    } else {
      const Eigen::JacobiSVD<Matrix2c> svd(bm.M, Eigen::ComputeFullV);
      const Vector2c v = svd.matrixV().col(1);
      root.modes = {normalized(combine(v(0) / bm.column_scale[0], shots.u1,
                                       v(1) / bm.column_scale[1], shots.u2))};
    }
    root.residual = worst_bc_residual(U, root.modes);
    double sym = 0.0;
    for (const auto& f : root.modes) sym = std::max(sym, symmetry_defect(f));
    if (!(root.residual <= kResidualGate && sym <= kResidualGate)) {
      std::ostringstream msg;
      msg << "root at E = " << E << " rejected: boundary residual " << root.residual
          << ", symmetry defect " << sym;
      r.diagnostics.push_back(msg.str());
      return;
    }
    roots.push_back(std::move(root));
  };

  const std::size_t last = energies.size() - 1;
  for (std::size_t i = 0; i <= last; ++i) {
    const bool left_ok = i == 0 || grid[i].gap <= grid[i - 1].gap;
    const bool right_ok = i == last || grid[i].gap <= grid[i + 1].gap;
    if (!left_ok || !right_ok) continue;

    const double lo = energies[i == 0 ? 0 : i - 1];
    const double hi = energies[i == last ? last : i + 1];
    double E = energies[i];
    try {
      // sigma_min vanishes linearly at roots of either multiplicity, unlike |det|.
      const auto objective = [&](double e) { return singular_values(gap_matrix(p, U, e, opt.ode)).min; };
      std::uintmax_t iters = 200;
      E = boost::math::tools::brent_find_minima(objective, lo, hi, 46, iters).first;
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "candidate near E = " << energies[i] << " skipped: " << e.what();
      r.diagnostics.push_back(msg.str());
      continue;
    }
    consider(E);
  }

  // Two levels inside one grid cell leave a single minimum of |det|. The phase winding
  // counts the levels per cell; cells short of roots are bisected on that count.
  const auto accepted_in = [&](double lo, double hi) {
    int n = 0;
    for (const auto& root : roots) {
      if (root.E > lo - isolation_width(lo) && root.E <= hi + isolation_width(hi)) n += root.degeneracy;
    }
    return n;
  };
  std::function<void(const PhasePoint&, const PhasePoint&, int)> isolate =
      [&](const PhasePoint& l, const PhasePoint& h, int count) {
        if (count <= 0) return;
        const double mid = 0.5 * (l.E + h.E);
        if (h.E - l.E <= isolation_width(mid)) {
          consider(mid);
          return;
        }
        const auto m = phases_at(p, U, mid, opt.ode);
        const int left = count_eigenvalues(p, U, l, m, opt.ode);
        const int right = count_eigenvalues(p, U, m, h, opt.ode);
        if (left < 0 || right < 0) return;
        isolate(l, m, left);
        isolate(m, h, right);
      };
  for (std::size_t i = 0; i < last; ++i) {
    const auto& l = grid[i].phase;
    const auto& h = grid[i + 1].phase;
    const int expected = count_eigenvalues(p, U, l, h, opt.ode);
    if (expected <= accepted_in(l.E, h.E)) continue;
    try {
      isolate(l, h, expected);
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "cell [" << l.E << ", " << h.E << "] search failed: " << e.what();
      r.diagnostics.push_back(msg.str());
      continue;
    }
    const int found = accepted_in(l.E, h.E);
    if (found < expected) {
      std::ostringstream msg;
      msg << "cell [" << l.E << ", " << h.E << "] holds " << expected << " eigenvalues, " << found
          << " accepted";
      r.diagnostics.push_back(msg.str());
    }
  }

  // Merge repeated detections of one root; neighbours the phase count separates stay apart.
  const auto distinct = [&](const Root& a, const Root& b) {
    const auto l = phases_at(p, U, a.E - 10.0 * isolation_width(a.E), opt.ode);
    const auto h = phases_at(p, U, b.E + 10.0 * isolation_width(b.E), opt.ode);
    return count_eigenvalues(p, U, l, h, opt.ode) >= a.degeneracy + b.degeneracy;
  };
  std::sort(roots.begin(), roots.end(), [](const Root& l, const Root& r) { return l.E < r.E; });
  const double dedup = (opt.e_max - opt.e_min) / (10.0 * opt.grid);
  std::vector<Root> unique;
  for (auto& root : roots) {
    if (!unique.empty() && root.E - unique.back().E < dedup && !distinct(unique.back(), root)) {
      if (root.sigma < unique.back().sigma) unique.back() = std::move(root);
      continue;
    }
    unique.push_back(std::move(root));
  }
  for (auto& root : unique) {
    r.eigenvalues.push_back(root.E);
    r.degeneracies.push_back(root.degeneracy);
    r.residuals.push_back(root.residual);
    r.eigenfunctions.push_back(std::move(root.modes));
  }
  return r;
}

double symmetry_defect(const OdeSolution& f) {
  const auto& lo = f.samples.front();
  const auto& hi = f.samples.back();
  const auto form = [](const OdeSample& s) { return std::conj(s.df) * s.f - std::conj(s.f) * s.df; };
  const double sign = hi.x > lo.x ? 1.0 : -1.0;
  return std::abs(sign * (form(hi) - form(lo)));
}

double equation_defect(const Potential& p, const OdeSolution& f, double E) {
  std::vector<OdeSample> s = f.samples;
  if (s.front().x > s.back().x) std::reverse(s.begin(), s.end());
  std::vector<cplx> df(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) df[i] = s[i].df;

  // Segment boundaries are the samples sitting exactly on breakpoints.
  std::vector<std::size_t> cuts{0};
  const auto bps = p.breakpoints();
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (std::find(bps.begin(), bps.end(), s[i].x) != bps.end()) cuts.push_back(i);
  }
  cuts.push_back(s.size() - 1);

  double total = 0.0;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const std::size_t lo = cuts[c], hi = cuts[c + 1];
    if (hi - lo < 4) throw GridError("segment too short for fourth-order differences");
    const double h = (s[hi].x - s[lo].x) / static_cast<double>(hi - lo);
    const std::size_t segment = p.segment_of(0.5 * (s[lo].x + s[hi].x));
    std::vector<double> x;
    std::vector<cplx> r2;
    for (std::size_t i = lo; i <= hi; ++i) {
      const cplx d2 = derivative5(df, i, lo, hi, h);
      const cplx res = -d2 + (p.evaluate_in_segment(segment, s[i].x) - E) * s[i].f;
      x.push_back(s[i].x);
      r2.push_back(std::norm(res));
    }
    total += std::real(simpson(x, r2));
  }
  return std::sqrt(std::max(0.0, total));
}

ResidualReport eigenfunction_residuals(const SpectrumResult& r) {
  ResidualReport rep;
  const Matrix2c& U = r.bc.Ucal.matrix();
  for (std::size_t k = 0; k < r.eigenvalues.size(); ++k) {
    for (const auto& f : r.eigenfunctions[k]) {
      const double b = apply_bc(U, f.f1, f.f0, f.df1, f.df0);
      const double s = symmetry_defect(f);
      const double e = equation_defect(r.potential, f, r.eigenvalues[k]);
      rep.boundary.push_back(b);
      rep.symmetry.push_back(s);
      rep.equation.push_back(e);
      rep.worst_boundary = std::max(rep.worst_boundary, b);
      rep.worst_symmetry = std::max(rep.worst_symmetry, s);
      rep.worst_equation = std::max(rep.worst_equation, e);
    }
  }
  return rep;
}

}  // namespace saext
