#include "saext/odesolve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "saext/errors.hpp"

namespace saext {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

struct State {
  cplx f, df;
};

State operator+(State a, State b) { return {a.f + b.f, a.df + b.df}; }
State operator*(double s, State a) { return {s * a.f, s * a.df}; }

class Stepper {
 public:
  Stepper(const Potential& p, cplx lambda, std::size_t segment, const OdeOptions& opt)
      : p_(p), lambda_(lambda), segment_(segment), opt_(opt) {}

  // Advances y from x to x_end with adaptive substeps; h carries the step guess across calls.
  void advance(double x, double x_end, State& y, double& h) const {
    const double dir = x_end > x ? 1.0 : -1.0;
    const double span = std::abs(x_end - x);
    double remaining = span;
    if (h <= 0.0 || h > span) h = span;
    int rejects = 0;
    while (remaining > 0.0) {
      double step = std::min(h, remaining);
      // A sliver left after this step would be absorbed anyway; take it now.
      const bool last = step >= remaining * (1.0 - 1e-6);
      if (last) step = remaining;
      const double hmin = 1e-14 * std::max(1.0, std::abs(x)) + 1e-300;
      if (step < hmin) throw IntegrationError("step size underflow", x);

      State k1 = rhs(x, y);
      State k2 = rhs(x + dir * c2 * step, y + (dir * step) * (a21 * k1));
      State k3 = rhs(x + dir * c3 * step, y + (dir * step) * (a31 * k1 + a32 * k2));
      State k4 = rhs(x + dir * c4 * step, y + (dir * step) * (a41 * k1 + a42 * k2 + a43 * k3));
      State k5 = rhs(x + dir * c5 * step,
                     y + (dir * step) * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
      State k6 = rhs(x + dir * step,
                     y + (dir * step) * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
      State y_new =
          y + (dir * step) * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      State k7 = rhs(x + dir * step, y_new);
      State err =
          (dir * step) * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

      const double sf = opt_.atol + opt_.rtol * std::max(std::abs(y.f), std::abs(y_new.f));
      const double sd = opt_.atol + opt_.rtol * std::max(std::abs(y.df), std::abs(y_new.df));
      const double ratio = std::max(std::abs(err.f) / sf, std::abs(err.df) / sd);
      if (!std::isfinite(ratio)) throw IntegrationError("non-finite solution", x);

      const double factor =
          ratio == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
      if (ratio <= 1.0) {
        y = y_new;
        x = last ? x_end : x + dir * step;
        remaining = last ? 0.0 : remaining - step;
        // Keep the pre-clip step as the next guess so short final substeps don't shrink it.
        if (!last || factor < 1.0) h = step * factor;
        rejects = 0;
      } else {
        h = step * factor;
        if (++rejects > 200) throw IntegrationError("too many rejected steps", x);
      }
    }
  }

 private:
  State rhs(double x, const State& y) const {
    return {y.df, (p_.evaluate_in_segment(segment_, x) - lambda_) * y.f};
  }

  const Potential& p_;
  cplx lambda_;
  std::size_t segment_;
  const OdeOptions& opt_;
};

}  // namespace

std::vector<double> sample_grid(const Potential& p, double x0, double x1, int panels) {
  if (panels < 256) throw ParameterError("panels must be >= 256");
  const double lo = std::min(x0, x1);
  const double hi = std::max(x0, x1);
  const double h_max = (hi - lo) / panels;

  std::vector<double> cuts{lo};
  for (double b : p.breakpoints()) {
    if (b > lo && b < hi) cuts.push_back(b);
  }
  cuts.push_back(hi);

  std::vector<double> grid{lo};
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const double len = cuts[s + 1] - cuts[s];
    int n = std::max(4, static_cast<int>(std::ceil(len / h_max - 1e-9)));
    if (n % 2 != 0) ++n;
    for (int k = 1; k < n; ++k) grid.push_back(cuts[s] + len * k / n);
    grid.push_back(cuts[s + 1]);
  }
  if (x1 < x0) std::reverse(grid.begin(), grid.end());
  return grid;
}

OdeSolution integrate(const Potential& p, cplx lambda, double x0, double x1, cplx f0, cplx df0,
                      const OdeOptions& options) {
  const double a = p.half_width();
  if (!(options.rtol > 0.0 && options.atol > 0.0)) {
    throw ParameterError("rtol and atol must be positive");
  }
  if (!(x0 >= -a && x0 <= a && x1 >= -a && x1 <= a)) {
    throw DomainError("integration endpoints outside [-a, a]");
  }
  if (x0 == x1) throw DomainError("integration endpoints coincide");

  const auto grid = sample_grid(p, x0, x1, options.panels);

  OdeSolution sol;
  sol.lambda = lambda;
  sol.x0 = x0;
  sol.x1 = x1;
  sol.f0 = f0;
  sol.df0 = df0;
  sol.samples.reserve(grid.size());
  sol.samples.push_back({grid.front(), f0, df0});

  State y{f0, df0};
  double h = 0.0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double mid = 0.5 * (grid[i] + grid[i + 1]);
    const Stepper stepper(p, lambda, p.segment_of(mid), options);
    stepper.advance(grid[i], grid[i + 1], y, h);
    sol.samples.push_back({grid[i + 1], y.f, y.df});
  }
  sol.f1 = y.f;
  sol.df1 = y.df;
  return sol;
}

cplx simpson(std::span<const double> x, std::span<const cplx> y) {
  if (x.size() != y.size()) throw GridError("abscissae and values differ in length");
  if (x.size() < 3 || (x.size() - 1) % 2 != 0) {
    throw GridError("composite Simpson needs an even number of panels");
  }
  cplx acc = 0.0;
  for (std::size_t i = 0; i + 2 < x.size(); i += 2) {
    const double h0 = std::abs(x[i + 1] - x[i]);
    const double h1 = std::abs(x[i + 2] - x[i + 1]);
    const double hs = h0 + h1;
    acc += hs / 6.0 *
           ((2.0 - h1 / h0) * y[i] + hs * hs / (h0 * h1) * y[i + 1] + (2.0 - h0 / h1) * y[i + 2]);
  }
  return acc;
}

cplx l2_inner(const OdeSolution& u, const OdeSolution& w) {
  if (u.samples.size() != w.samples.size()) throw GridError("solutions sampled on different grids");
  std::vector<double> x(u.samples.size());
  std::vector<cplx> y(u.samples.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (u.samples[i].x != w.samples[i].x) throw GridError("solutions sampled on different grids");
    x[i] = u.samples[i].x;
    y[i] = std::conj(u.samples[i].f) * w.samples[i].f;
  }
  return simpson(x, y);
}

OdeSolution combine(cplx c1, const OdeSolution& u, cplx c2, const OdeSolution& w) {
  if (u.samples.size() != w.samples.size()) throw GridError("solutions sampled on different grids");
  OdeSolution r;
  r.lambda = u.lambda;
  r.x0 = u.x0;
  r.x1 = u.x1;
  r.samples.resize(u.samples.size());
  for (std::size_t i = 0; i < u.samples.size(); ++i) {
    const auto& su = u.samples[i];
    const auto& sw = w.samples[i];
    if (su.x != sw.x) throw GridError("solutions sampled on different grids");
    r.samples[i] = {su.x, c1 * su.f + c2 * sw.f, c1 * su.df + c2 * sw.df};
  }
  r.f0 = r.samples.front().f;
  r.df0 = r.samples.front().df;
  r.f1 = r.samples.back().f;
  r.df1 = r.samples.back().df;
  return r;
}

OdeSolution scaled(const OdeSolution& u, cplx c) {
  OdeSolution r = u;
  for (auto& s : r.samples) {
    s.f *= c;
    s.df *= c;
  }
  r.f0 *= c;
  r.df0 *= c;
  r.f1 *= c;
  r.df1 *= c;
  return r;
}

}  // namespace saext
