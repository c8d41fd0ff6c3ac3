#pragma once

#include <complex>
#include <span>
#include <vector>

#include "saext/potential.hpp"

namespace saext {

using cplx = std::complex<double>;

struct OdeSample {
  double x = 0.0;
  cplx f;
  cplx df;
};

/// Trajectory of -f'' + V f = lambda f with dense output on a fixed sample grid.
struct OdeSolution {
  cplx lambda;
  double x0 = 0.0;
  double x1 = 0.0;
  cplx f0, df0;
  cplx f1, df1;
  std::vector<OdeSample> samples;  // samples.front().x == x0, samples.back().x == x1
};

struct OdeOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  /// Upper bound on the dense-output spacing is |x1 - x0| / panels; must be >= 256.
  int panels = 1024;
};

/// Sample abscissae from x0 to x1 (either direction). Every breakpoint of `p`
/// inside the range is a sample, each segment holds an even number (>= 4) of
/// equal panels, so composite Simpson never straddles a discontinuity of V.
std::vector<double> sample_grid(const Potential& p, double x0, double x1, int panels);

/// Adaptive Dormand-Prince 5(4) on (f, f'). Steps always land on the sample
/// grid, and the potential's segment is fixed per panel so discontinuities of V
/// restart the integration.
OdeSolution integrate(const Potential& p, cplx lambda, double x0, double x1, cplx f0, cplx df0,
                      const OdeOptions& options = {});

/// Composite Simpson of y over abscissae x (monotone, even number of panels),
/// integrated in the direction of increasing x.
cplx simpson(std::span<const double> x, std::span<const cplx> y);

/// <u, w> = integral of conj(u) w over the shared sample grid.
cplx l2_inner(const OdeSolution& u, const OdeSolution& w);

/// c1 u + c2 w on the shared grid.
OdeSolution combine(cplx c1, const OdeSolution& u, cplx c2, const OdeSolution& w);

OdeSolution scaled(const OdeSolution& u, cplx c);

/// u f w' - u' w (no conjugation); constant in x for equal lambda.
inline cplx wronskian(const OdeSample& u, const OdeSample& w) { return u.f * w.df - u.df * w.f; }

}  // namespace saext
