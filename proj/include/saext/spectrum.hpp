#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "saext/bcclassify.hpp"
#include "saext/odesolve.hpp"
#include "saext/potential.hpp"

namespace saext {

/// Solutions of -u'' + V u = E u from x = -a with (u, u')(-a) = (1, 0) and (0, 1).
struct ShootingPair {
  OdeSolution u1;
  OdeSolution u2;
};

ShootingPair shoot(const Potential& p, double E, const OdeOptions& options = {});

/// Column k is (u_k'(a) - i u_k(a), u_k'(-a) + i u_k(-a)) - U (u_k'(a) + i u_k(a), u_k'(-a) - i u_k(-a)),
/// divided by the largest endpoint magnitude of u_k.
struct BoundaryMatrix {
  Matrix2c M;
  std::array<double, 2> column_scale{1.0, 1.0};
  /// Size of the normalized terms before cancellation; degeneracy is judged against it.
  double reference = 1.0;
};

BoundaryMatrix boundary_matrix(const ShootingPair& shots, const Matrix2c& Ucal);

/// Two solutions spanning the solution space at E, both ordered from -a to a. The pair
/// from `shoot` is kept while its endpoint data are well conditioned; otherwise solutions
/// started at +a are mixed in, so that each one is integrated in a direction where it grows.
ShootingPair stable_pair(const Potential& p, double E, const OdeOptions& options = {});

/// W(E) = U^dagger F^- (F^+)^{-1} for the solution space spanned by `shots`; the result
/// does not depend on which spanning pair is passed.
Matrix2c boundary_unitary(const ShootingPair& shots, const Matrix2c& Ucal);

/// Eigenphases of W(E) (see boundary_unitary), where the columns of F^-/F^+ are the boundary
/// combinations of two solutions entering the condition F^- = U F^+. W is unitary for real E, its phases decrease monotonically in E, and every passage of a
/// phase through 0 (mod 2 pi) is an eigenvalue, counted with multiplicity.
struct PhasePoint {
  double E = 0.0;
  std::array<double, 2> theta{};  // in [0, 2 pi)
  double arg_det = 0.0;           // arg det W in (-pi, pi]
  double defect = 0.0;            // ||W^dagger W - I||_F; large values mean a lost shooting basis
};

PhasePoint boundary_phases(const ShootingPair& shots, const Matrix2c& Ucal);
PhasePoint phases_at(const Potential& p, const Matrix2c& Ucal, double E, const OdeOptions& options = {});

/// Eigenvalues between l.E and r.E from the phase winding, sampled at least every
/// (pi / 2a)^2 / 8 and more densely where the endpoints of a piece cannot resolve it. Returns -1 when W is not unitary to
/// 1e-8 at an endpoint, where the count cannot be trusted.
int count_eigenvalues(const Potential& p, const Matrix2c& Ucal, const PhasePoint& l, const PhasePoint& r,
                      const OdeOptions& options = {});

/// det of the normalized boundary matrix; zero exactly at eigenvalues of the extension.
cplx det_function(const Potential& p, const BoundaryCondition& bc, double E,
                  const OdeOptions& options = {});

/// |det| on each energy, one independent shooting pair per point.
std::vector<double> scan_det_serial(const Potential& p, const Matrix2c& Ucal,
                                    const std::vector<double>& energies, const OdeOptions& options);
/// Same values as scan_det_serial, points distributed over `threads` OpenMP threads.
std::vector<double> scan_det_parallel(const Potential& p, const Matrix2c& Ucal,
                                      const std::vector<double>& energies,
                                      const OdeOptions& options, int threads);

struct ScanOptions {
  double e_min = 0.0;
  double e_max = 0.0;
  int grid = 0;  // number of scan intervals, >= 16
  OdeOptions ode;
  int threads = 1;
};

struct SpectrumResult {
  BoundaryCondition bc;
  Potential potential;
  std::vector<double> eigenvalues{};
  std::vector<int> degeneracies{};
  std::vector<std::vector<OdeSolution>> eigenfunctions{};  // L2-normalized
  std::vector<double> residuals{};                          // worst apply_bc per eigenvalue
  std::vector<std::pair<double, double>> det_trace{};       // (E, |det(W - I)|) on the scan grid
  std::vector<std::string> diagnostics{};
};

SpectrumResult find_eigenvalues(const Potential& p, const BoundaryCondition& bc,
                                const ScanOptions& options);

/// Scan floor -||V|| - 1, lowered further by the attractive part of the boundary condition.
double default_e_min(const Potential& p, const BoundaryCondition& bc);
/// Intervals so that the spacing is at most (pi / 2a)^2 / 8.
int default_grid(double a, double e_min, double e_max);

struct ResidualReport {
  std::vector<double> boundary;  // per eigenfunction, in eigenvalue order
  std::vector<double> symmetry;
  std::vector<double> equation;
  double worst_boundary = 0.0;
  double worst_symmetry = 0.0;
  double worst_equation = 0.0;
};

/// |<f, A f> - <A f, f>| through the boundary Wronskian.
double symmetry_defect(const OdeSolution& f);
/// ||-f'' + V f - E f||_2, with f'' from fourth-order differences of f' per smooth segment.
double equation_defect(const Potential& p, const OdeSolution& f, double E);

ResidualReport eigenfunction_residuals(const SpectrumResult& r);

}  // namespace saext
