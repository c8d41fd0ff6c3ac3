#pragma once

#include <array>
#include <optional>

#include "saext/odesolve.hpp"
#include "saext/potential.hpp"
#include "saext/unitary.hpp"

namespace saext {

enum class BasisMode { even_potential, general };

using BoundaryTable = Eigen::Matrix<cplx, 2, 4>;

/// Endpoint data of an orthonormal basis {g_1, g_2} of the +i deficiency space.
/// The -i space is spanned by the conjugates and is never built separately.
struct BoundaryData {
  BasisMode mode = BasisMode::even_potential;
  /// Row j holds (g_j'(a), g_j(a), g_j'(-a), g_j(-a)).
  BoundaryTable table = BoundaryTable::Zero();
  /// Even mode only: diag(g+(a), g-(a)) and diag(g+'(a), g-'(a)).
  std::optional<Matrix2c> mat_A;
  std::optional<Matrix2c> mat_B;
  /// L2 norms divided out of the raw initial-value solutions.
  std::array<double, 2> norms{1.0, 1.0};
  /// General mode: <g_1, u_2> removed from the second raw solution before normalizing.
  cplx gram_schmidt{0.0, 0.0};

  cplx g(int j, double side) const { return side > 0 ? table(j, 1) : table(j, 3); }
  cplx dg(int j, double side) const { return side > 0 ? table(j, 0) : table(j, 2); }
};

struct DeficiencyBasis {
  Potential potential;
  BoundaryData boundary;
  /// Normalized g_1, g_2 on [-a, a]; empty when the basis was loaded from a file.
  std::array<OdeSolution, 2> trajectories;
};

/// Even and odd solutions of A g = i g from x = 0, with (g, g')(0) = (1, 0) and (0, 1),
/// extended by parity and normalized. Requires an even potential.
DeficiencyBasis solve_even_odd(const Potential& p, const OdeOptions& options = {});

/// Solutions from x = -a with (1, 0) and (0, 1), orthonormalized by Gram-Schmidt.
DeficiencyBasis solve_orthonormal_pair(const Potential& p, const OdeOptions& options = {});

struct BasisDiagnostics {
  std::optional<Matrix2c> gram;        // <g_j, g_k>, needs trajectories
  std::array<cplx, 2> wronskian{};     // g(a) conj(g'(a)) - g'(a) conj(g(a)), even mode
  Matrix2c boundary_form;              // should equal 2i * I
  Matrix2c boundary_form_plain;        // should vanish
  SingularValues2 sv_A, sv_B;          // even mode
};

BasisDiagnostics diagnose(const DeficiencyBasis& basis);
BasisDiagnostics diagnose(const BoundaryData& boundary);

/// Throws InvariantError unless every basis invariant holds at `tol`.
void assert_invariants(const DeficiencyBasis& basis, double tol = 1e-8);

/// W with table(to) = W * table(from), by least squares; `residual` gets the fit error.
Matrix2c change_of_basis(const BoundaryData& from, const BoundaryData& to,
                         double* residual = nullptr);

}  // namespace saext
