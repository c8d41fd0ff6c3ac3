#include "saext/deficiency.hpp"

#include <cmath>
#include <sstream>

#include "saext/errors.hpp"

namespace saext {

namespace {

const cplx kI{0.0, 1.0};

// Extends a solution on [0, a] to [-a, a]; parity +1 for even, -1 for odd.
OdeSolution mirror(const OdeSolution& half, double parity) {
  OdeSolution full;
  full.lambda = half.lambda;
  const auto& s = half.samples;
  full.samples.reserve(2 * s.size() - 1);
  for (std::size_t i = s.size() - 1; i >= 1; --i) {
    full.samples.push_back({-s[i].x, parity * s[i].f, -parity * s[i].df});
  }
  full.samples.insert(full.samples.end(), s.begin(), s.end());
  full.x0 = full.samples.front().x;
  full.x1 = full.samples.back().x;
  full.f0 = full.samples.front().f;
  full.df0 = full.samples.front().df;
  full.f1 = full.samples.back().f;
  full.df1 = full.samples.back().df;
  return full;
}

double l2_norm(const OdeSolution& u) { return std::sqrt(std::real(l2_inner(u, u))); }

void fill_table_from_trajectories(DeficiencyBasis& basis) {
  for (int j = 0; j < 2; ++j) {
    const auto& t = basis.trajectories[j];
    basis.boundary.table(j, 0) = t.samples.back().df;
    basis.boundary.table(j, 1) = t.samples.back().f;
    basis.boundary.table(j, 2) = t.samples.front().df;
    basis.boundary.table(j, 3) = t.samples.front().f;
  }
}

}  // namespace

DeficiencyBasis solve_even_odd(const Potential& p, const OdeOptions& options) {
  if (!is_even(p, 1e-12)) throw ParityError("solve_even_odd requires an even potential");
  const double a = p.half_width();
  const auto even_half = integrate(p, kI, 0.0, a, 1.0, 0.0, options);
  const auto odd_half = integrate(p, kI, 0.0, a, 0.0, 1.0, options);

  DeficiencyBasis basis{p, {}, {mirror(even_half, 1.0), mirror(odd_half, -1.0)}};
  for (int j = 0; j < 2; ++j) {
    const double n = l2_norm(basis.trajectories[j]);
    basis.boundary.norms[j] = n;
    basis.trajectories[j] = scaled(basis.trajectories[j], 1.0 / n);
  }
  basis.boundary.mode = BasisMode::even_potential;
  fill_table_from_trajectories(basis);
  const auto& t = basis.boundary.table;
  basis.boundary.mat_A = Matrix2c{{t(0, 1), 0.0}, {0.0, t(1, 1)}};
  basis.boundary.mat_B = Matrix2c{{t(0, 0), 0.0}, {0.0, t(1, 0)}};
  assert_invariants(basis);
  return basis;
}

DeficiencyBasis solve_orthonormal_pair(const Potential& p, const OdeOptions& options) {
  const double a = p.half_width();
  const auto u1 = integrate(p, kI, -a, a, 1.0, 0.0, options);
  const auto u2 = integrate(p, kI, -a, a, 0.0, 1.0, options);

  const double n1 = l2_norm(u1);
  auto g1 = scaled(u1, 1.0 / n1);
  const cplx c = l2_inner(g1, u2);
  auto v = combine(1.0, u2, -c, g1);
  const double n2 = l2_norm(v);
  if (n2 < 1e-10 * l2_norm(u2)) {
    throw DegeneracyError("deficiency solutions are numerically linearly dependent");
  }

  DeficiencyBasis basis{p, {}, {std::move(g1), scaled(v, 1.0 / n2)}};
  basis.boundary.mode = BasisMode::general;
  basis.boundary.norms = {n1, n2};
  basis.boundary.gram_schmidt = c;
  fill_table_from_trajectories(basis);
  assert_invariants(basis);
  return basis;
}

BasisDiagnostics diagnose(const BoundaryData& b) {
  BasisDiagnostics d;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      d.boundary_form(j, k) = std::conj(b.dg(j, 1)) * b.g(k, 1) - std::conj(b.g(j, 1)) * b.dg(k, 1) -
                              std::conj(b.dg(j, -1)) * b.g(k, -1) +
                              std::conj(b.g(j, -1)) * b.dg(k, -1);
      d.boundary_form_plain(j, k) = b.dg(j, 1) * b.g(k, 1) - b.g(j, 1) * b.dg(k, 1) -
                                    b.dg(j, -1) * b.g(k, -1) + b.g(j, -1) * b.dg(k, -1);
    }
  }
  if (b.mode == BasisMode::even_potential) {
    for (int j = 0; j < 2; ++j) {
      const cplx g = b.g(j, 1);
      const cplx dg = b.dg(j, 1);
      d.wronskian[j] = g * std::conj(dg) - dg * std::conj(g);
    }
    if (b.mat_A) d.sv_A = singular_values(*b.mat_A);
    if (b.mat_B) d.sv_B = singular_values(*b.mat_B);
  }
  return d;
}

BasisDiagnostics diagnose(const DeficiencyBasis& basis) {
  auto d = diagnose(basis.boundary);
  if (!basis.trajectories[0].samples.empty()) {
    Matrix2c gram;
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) gram(j, k) = l2_inner(basis.trajectories[j], basis.trajectories[k]);
    }
    d.gram = gram;
  }
  return d;
}

void assert_invariants(const DeficiencyBasis& basis, double tol) {
  const auto d = diagnose(basis);
  std::ostringstream failures;
  if (d.gram) {
    const double e = (*d.gram - Matrix2c::Identity()).cwiseAbs().maxCoeff();
    if (!(e <= tol)) failures << " orthonormality defect " << e << ";";
  }
  const double form = (d.boundary_form - 2.0 * kI * Matrix2c::Identity()).cwiseAbs().maxCoeff();
  if (!(form <= tol)) failures << " boundary form defect " << form << ";";
  const double plain = d.boundary_form_plain.cwiseAbs().maxCoeff();
  if (!(plain <= tol)) failures << " plain boundary form defect " << plain << ";";
  if (basis.boundary.mode == BasisMode::even_potential) {
    for (int j = 0; j < 2; ++j) {
      const double w = std::abs(d.wronskian[j] - kI);
      if (!(w <= tol)) failures << " Wronskian defect " << w << " for g" << (j ? '-' : '+') << ";";
    }
    if (!basis.boundary.mat_A || !basis.boundary.mat_B) {
      failures << " missing boundary matrices;";
    } else {
      if (!(d.sv_A.min > 1e-8 * d.sv_A.max)) failures << " boundary matrix A singular;";
      if (!(d.sv_B.min > 1e-8 * d.sv_B.max)) failures << " boundary matrix B singular;";
    }
  }
  const auto msg = failures.str();
  if (!msg.empty()) throw InvariantError("deficiency basis invariants violated:" + msg);
}

Matrix2c change_of_basis(const BoundaryData& from, const BoundaryData& to, double* residual) {
  // Boundary data determine a solution uniquely, so the 2x4 tables have full row rank.
  const Matrix2c gram = from.table * from.table.adjoint();
  const Matrix2c w = to.table * from.table.adjoint() * inverse2(gram, 1e-14);
  if (residual) *residual = (w * from.table - to.table).norm();
  return w;
}

}  // namespace saext
