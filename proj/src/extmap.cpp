#include "saext/extmap.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "saext/errors.hpp"

namespace saext {

namespace {

const cplx kI{0.0, 1.0};

const Matrix2c& P() {
  static const Matrix2c p{{1.0, 1.0}, {-1.0, 1.0}};
  return p;
}

const Matrix2c& Q() {
  static const Matrix2c q{{1.0, -1.0}, {1.0, 1.0}};
  return q;
}

void require_even(const BoundaryData& basis) {
  if (basis.mode != BasisMode::even_potential || !basis.mat_A || !basis.mat_B) {
    throw ModeError("operation requires an even-potential basis");
  }
}

}  // namespace

VPair build_v_vtilde(const BoundaryData& basis, const Matrix2c& U) {
  require_even(basis);
  const Matrix2c& A = *basis.mat_A;
  const Matrix2c& B = *basis.mat_B;
  const Matrix2c Ub = conj(U);
  return {conj(A) - kI * conj(B) + Ub * (A - kI * B),
          -(conj(A) + kI * conj(B) + Ub * (A + kI * B))};
}

Matrix2c boundary_from_tilde(const Matrix2c& Utilde) { return 0.5 * P() * Utilde * Q(); }

Matrix2c tilde_from_boundary(const Matrix2c& Ucal) { return 0.5 * Q() * Ucal * P(); }

MapPair forward_map(const BoundaryData& basis, const Unitary2& U) {
  const auto v = build_v_vtilde(basis, U.matrix());
  Matrix2c Vinv;
  try {
    Vinv = inverse2(v.V, 1e-8);
  } catch (const SingularMatrixError&) {
    throw SingularMatrixError("V is singular for a unitary U; the deficiency basis is corrupted");
  }
  const Matrix2c Utilde = Vinv * v.Vtilde;
  const Matrix2c Ucal = boundary_from_tilde(Utilde);
  return {basis, U, Unitary2::certify(Utilde, Unitary2::kOutputTol),
          Unitary2::certify(Ucal, Unitary2::kOutputTol), v.V, v.Vtilde};
}

InverseSystem inverse_system(const BoundaryData& basis, const Matrix2c& Ucal) {
  require_even(basis);
  const Matrix2c& A = *basis.mat_A;
  const Matrix2c& B = *basis.mat_B;
  const Matrix2c Ut = tilde_from_boundary(Ucal);
  // [conj(A) - i conj(B) + X (A - iB)] Ut = -[conj(A) + i conj(B) + X (A + iB)], X = conj(U),
  // rearranged to X M = R.
  const Matrix2c M = (A - kI * B) * Ut + (A + kI * B);
  const Matrix2c R = -((conj(A) + kI * conj(B)) + (conj(A) - kI * conj(B)) * Ut);
  InverseSystem sys;
  sys.matrix.setZero();
  // (X M)_{ij} = sum_k X_{ik} M_{kj}; unknown X_{ik} sits at index 2i + k.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) sys.matrix(2 * i + j, 2 * i + k) = M(k, j);
      sys.rhs(2 * i + j) = R(i, j);
    }
  }
  return sys;
}

Unitary2 inverse_map(const BoundaryData& basis, const Unitary2& Ucal) {
  const auto sys = inverse_system(basis, Ucal.matrix());
  const Eigen::JacobiSVD<Matrix4c> svd(sys.matrix);
  const auto& s = svd.singularValues();
  if (!(s(3) > 1e-10 * s(0))) {
    throw UniquenessError("inverse map system is singular; U is not uniquely determined");
  }
  const Eigen::Vector4cd x = sys.matrix.fullPivLu().solve(sys.rhs);
  Matrix2c Ubar{{x(0), x(1)}, {x(2), x(3)}};
  return Unitary2::certify(conj(Ubar), Unitary2::kOutputTol);
}

Unitary2 forward_map_general(const BoundaryData& basis, const Unitary2& U) {
  const Matrix2c& u = U.matrix();
  const auto& t = basis.table;
  Matrix2c zp, zm;
  for (int j = 0; j < 2; ++j) {
    // G_j = g_j + u_j1 conj(g_1) + u_j2 conj(g_2), columns (G'(a), G(a), G'(-a), G(-a)).
    Eigen::Matrix<cplx, 1, 4> G = t.row(j) + u(j, 0) * t.row(0).conjugate() +
                                  u(j, 1) * t.row(1).conjugate();
    zp(0, j) = G(0) - kI * G(1);
    zp(1, j) = G(2) + kI * G(3);
    zm(0, j) = G(0) + kI * G(1);
    zm(1, j) = G(2) - kI * G(3);
  }
  if (is_singular(zp, 1e-10)) {
    throw SingularMatrixError("z+ vectors are linearly dependent for a unitary U");
  }
  const Matrix2c Ucal = (zm * inverse2(zp, 1e-10)).adjoint();
  return Unitary2::certify(Ucal, Unitary2::kOutputTol);
}

double unitv_residual(const VPair& v, const Matrix2c& U) {
  const Matrix2c Ub = conj(U);
  const Matrix2c lhs = v.V * v.V.adjoint() - v.Vtilde * v.Vtilde.adjoint();
  const Matrix2c rhs = 2.0 * (Matrix2c::Identity() - Ub * Ub.adjoint());
  const double scale = std::max({1.0, v.V.squaredNorm(), v.Vtilde.squaredNorm()});
  return (lhs - rhs).norm() / scale;
}

IdentityReport check_identities(const BoundaryData& basis, int samples, std::uint64_t seed,
                                const IdentityThresholds& th) {
  require_even(basis);
  if (samples < 1) throw ParameterError("samples must be positive");

  std::mt19937_64 rng(seed);
  std::vector<Matrix2c> unitary(samples), general(samples);
  for (int s = 0; s < samples; ++s) unitary[s] = haar_unitary(rng);
  for (int s = 0; s < samples; ++s) general[s] = random_complex(rng);

  struct Draw {
    double unitv_u = 0, unitv_g = 0, out_defect = 0, v_sigma = 0, hom_sigma = 0, roundtrip = 0;
    bool threw = false;
  };
  std::vector<Draw> draws(samples);

#pragma omp parallel for schedule(static)
  for (int s = 0; s < samples; ++s) {
    Draw& d = draws[s];
    const auto vu = build_v_vtilde(basis, unitary[s]);
    d.unitv_u = unitv_residual(vu, unitary[s]);
    d.unitv_g = unitv_residual(build_v_vtilde(basis, general[s]), general[s]);
    d.v_sigma = std::min(singular_values(vu.V).min, singular_values(vu.Vtilde).min);
    try {
      const auto U = Unitary2::certify(unitary[s]);
      const auto pair = forward_map(basis, U);
      d.out_defect = std::max(unitarity_defect(pair.Ucal.matrix()),
                              unitarity_defect(pair.Utilde.matrix()));
      const auto sys = inverse_system(basis, pair.Ucal.matrix());
      d.hom_sigma = Eigen::JacobiSVD<Matrix4c>(sys.matrix).singularValues()(3);
      const auto back = inverse_map(basis, pair.Ucal);
      d.roundtrip = (back.matrix() - unitary[s]).cwiseAbs().maxCoeff();
    } catch (const Error&) {
      d.threw = true;
    }
  }

  IdentityReport r;
  r.samples = samples;
  r.v_sigma_min = std::numeric_limits<double>::infinity();
  r.homogeneous_sigma_min = std::numeric_limits<double>::infinity();
  const auto tally = [](bool ok, int& pass, int& fail) { ok ? ++pass : ++fail; };
  for (const auto& d : draws) {
    r.unitv_worst = std::max({r.unitv_worst, d.unitv_u, d.unitv_g});
    tally(d.unitv_u <= th.unitv, r.unitv_pass, r.unitv_fail);
    tally(d.unitv_g <= th.unitv, r.unitv_pass, r.unitv_fail);
    r.v_sigma_min = std::min(r.v_sigma_min, d.v_sigma);
    tally(d.v_sigma > th.sigma_floor, r.nonsingular_pass, r.nonsingular_fail);
    if (d.threw) {
      ++r.unitary_out_fail;
      ++r.homogeneous_fail;
      ++r.roundtrip_fail;
      continue;
    }
    r.unitary_out_worst = std::max(r.unitary_out_worst, d.out_defect);
    tally(d.out_defect <= th.unitary_out, r.unitary_out_pass, r.unitary_out_fail);
    r.homogeneous_sigma_min = std::min(r.homogeneous_sigma_min, d.hom_sigma);
    tally(d.hom_sigma > th.sigma_floor, r.homogeneous_pass, r.homogeneous_fail);
    r.roundtrip_worst = std::max(r.roundtrip_worst, d.roundtrip);
    tally(d.roundtrip <= th.roundtrip, r.roundtrip_pass, r.roundtrip_fail);
  }
  return r;
}

}  // namespace saext
