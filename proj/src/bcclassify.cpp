#include "saext/bcclassify.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "saext/errors.hpp"

namespace saext {

namespace {

const cplx kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

constexpr std::array<std::pair<BcName, std::string_view>, 11> kNames{{
    {BcName::robin, "robin"},
    {BcName::general_coupled, "general-coupled"},
    {BcName::neumann, "neumann"},
    {BcName::dirichlet, "dirichlet"},
    {BcName::periodic, "periodic"},
    {BcName::anti_periodic, "anti-periodic"},
    {BcName::automorphic, "automorphic"},
    {BcName::dirichlet_at_a_neumann_at_minus_a, "dirichlet-at-a-neumann-at-minus-a"},
    {BcName::neumann_at_a_dirichlet_at_minus_a, "neumann-at-a-dirichlet-at-minus-a"},
    {BcName::general_case_ii, "general-case-II"},
    {BcName::general_case_iii, "general-case-III"},
}};

Matrix2c case_iv_matrix(double theta, double phi) {
  const cplx e = std::polar(1.0, phi);
  return Matrix2c{{std::cos(theta), std::conj(e) * std::sin(theta)},
                  {e * std::sin(theta), -std::cos(theta)}};
}

Matrix2c h_from(const RobinParams& r) {
  return Matrix2c{{r.alpha, r.beta}, {std::conj(r.beta), -r.gamma}};
}

Matrix2c hprime_from(const RobinParams& r) {
  return Matrix2c{{r.alpha, -r.beta}, {-std::conj(r.beta), -r.gamma}};
}

void require_finite(const BcFamily& f) {
  if (!std::isfinite(f.alpha) || !std::isfinite(f.gamma) || !std::isfinite(f.beta.real()) ||
      !std::isfinite(f.beta.imag()) || !std::isfinite(f.theta) || !std::isfinite(f.phi)) {
    throw ParameterError("boundary-condition parameters must be finite");
  }
}

// -det H for H = [[alpha, beta], [conj beta, -gamma]], relative to the entry scale.
double relative_det(const BcFamily& f) {
  const double scale = f.alpha * f.alpha + f.gamma * f.gamma + std::norm(f.beta);
  return scale == 0.0 ? 0.0 : std::abs(f.alpha * f.gamma + std::norm(f.beta)) / scale;
}

double wrap_phi(double phi) {
  double p = std::fmod(phi, 2.0 * kPi);
  if (p < 0.0) p += 2.0 * kPi;
  if (p >= 2.0 * kPi) p = 0.0;
  return p;
}

}  // namespace

std::string_view to_string(BcName name) {
  for (const auto& [n, s] : kNames) {
    if (n == name) return s;
  }
  return "unknown";
}

std::string_view to_string(BcCase c) {
  switch (c) {
    case BcCase::I:
      return "I";
    case BcCase::II:
      return "II";
    case BcCase::III:
      return "III";
    case BcCase::IV:
      return "IV";
  }
  return "unknown";
}

BcName bc_name_from_string(std::string_view name) {
  for (const auto& [n, s] : kNames) {
    if (s == name) return n;
  }
  throw ParameterError("unknown boundary-condition family '" + std::string(name) + "'");
}

Matrix2c cayley(const Matrix2c& H) {
  const Matrix2c I = Matrix2c::Identity();
  return inverse2(H + kI * I, 0.0) * (H - kI * I);
}

BoundaryCondition classify(const Matrix2c& Ucal, double tol) {
  return classify(Unitary2::certify(Ucal), tol);
}

BoundaryCondition classify(const Unitary2& Ucal, double tol) {
  if (!(tol > 0.0 && tol <= 1e-4)) throw ParameterError("classify tolerance must lie in (0, 1e-4]");
  const Matrix2c& U = Ucal.matrix();
  const Matrix2c I = Matrix2c::Identity();
  const Matrix2c minus = I - U;
  const Matrix2c plus = I + U;

  BoundaryCondition bc{.Ucal = Ucal};
  bc.sv_minus = singular_values(minus);
  bc.sv_plus = singular_values(plus);
  const double threshold = 2.0 * tol;
  const bool singular_minus = bc.sv_minus.min <= threshold;
  const bool singular_plus = bc.sv_plus.min <= threshold;

  if (!singular_minus) {
    bc.bc_case = singular_plus ? BcCase::II : BcCase::I;
    const Matrix2c raw = kI * inverse2(minus, 0.0) * plus;
    bc.hermiticity_defect = (raw - raw.adjoint()).norm() / std::max(1.0, raw.norm());
    const Matrix2c H = 0.5 * (raw + raw.adjoint());
    bc.H = H;
    bc.robin = RobinParams{H(0, 0).real(), H(0, 1), -H(1, 1).real()};
    if (bc.bc_case == BcCase::I) {
      bc.name = std::abs(H(0, 1)) <= tol * std::max(1.0, H.norm()) ? BcName::robin
                                                                    : BcName::general_coupled;
    } else {
      bc.name = bc.sv_plus.max <= threshold ? BcName::neumann : BcName::general_case_ii;
    }
    return bc;
  }

  if (!singular_plus) {
    bc.bc_case = BcCase::III;
    const Matrix2c raw = -kI * inverse2(plus, 0.0) * minus;
    bc.hermiticity_defect = (raw - raw.adjoint()).norm() / std::max(1.0, raw.norm());
    const Matrix2c Hp = 0.5 * (raw + raw.adjoint());
    bc.Hprime = Hp;
    bc.robin_prime = RobinParams{Hp(0, 0).real(), -Hp(0, 1), -Hp(1, 1).real()};
    bc.name = bc.sv_minus.max <= threshold ? BcName::dirichlet : BcName::general_case_iii;
    return bc;
  }

  bc.bc_case = BcCase::IV;
  // Nearest traceless Hermitian unitary: n . sigma with n the normalized Pauli components.
  const Matrix2c herm = 0.5 * (U + U.adjoint());
  double nz = 0.5 * (herm(0, 0) - herm(1, 1)).real();
  double nx = herm(1, 0).real();
  double ny = herm(1, 0).imag();
  const double norm = std::sqrt(nx * nx + ny * ny + nz * nz);
  nx /= norm;
  ny /= norm;
  nz /= norm;
  const double sin_theta = std::hypot(nx, ny);
  Angles ang{std::atan2(sin_theta, nz), 0.0};
  if (sin_theta > tol) ang.phi = wrap_phi(std::atan2(ny, nx));
  bc.angles = ang;
  if (ang.theta > tol && ang.theta < kPi - tol) {
    bc.K = std::polar(1.0, ang.phi) / std::tan(0.5 * ang.theta);
  }

  const bool equator = std::abs(ang.theta - 0.5 * kPi) <= tol;
  if (ang.theta <= tol) {
    bc.name = BcName::dirichlet_at_a_neumann_at_minus_a;
  } else if (ang.theta >= kPi - tol) {
    bc.name = BcName::neumann_at_a_dirichlet_at_minus_a;
  } else if (equator && (ang.phi <= tol || ang.phi >= 2.0 * kPi - tol)) {
    bc.name = BcName::periodic;
  } else if (equator && std::abs(ang.phi - kPi) <= tol) {
    bc.name = BcName::anti_periodic;
  } else {
    bc.name = BcName::automorphic;
  }
  return bc;
}

Unitary2 synthesize(const BcFamily& f) {
  require_finite(f);
  const Matrix2c I = Matrix2c::Identity();
  switch (f.name) {
    case BcName::dirichlet:
      return Unitary2::certify(I);
    case BcName::neumann:
      return Unitary2::certify(-I);
    case BcName::periodic:
      return Unitary2::certify(case_iv_matrix(0.5 * kPi, 0.0));
    case BcName::anti_periodic:
      return Unitary2::certify(case_iv_matrix(0.5 * kPi, kPi));
    case BcName::dirichlet_at_a_neumann_at_minus_a:
      return Unitary2::certify(case_iv_matrix(0.0, 0.0));
    case BcName::neumann_at_a_dirichlet_at_minus_a:
      return Unitary2::certify(case_iv_matrix(kPi, 0.0));
    case BcName::automorphic: {
      double theta = f.theta;
      double phi = f.phi;
      if (f.K) {
        const cplx K = *f.K;
        if (!(std::isfinite(K.real()) && std::isfinite(K.imag())) || K == cplx{}) {
          throw ParameterError("automorphic constant K must be finite and non-zero");
        }
        theta = 2.0 * std::atan2(1.0, std::abs(K));
        phi = wrap_phi(std::arg(K));
      }
      if (!(theta > 0.0 && theta < kPi)) {
        throw ParameterError("automorphic theta must lie in (0, pi)");
      }
      return Unitary2::certify(case_iv_matrix(theta, phi), Unitary2::kOutputTol);
    }
    case BcName::robin: {
      if (f.alpha == 0.0 || f.gamma == 0.0) {
        throw ParameterError("Robin conditions need alpha != 0 and gamma != 0");
      }
      if (f.beta != cplx{}) throw ParameterError("Robin conditions have beta = 0; use general-coupled");
      return Unitary2::certify(cayley(h_from({f.alpha, 0.0, f.gamma})), Unitary2::kOutputTol);
    }
    case BcName::general_coupled: {
      if (relative_det(f) <= 1e-12) {
        throw ParameterError("general-coupled needs alpha*gamma + |beta|^2 != 0");
      }
      return Unitary2::certify(cayley(h_from({f.alpha, f.beta, f.gamma})), Unitary2::kOutputTol);
    }
    case BcName::general_case_ii: {
      const Matrix2c H = h_from({f.alpha, f.beta, f.gamma});
      if (H.norm() == 0.0 || relative_det(f) > 1e-12) {
        throw ParameterError("general-case-II needs a non-zero H with alpha*gamma + |beta|^2 = 0");
      }
      return Unitary2::certify(cayley(H), Unitary2::kOutputTol);
    }
    case BcName::general_case_iii: {
      const Matrix2c Hp = hprime_from({f.alpha, f.beta, f.gamma});
      if (Hp.norm() == 0.0 || relative_det(f) > 1e-12) {
        throw ParameterError("general-case-III needs a non-zero H' with det H' = 0");
      }
      const Matrix2c U = inverse2(kI * I - Hp, 0.0) * (Hp + kI * I);
      return Unitary2::certify(U, Unitary2::kOutputTol);
    }
  }
  throw ParameterError("unknown boundary-condition family");
}

BcFamily family_of(const BoundaryCondition& bc) {
  BcFamily f;
  f.name = bc.name;
  if (bc.robin) {
    f.alpha = bc.robin->alpha;
    f.beta = bc.name == BcName::robin ? cplx{} : bc.robin->beta;
    f.gamma = bc.robin->gamma;
  } else if (bc.robin_prime) {
    f.alpha = bc.robin_prime->alpha;
    f.beta = bc.robin_prime->beta;
    f.gamma = bc.robin_prime->gamma;
  }
  if (bc.angles) {
    f.theta = bc.angles->theta;
    f.phi = bc.angles->phi;
  }
  return f;
}

double apply_bc(const Matrix2c& Ucal, cplx fa, cplx fma, cplx dfa, cplx dfma) {
  const Vector2c lhs{dfa - kI * fa, dfma + kI * fma};
  const Vector2c rhs{dfa + kI * fa, dfma - kI * fma};
  return (lhs - Ucal * rhs).norm();
}

}  // namespace saext
