#pragma once

#include <optional>
#include <string_view>

#include "saext/odesolve.hpp"
#include "saext/unitary.hpp"

namespace saext {

/// Singularity pattern of I - U and I + U:
/// I both regular, II only I + U singular, III only I - U singular, IV both singular.
enum class BcCase { I, II, III, IV };

enum class BcName {
  robin,
  general_coupled,
  neumann,
  dirichlet,
  periodic,
  anti_periodic,
  automorphic,
  dirichlet_at_a_neumann_at_minus_a,
  neumann_at_a_dirichlet_at_minus_a,
  general_case_ii,
  general_case_iii,
};

std::string_view to_string(BcName name);
std::string_view to_string(BcCase c);
/// Throws ParameterError for unknown names.
BcName bc_name_from_string(std::string_view name);

/// H = [[alpha, beta], [conj(beta), -gamma]]:
///   f'(a) = alpha f(a) - beta f(-a),  f'(-a) = conj(beta) f(a) + gamma f(-a).
/// The primed set uses H' = [[alpha', -beta'], [-conj(beta'), -gamma']] on (f', f) swapped.
struct RobinParams {
  double alpha = 0.0;
  cplx beta{0.0, 0.0};
  double gamma = 0.0;
};

/// Case IV: U = [[cos t, e^{-ip} sin t], [e^{ip} sin t, -cos t]].
struct Angles {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi)
};

struct BoundaryCondition {
  Unitary2 Ucal;
  BcCase bc_case = BcCase::I;
  BcName name = BcName::general_coupled;
  std::optional<Matrix2c> H{};       // Cases I, II
  std::optional<Matrix2c> Hprime{};  // Case III
  std::optional<RobinParams> robin{};
  std::optional<RobinParams> robin_prime{};
  std::optional<Angles> angles{};  // Case IV
  std::optional<cplx> K{};         // Case IV with theta in (0, pi)
  SingularValues2 sv_minus{};      // of I - U
  SingularValues2 sv_plus{};       // of I + U
  /// ||H - H^+||_F / max(1, ||H||_F) before H (or H') was symmetrized.
  double hermiticity_defect = 0.0;
};

/// I -/+ U is singular when sigma_min <= tol * 2 (2 bounds ||I|| + ||U||).
BoundaryCondition classify(const Unitary2& Ucal, double tol = 1e-8);
/// Certifies `Ucal` first; throws CertificationError for non-unitary input.
BoundaryCondition classify(const Matrix2c& Ucal, double tol = 1e-8);

/// A named boundary-condition family with its parameters. For general_case_iii the
/// (alpha, beta, gamma) fields carry the primed parameters. Automorphic takes either
/// K or (theta, phi).
struct BcFamily {
  BcName name = BcName::dirichlet;
  double alpha = 0.0;
  cplx beta{0.0, 0.0};
  double gamma = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  std::optional<cplx> K{};
};

/// Throws ParameterError when the parameters fall outside the family.
Unitary2 synthesize(const BcFamily& family);

/// The family and parameters recorded by classify; synthesize(family_of(bc)) rebuilds
/// bc.Ucal for the parameter-complete cases.
BcFamily family_of(const BoundaryCondition& bc);

/// ||(f'(a) - i f(a), f'(-a) + i f(-a)) - U (f'(a) + i f(a), f'(-a) - i f(-a))||_2.
double apply_bc(const Matrix2c& Ucal, cplx fa, cplx fma, cplx dfa, cplx dfma);
inline double apply_bc(const BoundaryCondition& bc, cplx fa, cplx fma, cplx dfa, cplx dfma) {
  return apply_bc(bc.Ucal.matrix(), fa, fma, dfa, dfma);
}

/// Cayley transform (H + iI)^{-1} (H - iI), inverse of H = i (I - U)^{-1} (I + U).
Matrix2c cayley(const Matrix2c& H);

}  // namespace saext
