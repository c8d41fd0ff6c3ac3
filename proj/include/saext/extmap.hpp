#pragma once

#include <cstdint>

#include "saext/deficiency.hpp"
#include "saext/unitary.hpp"

namespace saext {

struct VPair {
  Matrix2c V;
  Matrix2c Vtilde;
};

/// V = conj(A) - i conj(B) + conj(U)(A - iB),  Vtilde = -[conj(A) + i conj(B) + conj(U)(A + iB)].
/// U need not be unitary. Even-mode boundary data only.
VPair build_v_vtilde(const BoundaryData& basis, const Matrix2c& U);

/// The pair (U, boundary-condition unitary) with every intermediate of the map.
struct MapPair {
  BoundaryData basis;
  Unitary2 U;
  Unitary2 Utilde;  // V^{-1} Vtilde: acts on (F - i f) = Utilde (F + i f)
  Unitary2 Ucal;    // acts on the endpoint vectors of the boundary condition
  Matrix2c V;
  Matrix2c Vtilde;
};

/// 1/2 P Utilde Q with P = [[1,1],[-1,1]], Q = [[1,-1],[1,1]].
Matrix2c boundary_from_tilde(const Matrix2c& Utilde);
/// Inverse change of basis: 1/2 Q Ucal P.
Matrix2c tilde_from_boundary(const Matrix2c& Ucal);

MapPair forward_map(const BoundaryData& basis, const Unitary2& U);

/// The linear system V Utilde = Vtilde in the unknowns conj(U), row-major, as a 4x4 matrix.
struct InverseSystem {
  Matrix4c matrix;
  Eigen::Vector4cd rhs;
};
InverseSystem inverse_system(const BoundaryData& basis, const Matrix2c& Ucal);

/// Recovers U from the boundary-condition unitary; throws UniquenessError when the
/// 4x4 system is numerically singular (sigma_min <= 1e-10 sigma_max).
Unitary2 inverse_map(const BoundaryData& basis, const Unitary2& Ucal);

/// General-mode map through the z-vectors of the domain functions G_j:
/// Ucal = (Z^- (Z^+)^{-1})^dagger.
Unitary2 forward_map_general(const BoundaryData& basis, const Unitary2& U);

struct IdentityReport {
  int samples = 0;
  int unitv_pass = 0, unitv_fail = 0;
  double unitv_worst = 0.0;  // relative residual, both unitary and non-unitary draws
  int unitary_out_pass = 0, unitary_out_fail = 0;
  double unitary_out_worst = 0.0;
  int nonsingular_pass = 0, nonsingular_fail = 0;
  double v_sigma_min = 0.0;       // smallest sigma_min(V) or sigma_min(Vtilde) seen
  int homogeneous_pass = 0, homogeneous_fail = 0;
  double homogeneous_sigma_min = 0.0;
  int roundtrip_pass = 0, roundtrip_fail = 0;
  double roundtrip_worst = 0.0;

  bool passed() const {
    return unitv_fail == 0 && unitary_out_fail == 0 && nonsingular_fail == 0 &&
           homogeneous_fail == 0 && roundtrip_fail == 0;
  }
};

struct IdentityThresholds {
  double unitv = 1e-8;
  double unitary_out = 1e-9;
  double sigma_floor = 1e-6;
  double roundtrip = 1e-8;
};

/// Samples `samples` Haar unitaries and `samples` Ginibre matrices and checks the
/// unitarity identity, the regularity of V and Vtilde, the inverse system and the
/// round trip. Draws are generated serially from `seed` and evaluated in parallel.
IdentityReport check_identities(const BoundaryData& basis, int samples, std::uint64_t seed = 20240611,
                                const IdentityThresholds& thresholds = {});

/// ||V V^+ - Vt Vt^+ - 2 (I - conj(U) conj(U)^+)||_F relative to max(1, ||V||^2, ||Vt||^2).
double unitv_residual(const VPair& v, const Matrix2c& U);

}  // namespace saext
