#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>

namespace saext {

using Matrix2c = Eigen::Matrix2cd;
using Vector2c = Eigen::Vector2cd;
using Matrix4c = Eigen::Matrix4cd;

struct SingularValues2 {
  double max = 0.0;
  double min = 0.0;
};

/// Closed form for 2x2; the small value is |det| / sigma_max so it keeps full
/// relative accuracy near singularity.
SingularValues2 singular_values(const Matrix2c& m);

/// sigma_min <= rel_tol * sigma_max, or the matrix is zero.
bool is_singular(const Matrix2c& m, double rel_tol);

/// Adjugate inverse; throws SingularMatrixError when sigma_min/sigma_max <= rel_tol.
Matrix2c inverse2(const Matrix2c& m, double rel_tol = 1e-8);

/// ||m^dagger m - I||_F
double unitarity_defect(const Matrix2c& m);

/// Entrywise complex conjugate (not the adjoint).
inline Matrix2c conj(const Matrix2c& m) { return m.conjugate(); }

/// A 2x2 complex matrix certified unitary at construction.
class Unitary2 {
 public:
  static constexpr double kInputTol = 1e-10;
  static constexpr double kOutputTol = 1e-9;

  /// Throws CertificationError when ||m^dagger m - I||_F > tol.
  static Unitary2 certify(const Matrix2c& m, double tol = kInputTol);
  static Unitary2 identity() { return Unitary2(Matrix2c::Identity()); }

  const Matrix2c& matrix() const noexcept { return m_; }
  std::complex<double> operator()(int i, int j) const { return m_(i, j); }

 private:
  explicit Unitary2(const Matrix2c& m) : m_(m) {}
  Matrix2c m_;
};

/// Closest unitary in the Frobenius norm (polar factor U V^dagger of the SVD).
Matrix2c nearest_unitary(const Matrix2c& m);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with R's diagonal phases removed.
Matrix2c haar_unitary(std::mt19937_64& rng);

/// Entries i.i.d. standard complex normal.
Matrix2c random_complex(std::mt19937_64& rng);

}  // namespace saext
