#include "saext/unitary.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "saext/errors.hpp"

namespace saext {

SingularValues2 singular_values(const Matrix2c& m) {
  const double fro2 = m.squaredNorm();
  const double det = std::abs(m.determinant());
  const double disc = std::sqrt(std::max(0.0, fro2 * fro2 - 4.0 * det * det));
  const double smax = std::sqrt(0.5 * (fro2 + disc));
  return {smax, smax > 0.0 ? det / smax : 0.0};
}

bool is_singular(const Matrix2c& m, double rel_tol) {
  const auto s = singular_values(m);
  return s.max == 0.0 || s.min <= rel_tol * s.max;
}

Matrix2c inverse2(const Matrix2c& m, double rel_tol) {
  if (is_singular(m, rel_tol)) throw SingularMatrixError("2x2 matrix is numerically singular");
  const auto det = m.determinant();
  Matrix2c adj;
  adj << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return adj / det;
}

double unitarity_defect(const Matrix2c& m) {
  return (m.adjoint() * m - Matrix2c::Identity()).norm();
}

Unitary2 Unitary2::certify(const Matrix2c& m, double tol) {
  if (!m.allFinite()) throw CertificationError("matrix has non-finite entries");
  const double defect = unitarity_defect(m);
  if (!(defect <= tol)) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", defect);
    throw CertificationError(std::string("matrix is not unitary: ||M^+M - I||_F = ") + buf);
  }
  return Unitary2(m);
}

Matrix2c random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix2c z;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(i, j) = {re, im};
    }
  }
  return z;
}

Matrix2c nearest_unitary(const Matrix2c& m) {
  const Eigen::JacobiSVD<Matrix2c> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

Matrix2c haar_unitary(std::mt19937_64& rng) {
  const Matrix2c z = random_complex(rng) / std::sqrt(2.0);
  Eigen::HouseholderQR<Matrix2c> qr(z);
  Matrix2c q = qr.householderQ();
  const Matrix2c r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 2; ++j) {
    const auto d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

}  // namespace saext
