#include "radpoly/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace radpoly {

SolveInfo solve_dense(const Matrix& A, const Vector& b) {
  if (A.rows() != A.cols()) throw std::invalid_argument("solve_dense: matrix must be square");
  if (A.rows() != b.size()) throw std::invalid_argument("solve_dense: size mismatch");

  Eigen::PartialPivLU<Matrix> lu(A);
  // Partial pivoting cannot repair a structurally singular matrix; an exact
  // zero on the U diagonal means elimination broke down.
  if ((lu.matrixLU().diagonal().array() == 0.0).any()) {
    throw SingularMatrixError("solve_dense: exactly singular matrix (zero pivot)");
  }

  SolveInfo info;
  info.x = lu.solve(b);
  double bnorm = b.norm();
  double rnorm = (A * info.x - b).norm();
  info.relative_residual = bnorm > 0.0 ? rnorm / bnorm : rnorm;
  return info;
}

Vector lstsq_qr(const Matrix& A, const Vector& b) {
  if (A.rows() < A.cols()) throw std::invalid_argument("lstsq_qr: need rows >= cols");
  if (A.rows() != b.size()) throw std::invalid_argument("lstsq_qr: size mismatch");

  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(A.rows(), A.cols());
  cod.setThreshold(1e-12);
  cod.compute(A);
  return cod.solve(b);
}

Vector lstsq_svd(const Matrix& A, const Vector& b, double rcond) {
  if (A.rows() != b.size()) throw std::invalid_argument("lstsq_svd: size mismatch");

  Eigen::BDCSVD<Matrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& sigma = svd.singularValues();
  double cutoff = sigma.size() > 0 ? rcond * sigma(0) : 0.0;

  Vector beta = svd.matrixU().transpose() * b;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    beta(i) = sigma(i) > cutoff ? beta(i) / sigma(i) : 0.0;
  }
  return svd.matrixV() * beta;
}

double cond2(const Matrix& A) {
  if (A.size() == 0) throw std::invalid_argument("cond2: empty matrix");
  Eigen::BDCSVD<Matrix> svd(A);
  const Vector& sigma = svd.singularValues();
  double smax = sigma(0);
  double smin = sigma(sigma.size() - 1);
  if (smin < 1e-300) return std::numeric_limits<double>::infinity();
  return smax / smin;
}

int numerical_rank(const Matrix& A, double rel_tol) {
  if (rel_tol <= 0.0 || rel_tol >= 1.0) throw std::invalid_argument("numerical_rank: rel_tol must be in (0,1)");
  Eigen::BDCSVD<Matrix> svd(A);
  const Vector& sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
  double cutoff = rel_tol * sigma(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) >= cutoff) ++rank;
  }
  return rank;
}

QuadratureRule gauss_legendre(int m) {
  if (m < 1 || m > 200) throw std::invalid_argument("gauss_legendre: order must be in [1, 200]");

  QuadratureRule rule;
  rule.nodes.assign(m, 0.0);
  rule.weights.assign(m, 0.0);

  const double pi = std::acos(-1.0);
  int half = (m + 1) / 2;
  for (int i = 1; i <= half; ++i) {
    // Tricomi initial guess, then Newton on the three-term recurrence.
    double z = std::cos(pi * (i - 0.25) / (m + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 1; j <= m; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      pp = m * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    rule.nodes[i - 1] = -z;
    rule.nodes[m - i] = z;
    double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[i - 1] = w;
    rule.weights[m - i] = w;
  }
  return rule;
}

}  // namespace radpoly
