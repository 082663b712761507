#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

namespace radpoly {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Thrown when an LU factorization meets an exactly zero pivot.
class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveInfo {
  Vector x;
  double relative_residual = 0.0;
};

/// Solves a square system by LU with partial pivoting and reports the
/// relative residual ||Ax - b|| / ||b||.
SolveInfo solve_dense(const Matrix& A, const Vector& b);

/// Least-squares minimizer of ||Ax - b|| for m >= k via a rank-revealing
/// orthogonal factorization. Columns whose pivots fall below 1e-12 times the
/// largest pivot are treated as dependent and the minimum-norm solution is
/// returned instead of failing.
Vector lstsq_qr(const Matrix& A, const Vector& b);

/// Minimum-norm least-squares solve through a truncated SVD: singular values
/// below rcond times the largest are discarded. Accepts any shape, including
/// square near-singular systems where elimination loses all accuracy.
Vector lstsq_svd(const Matrix& A, const Vector& b, double rcond);

/// Spectral condition number sigma_max / sigma_min. Returns +inf when the
/// smallest singular value underflows (below 1e-300).
double cond2(const Matrix& A);

/// Number of singular values >= rel_tol * sigma_max.
int numerical_rank(const Matrix& A, double rel_tol);

struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing, inside (-1, 1)
  std::vector<double> weights;  // positive, summing to 2
};

/// m-point Gauss-Legendre rule on [-1, 1], exact for degree <= 2m-1.
QuadratureRule gauss_legendre(int m);

}  // namespace radpoly
