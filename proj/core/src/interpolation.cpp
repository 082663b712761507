#include "radpoly/interpolation.hpp"

#include <cmath>
#include <stdexcept>

#include "radpoly/parallel.hpp"

namespace radpoly {

namespace {
constexpr double kNearSingularCond = 1e12;
constexpr double kMinNormRcond = 1e-12;
}  // namespace

Matrix assemble(const BasisFamily& family, const PointSet& nodes) {
  if (nodes.size() < family.size()) {
    throw std::invalid_argument("assemble: need at least as many nodes as basis functions");
  }
  if (nodes.size() > 0 && nodes.points[0].dim() != family.dim) {
    throw std::invalid_argument("assemble: dimension mismatch");
  }

  Matrix A(nodes.size(), family.size());
  parallel_for(nodes.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          eval(family.functions[j], nodes.points[i]);
    }
  });
  return A;
}

Interpolant solve_collocation(const BasisFamily& family, const Matrix& A, const Vector& b) {
  if (static_cast<std::size_t>(A.cols()) != family.size() || A.rows() != b.size()) {
    throw std::invalid_argument("solve_collocation: shape mismatch");
  }

  Interpolant u;
  u.family = family;
  u.cond = cond2(A);

  if (A.rows() == A.cols() && u.cond < kNearSingularCond) {
    try {
      SolveInfo info = solve_dense(A, b);
      u.lambda = std::move(info.x);
      u.fit_residual = info.relative_residual;
      return u;
    } catch (const SingularMatrixError&) {
      // fall through to the least-squares path
    }
  }

  u.lambda = lstsq_svd(A, b, kMinNormRcond);
  u.used_least_squares = true;
  double bnorm = b.norm();
  double rnorm = (A * u.lambda - b).norm();
  u.fit_residual = bnorm > 0.0 ? rnorm / bnorm : rnorm;
  return u;
}

Interpolant fit(const BasisFamily& family, const PointSet& nodes, const Vector& values) {
  if (static_cast<std::size_t>(values.size()) != nodes.size()) {
    throw std::invalid_argument("fit: values length must match node count");
  }
  return solve_collocation(family, assemble(family, nodes), values);
}

std::vector<double> evaluate(const Interpolant& u, std::span<const Point> points) {
  if (static_cast<std::size_t>(u.lambda.size()) != u.family.size()) {
    throw std::invalid_argument("evaluate: coefficient count must match family size");
  }
  std::vector<double> out(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    double v = 0.0;
    for (std::size_t j = 0; j < u.family.size(); ++j) {
      v += u.lambda(static_cast<Eigen::Index>(j)) * eval(u.family.functions[j], points[i]);
    }
    out[i] = v;
  });
  return out;
}

double rmse(std::span<const double> exact, std::span<const double> approx) {
  if (exact.size() != approx.size() || exact.empty()) {
    throw std::invalid_argument("rmse: lists must have equal nonzero length");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    double d = exact[i] - approx[i];
    s += d * d;
  }
  return std::sqrt(s / static_cast<double>(exact.size()));
}

Matrix gram(const BasisFamily& family, const PointSet& nodes) {
  Matrix A = assemble(family, nodes);
  return A.transpose() * A;
}

}  // namespace radpoly
