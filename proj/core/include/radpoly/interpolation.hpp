#pragma once

#include <span>
#include <vector>

#include "radpoly/basis.hpp"
#include "radpoly/geometry.hpp"
#include "radpoly/linalg.hpp"

namespace radpoly {

struct Interpolant {
  BasisFamily family;
  Vector lambda;
  double cond = 0.0;           // cond2 of the collocation matrix
  double fit_residual = 0.0;   // ||Phi lambda - b|| / ||b||
  bool used_least_squares = false;
};

/// Collocation matrix: entry (i, j) = value of function j at node i. Accepts
/// square systems or more nodes than functions (least-squares mode).
Matrix assemble(const BasisFamily& family, const PointSet& nodes);

/// Solver core shared by interpolation and collocation: well-conditioned
/// square systems go through LU; when the matrix is numerically singular
/// (cond2 above 1e12, the point where elimination stops carrying information)
/// or rectangular, the solve switches to truncated minimum-norm least squares
/// instead of aborting.
Interpolant solve_collocation(const BasisFamily& family, const Matrix& A, const Vector& b);

/// Solves Phi lambda = values over the family evaluated at the nodes.
Interpolant fit(const BasisFamily& family, const PointSet& nodes, const Vector& values);

std::vector<double> evaluate(const Interpolant& u, std::span<const Point> points);

/// sqrt(mean squared difference).
double rmse(std::span<const double> exact, std::span<const double> approx);

/// Phi^T Phi, the pairwise-dependency matrix of the family on the nodes.
Matrix gram(const BasisFamily& family, const PointSet& nodes);

}  // namespace radpoly
