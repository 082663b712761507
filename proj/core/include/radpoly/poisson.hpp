#pragma once

#include <functional>
#include <utility>

#include "radpoly/interpolation.hpp"

namespace radpoly {

/// Dirichlet problem Laplacian(u) = f on the centers' domain, u = g on the
/// boundary, collocated at the centers. The boundary mask of the center set
/// decides which rows enforce the PDE and which enforce the boundary data.
struct PoissonProblem {
  std::function<double(const Point&)> source;    // f, sampled at interior centers
  std::function<double(const Point&)> boundary;  // g, sampled at boundary centers
  PointSet centers;
};

/// Collocation matrix and right-hand side: interior row i has entries
/// laplacian(function j, x_i) and value f(x_i); boundary rows evaluate the
/// functions directly against g.
std::pair<Matrix, Vector> assemble_poisson(const PoissonProblem& p, const BasisFamily& family);

/// Assembles and solves; solver policy as in solve_collocation.
Interpolant solve_poisson(const PoissonProblem& p, const BasisFamily& family);

}  // namespace radpoly
