#include "radpoly/poisson.hpp"

#include <stdexcept>

#include "radpoly/parallel.hpp"

namespace radpoly {

std::pair<Matrix, Vector> assemble_poisson(const PoissonProblem& p, const BasisFamily& family) {
  const PointSet& c = p.centers;
  if (c.size() != family.size()) {
    throw std::invalid_argument("assemble_poisson: family size must match center count");
  }
  if (!p.source || !p.boundary) {
    throw std::invalid_argument("assemble_poisson: source and boundary fields required");
  }

  bool any_boundary = false, any_interior = false;
  for (bool b : c.boundary_mask) (b ? any_boundary : any_interior) = true;
  if (!any_boundary || !any_interior) {
    throw std::invalid_argument(
        "assemble_poisson: ill-posed collocation, need boundary and interior rows");
  }

  Matrix C(c.size(), family.size());
  Vector b(c.size());
  parallel_for(c.size(), [&](std::size_t i) {
    Eigen::Index row = static_cast<Eigen::Index>(i);
    if (c.boundary_mask[i]) {
      for (std::size_t j = 0; j < family.size(); ++j) {
        C(row, static_cast<Eigen::Index>(j)) = eval(family.functions[j], c.points[i]);
      }
      b(row) = p.boundary(c.points[i]);
    } else {
      for (std::size_t j = 0; j < family.size(); ++j) {
        C(row, static_cast<Eigen::Index>(j)) = laplacian(family.functions[j], c.points[i]);
      }
      b(row) = p.source(c.points[i]);
    }
  });
  return {std::move(C), std::move(b)};
}

Interpolant solve_poisson(const PoissonProblem& p, const BasisFamily& family) {
  auto [C, b] = assemble_poisson(p, family);
  return solve_collocation(family, C, b);
}

}  // namespace radpoly
