#pragma once

#include <vector>

#include "radpoly/basis.hpp"
#include "radpoly/geometry.hpp"
#include "radpoly/linalg.hpp"
#include "radpoly/report.hpp"

namespace radpoly {

/// A finite-dimensional function space over a 2-D box: either the radial
/// polynomial space of degree n or total-degree polynomials of degree m.
///
/// The radial space has two interchangeable bases. The default analytic
/// basis (monomials of degree <= n plus homogeneous degree n-i monomials
/// times r^2i) stays polynomially conditioned and reaches residuals near
/// machine precision. The translate basis uses the generators (r_i^2)^n at
/// well-spread centers; it spans the same space but its conditioning blows
/// up with n, so it serves as a cross-check at small n.
struct FunctionSpaceSpec {
  enum class Kind { radial, polynomial };
  enum class RadialRoute { analytic, translates };

  Kind kind = Kind::radial;
  int degree = 2;  // n for the radial space, m for polynomials
  Box domain{Point(-1.0, -1.0), Point(1.0, 1.0)};
  RadialRoute route = RadialRoute::analytic;
  std::vector<Point> generators;     // optional custom translate centers
  unsigned long long seed = 12345;   // extra random translate centers

  static FunctionSpaceSpec radial(int n, const Box& box);
  static FunctionSpaceSpec radial_translates(int n, const Box& box,
                                             unsigned long long seed = 12345);
  static FunctionSpaceSpec polynomial(int m, const Box& box);

  /// Total polynomial degree of the space's elements.
  int max_total_degree() const;
  /// Theoretical dimension.
  int dimension() const;
};

struct DistanceResult {
  double distance = 0.0;             // weighted L2 residual over the box
  double normalized_distance = 0.0;  // distance / sqrt(area)
  Vector coefficients;               // best-approximation coefficients
  int quad_order = 0;
  double cond = 0.0;                 // of the scaled weighted design matrix
  int rank = 0;                      // numerical rank at 1e-10 relative
  bool rank_collapse = false;        // rank below the space dimension
};

/// L2(box) distance from the target function to the space, computed as a
/// weighted least-squares residual on a tensor Gauss-Legendre grid with
/// quad_order points per axis. Requires quad_order >= max_total_degree + 2.
DistanceResult distance_to_space(const BasisFunction& phi0, const FunctionSpaceSpec& space,
                                 int quad_order);

/// Distance table over kernels x {radial space, odd polynomials, even
/// polynomials} x n = n_min..n_max, with the kernel centered at the box
/// center. CSV columns rbf,space,n,distance,cond,quad_order.
ExperimentReport table2(const std::vector<KernelKind>& kinds, int n_min, int n_max, double eps,
                        const Box& domain, int quad_order);

}  // namespace radpoly
