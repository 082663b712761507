#pragma once

#include <cstdint>
#include <iosfwd>
#include <variant>
#include <vector>

#include "radpoly/geometry.hpp"
#include "radpoly/radial_profile.hpp"

namespace radpoly {

enum class KernelKind { gaussian, multiquadric, inverse_multiquadric, inverse_quadric };

struct Kernel {
  KernelKind kind = KernelKind::gaussian;
  double eps = 1.0;
};

/// One basis function: a center, a normalization radius R, and either a
/// radial polynomial profile in s = (r/R)^2 or a kernel. Kernels ignore the
/// normalization radius (R = 1).
struct BasisFunction {
  Point center;
  double R = 1.0;
  std::variant<RadialProfile, Kernel> shape;

  bool is_kernel() const { return std::holds_alternative<Kernel>(shape); }
  const RadialProfile& profile() const { return std::get<RadialProfile>(shape); }
  const Kernel& kernel() const { return std::get<Kernel>(shape); }
};

enum class FamilyKind {
  monomial,               // r^2n, normalized
  semicardinal,           // product over Chebyshev-root offsets t_k^tau
  regularized_monomial,   // staged degrees: block j carries r^2j
  regularized_chebyshev,  // staged degrees with block-local Chebyshev roots
  kernel
};

struct BasisFamily {
  std::vector<BasisFunction> functions;
  FamilyKind kind = FamilyKind::monomial;
  int degree = 0;  // n for polynomial families, unused for kernels
  int dim = 1;
  double tau = 2.0;  // semicardinal exponent, unused otherwise

  std::size_t size() const { return functions.size(); }
};

/// Dimension of the radial polynomial space of degree n in R^d:
/// 2 * sum_{i<n} C(i+d-1, i) + C(n+d-1, n). Closed forms: 2n+1 in d=1,
/// (n+1)^2 in d=2, (n+1)(n+2)(2n+3)/6 in d=3.
std::uint64_t dim_h(int n, int d);

double kernel_value(const Kernel& k, double r2);
double kernel_laplacian(const Kernel& k, double r2, int d);

/// Short lowercase tag used in reports and on the command line:
/// "ga", "mq", "imq" or "iq".
const char* kernel_name(KernelKind kind);

/// Plain radial monomials: function i has profile s^n with its own
/// normalization radius taken from the center set's domain.
BasisFamily make_monomial_basis(const PointSet& centers, int n);

/// Semi-cardinal family: profile prod_{k=1..n} (s - t_k^tau) with t_k the
/// positive roots of the degree-(2n+1) first-kind Chebyshev polynomial.
BasisFamily make_semicardinal_basis(const PointSet& centers, int n, double tau);

enum class RegularizedKind { monomial, chebyshev };

/// Staged-degree family: function 1 is the constant 1; function i with
/// h(j-1) < i <= h(j) gets degree j in s, either s^j (monomial) or the
/// product over the Chebyshev roots of degree j (chebyshev). Centers beyond
/// h(n) repeat the top block. Requires at least h(n) centers.
BasisFamily make_regularized_basis(const PointSet& centers, int n, RegularizedKind kind);

BasisFamily make_kernel_basis(const PointSet& centers, KernelKind kind, double eps);

/// Value of one basis function at x.
double eval(const BasisFunction& b, const Point& x);

/// Laplacian of one basis function at x, in the dimension of x.
double laplacian(const BasisFunction& b, const Point& x);

/// Debug export: one row per function with center coords, R and the
/// coefficient list (empty for kernels).
void write_family_csv(std::ostream& os, const BasisFamily& family);

}  // namespace radpoly
