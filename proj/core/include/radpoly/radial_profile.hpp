#pragma once

#include <span>
#include <vector>

namespace radpoly {

/// Univariate polynomial in s = rho^2, where rho = r/R is the normalized
/// distance to a center. Every polynomial basis function is stored this way:
/// expanded coefficients, constant term first, trailing zeros trimmed.
class RadialProfile {
 public:
  RadialProfile() : coeffs_{0.0} {}
  explicit RadialProfile(std::vector<double> coeffs);

  /// s^degree.
  static RadialProfile monomial(int degree);

  /// Expanded product of (s - root_k) over all roots.
  static RadialProfile from_roots(std::span<const double> roots);

  /// Horner evaluation at s.
  double operator()(double s) const;

  /// Laplacian of the profile as a function of x in R^d, up to the 1/R^2
  /// factor the caller applies: sum_m a_m * 2m(2m+d-2) * s^(m-1). The radial
  /// term rho^(2m) has Laplacian 2m(2m+d-2) rho^(2m-2) / R^2.
  double laplacian(double s, int d) const;

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const double> coeffs() const { return coeffs_; }

 private:
  std::vector<double> coeffs_;
};

/// Positive roots t_1 > ... > t_n of the first-kind Chebyshev polynomial of
/// degree 2n+1: t_k = cos((2k-1) pi / (4n+2)).
std::vector<double> chebyshev_roots(int n);

/// Truncated Maclaurin series of exp(-eps^2 r^2) in s = (r/R)^2:
/// coefficients (-1)^k (eps R)^(2k) / k! for k = 0..n.
RadialProfile gaussian_taylor_profile(int n, double eps, double R);

}  // namespace radpoly
