#include "radpoly/radial_profile.hpp"

#include <cmath>
#include <stdexcept>

namespace radpoly {

RadialProfile::RadialProfile(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("RadialProfile: empty coefficient list");
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

RadialProfile RadialProfile::monomial(int degree) {
  if (degree < 0) throw std::invalid_argument("RadialProfile::monomial: negative degree");
  std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
  c.back() = 1.0;
  return RadialProfile(std::move(c));
}

RadialProfile RadialProfile::from_roots(std::span<const double> roots) {
  std::vector<double> c{1.0};
  for (double root : roots) {
    c.push_back(0.0);
    for (std::size_t m = c.size() - 1; m > 0; --m) {
      c[m] = c[m - 1] - root * c[m];
    }
    c[0] *= -root;
  }
  return RadialProfile(std::move(c));
}

double RadialProfile::operator()(double s) const {
  double v = 0.0;
  for (std::size_t m = coeffs_.size(); m-- > 0;) v = v * s + coeffs_[m];
  return v;
}

double RadialProfile::laplacian(double s, int d) const {
  if (d < 1) throw std::invalid_argument("RadialProfile::laplacian: d must be >= 1");
  double v = 0.0;
  for (std::size_t m = coeffs_.size(); m-- > 1;) {
    double dm = static_cast<double>(m);
    v = v * s + coeffs_[m] * 2.0 * dm * (2.0 * dm + d - 2.0);
  }
  return v;
}

std::vector<double> chebyshev_roots(int n) {
  if (n < 1) throw std::invalid_argument("chebyshev_roots: need n >= 1");
  const double pi = std::acos(-1.0);
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    t[static_cast<std::size_t>(k - 1)] = std::cos((2.0 * k - 1.0) * pi / (4.0 * n + 2.0));
  }
  return t;
}

RadialProfile gaussian_taylor_profile(int n, double eps, double R) {
  if (n < 0) throw std::invalid_argument("gaussian_taylor_profile: need n >= 0");
  if (!(eps > 0.0) || !(R > 0.0)) throw std::invalid_argument("gaussian_taylor_profile: eps and R must be positive");
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  double g = eps * R * eps * R;
  double term = 1.0;
  c[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    term *= -g / k;
    c[static_cast<std::size_t>(k)] = term;
  }
  return RadialProfile(std::move(c));
}

}  // namespace radpoly
