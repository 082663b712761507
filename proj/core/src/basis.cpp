#include "radpoly/basis.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace radpoly {

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::vector<double> radii_for(const PointSet& centers) {
  return normalization_radii(centers, centers.domain);
}

// Block index j of the 1-based function index i: smallest j with i <= h(j),
// capped at n for the repeated top block.
int block_of(std::size_t i, int n, int d) {
  for (int j = 0; j <= n; ++j) {
    if (i <= dim_h(j, d)) return j;
  }
  return n;
}

}  // namespace

std::uint64_t dim_h(int n, int d) {
  if (n < 0 || d < 1) throw std::invalid_argument("dim_h: need n >= 0 and d >= 1");
  std::uint64_t total = binomial(n + d - 1, n);
  for (int i = 0; i < n; ++i) total += 2 * binomial(i + d - 1, i);
  return total;
}

double kernel_value(const Kernel& k, double r2) {
  double e2 = k.eps * k.eps;
  switch (k.kind) {
    case KernelKind::gaussian: return std::exp(-e2 * r2);
    case KernelKind::multiquadric: return std::sqrt(1.0 + e2 * r2);
    case KernelKind::inverse_multiquadric: return 1.0 / std::sqrt(1.0 + e2 * r2);
    case KernelKind::inverse_quadric: return 1.0 / (1.0 + e2 * r2);
  }
  return 0.0;
}

double kernel_laplacian(const Kernel& k, double r2, int d) {
  double e2 = k.eps * k.eps;
  double e4 = e2 * e2;
  double q = 1.0 + e2 * r2;
  switch (k.kind) {
    case KernelKind::gaussian:
      return (4.0 * e4 * r2 - 2.0 * d * e2) * std::exp(-e2 * r2);
    case KernelKind::multiquadric:
      return d * e2 / std::sqrt(q) - e4 * r2 / (q * std::sqrt(q));
    case KernelKind::inverse_multiquadric:
      return -d * e2 / (q * std::sqrt(q)) + 3.0 * e4 * r2 / (q * q * std::sqrt(q));
    case KernelKind::inverse_quadric:
      return -2.0 * d * e2 / (q * q) + 8.0 * e4 * r2 / (q * q * q);
  }
  return 0.0;
}

const char* kernel_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::gaussian: return "ga";
    case KernelKind::multiquadric: return "mq";
    case KernelKind::inverse_multiquadric: return "imq";
    case KernelKind::inverse_quadric: return "iq";
  }
  return "?";
}

BasisFamily make_monomial_basis(const PointSet& centers, int n) {
  if (centers.size() == 0) throw std::invalid_argument("make_monomial_basis: empty centers");
  if (n < 1) throw std::invalid_argument("make_monomial_basis: need n >= 1");

  std::vector<double> radii = radii_for(centers);
  BasisFamily family;
  family.kind = FamilyKind::monomial;
  family.degree = n;
  family.dim = centers.domain.dim();
  family.functions.reserve(centers.size());
  RadialProfile profile = RadialProfile::monomial(n);
  for (std::size_t i = 0; i < centers.size(); ++i) {
    family.functions.push_back({centers.points[i], radii[i], profile});
  }
  return family;
}

BasisFamily make_semicardinal_basis(const PointSet& centers, int n, double tau) {
  if (centers.size() == 0) throw std::invalid_argument("make_semicardinal_basis: empty centers");
  if (n < 1) throw std::invalid_argument("make_semicardinal_basis: need n >= 1");
  if (tau < 0.0) throw std::invalid_argument("make_semicardinal_basis: need tau >= 0");

  std::vector<double> roots = chebyshev_roots(n);
  for (double& t : roots) t = std::pow(t, tau);
  RadialProfile profile = RadialProfile::from_roots(roots);

  std::vector<double> radii = radii_for(centers);
  BasisFamily family;
  family.kind = FamilyKind::semicardinal;
  family.degree = n;
  family.dim = centers.domain.dim();
  family.tau = tau;
  family.functions.reserve(centers.size());
  for (std::size_t i = 0; i < centers.size(); ++i) {
    family.functions.push_back({centers.points[i], radii[i], profile});
  }
  return family;
}

BasisFamily make_regularized_basis(const PointSet& centers, int n, RegularizedKind kind) {
  if (n < 1) throw std::invalid_argument("make_regularized_basis: need n >= 1");
  int d = centers.domain.dim();
  if (centers.size() < dim_h(n, d)) {
    throw std::invalid_argument("make_regularized_basis: need at least h(n) centers");
  }

  // One profile per block; block 0 is the constant 1.
  std::vector<RadialProfile> profiles;
  profiles.reserve(static_cast<std::size_t>(n) + 1);
  profiles.emplace_back(std::vector<double>{1.0});
  for (int j = 1; j <= n; ++j) {
    if (kind == RegularizedKind::monomial) {
      profiles.push_back(RadialProfile::monomial(j));
    } else {
      std::vector<double> roots = chebyshev_roots(j);
      for (double& t : roots) t *= t;
      profiles.push_back(RadialProfile::from_roots(roots));
    }
  }

  std::vector<double> radii = radii_for(centers);
  BasisFamily family;
  family.kind = kind == RegularizedKind::monomial ? FamilyKind::regularized_monomial
                                                  : FamilyKind::regularized_chebyshev;
  family.degree = n;
  family.dim = d;
  family.functions.reserve(centers.size());
  for (std::size_t i = 0; i < centers.size(); ++i) {
    int j = block_of(i + 1, n, d);
    family.functions.push_back({centers.points[i], radii[i], profiles[static_cast<std::size_t>(j)]});
  }
  return family;
}

BasisFamily make_kernel_basis(const PointSet& centers, KernelKind kind, double eps) {
  if (centers.size() == 0) throw std::invalid_argument("make_kernel_basis: empty centers");
  if (!(eps > 0.0)) throw std::invalid_argument("make_kernel_basis: need eps > 0");

  BasisFamily family;
  family.kind = FamilyKind::kernel;
  family.dim = centers.domain.dim();
  family.functions.reserve(centers.size());
  for (const Point& c : centers.points) {
    family.functions.push_back({c, 1.0, Kernel{kind, eps}});
  }
  return family;
}

double eval(const BasisFunction& b, const Point& x) {
  double r2 = squared_distance(b.center, x);
  if (b.is_kernel()) return kernel_value(b.kernel(), r2);
  return b.profile()(r2 / (b.R * b.R));
}

double laplacian(const BasisFunction& b, const Point& x) {
  double r2 = squared_distance(b.center, x);
  if (b.is_kernel()) return kernel_laplacian(b.kernel(), r2, x.dim());
  double R2 = b.R * b.R;
  return b.profile().laplacian(r2 / R2, x.dim()) / R2;
}

void write_family_csv(std::ostream& os, const BasisFamily& family) {
  os << "center_coords,R,coeffs\n";
  char buf[64];
  for (const BasisFunction& f : family.functions) {
    for (int k = 0; k < f.center.dim(); ++k) {
      std::snprintf(buf, sizeof buf, "%.17g", f.center[k]);
      os << buf << (k + 1 < f.center.dim() ? ' ' : ',');
    }
    std::snprintf(buf, sizeof buf, "%.17g", f.R);
    os << buf;
    if (!f.is_kernel()) {
      for (double a : f.profile().coeffs()) {
        std::snprintf(buf, sizeof buf, "%.17g", a);
        os << ',' << buf;
      }
    }
    os << '\n';
  }
}

}  // namespace radpoly
