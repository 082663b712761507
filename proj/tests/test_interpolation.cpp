#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "radpoly/basis.hpp"
#include "radpoly/geometry.hpp"
#include "radpoly/interpolation.hpp"
#include "radpoly/linalg.hpp"

using namespace radpoly;

namespace {

// 31 equispaced 1-D centers (i-1)/30 on [0,1].
PointSet line_centers_31() {
  PointSet ps;
  ps.domain = unit_box(1);
  for (int i = 1; i <= 31; ++i) {
    ps.points.emplace_back((i - 1) / 30.0);
    ps.boundary_mask.push_back(i == 1 || i == 31);
  }
  return ps;
}

BasisFamily one_constant_function(const Point& center) {
  BasisFamily fam;
  fam.dim = center.dim();
  fam.functions.push_back({center, 1.0, RadialProfile({1.0})});
  return fam;
}

}  // namespace

TEST_CASE("assemble fills values column by column") {
  PointSet node;
  node.domain = unit_box(1);
  node.points.emplace_back(0.37);
  node.boundary_mask.push_back(false);

  Matrix A = assemble(one_constant_function(Point(0.9)), node);
  REQUIRE(A.rows() == 1);
  REQUIRE(A.cols() == 1);
  CHECK(A(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("assemble of a kernel family at its own centers has unit diagonal") {
  PointSet centers = halton_set(12, unit_box(2));
  BasisFamily fam = make_kernel_basis(centers, KernelKind::gaussian, 2.0);
  Matrix A = assemble(fam, centers);
  for (int i = 0; i < 12; ++i) CHECK(A(i, i) == doctest::Approx(1.0));
}

TEST_CASE("assemble of the plain monomial family vanishes on the diagonal") {
  PointSet centers = line_centers_31();
  BasisFamily fam = make_monomial_basis(centers, 15);
  Matrix A = assemble(fam, centers);
  for (int i = 0; i < 31; ++i) CHECK(A(i, i) == 0.0);
}

TEST_CASE("assemble validates shapes") {
  PointSet centers = halton_set(5, unit_box(2));
  BasisFamily fam = make_kernel_basis(centers, KernelKind::gaussian, 1.0);
  PointSet few = halton_set(3, unit_box(2));
  CHECK_THROWS_AS(assemble(fam, few), std::invalid_argument);

  PointSet wrong_dim = halton_set(8, unit_box(1));
  CHECK_THROWS_AS(assemble(fam, wrong_dim), std::invalid_argument);
}

TEST_CASE("fit of zero data returns zero coefficients") {
  PointSet centers = halton_set(9, unit_box(2));
  BasisFamily fam = make_kernel_basis(centers, KernelKind::inverse_quadric, 1.5);
  Vector zero = Vector::Zero(9);
  Interpolant u = fit(fam, centers, zero);
  CHECK(u.lambda.norm() == 0.0);
  CHECK(u.fit_residual == 0.0);
}

TEST_CASE("regularized family reproduces constants exactly") {
  PointSet centers = halton_set(16, unit_box(2));
  BasisFamily fam = make_regularized_basis(centers, 3, RegularizedKind::chebyshev);
  const double c = 2.5;
  Vector vals = Vector::Constant(16, c);
  Interpolant u = fit(fam, centers, vals);
  std::vector<Point> probes = random_points(unit_box(2), 100, 99ULL);
  for (double v : evaluate(u, probes)) CHECK(std::abs(v - c) < 1e-10);
}

TEST_CASE("d=1 regularized family reproduces a degree-20 polynomial") {
  int n = 10;
  PointSet centers;
  centers.domain = unit_box(1);
  double pi = std::acos(-1.0);
  // Chebyshev nodes of degree 2n+1 mapped to [0,1].
  for (int k = 1; k <= 2 * n + 1; ++k) {
    double t = std::cos((2.0 * k - 1.0) * pi / (2.0 * (2 * n + 1)));
    centers.points.emplace_back(0.5 * (t + 1.0));
    centers.boundary_mask.push_back(false);
  }
  BasisFamily fam = make_regularized_basis(centers, n, RegularizedKind::chebyshev);

  auto poly = [](double x) {
    double v = 0.0, c = 1.0;
    for (int k = 0; k <= 20; ++k) {
      v += c * std::pow(x, k);
      c = -c / (1.0 + 0.5 * k);
    }
    return v;
  };
  Vector vals(centers.size());
  for (std::size_t i = 0; i < centers.size(); ++i) vals(i) = poly(centers.points[i][0]);
  Interpolant u = fit(fam, centers, vals);

  double max_err = 0.0;
  for (int i = 0; i < 200; ++i) {
    Point x(static_cast<double>(i) / 199.0);
    double approx = evaluate(u, std::span<const Point>(&x, 1))[0];
    max_err = std::max(max_err, std::abs(approx - poly(x[0])));
  }
  CHECK(max_err < 1e-7);
}

TEST_CASE("d=2 regularized families reproduce low-degree polynomials") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);

  for (int n : {2, 4, 6}) {
    int N = static_cast<int>(dim_h(n, 2));
    PointSet centers = halton_set(N, unit_box(2));

    // Random polynomial of total degree <= n.
    std::vector<std::array<int, 2>> exps;
    std::vector<double> coef;
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; a + b <= n; ++b) {
        exps.push_back({a, b});
        coef.push_back(unif(rng));
      }
    }
    auto poly = [&](const Point& p) {
      double v = 0.0;
      for (std::size_t k = 0; k < exps.size(); ++k) {
        v += coef[k] * std::pow(p[0], exps[k][0]) * std::pow(p[1], exps[k][1]);
      }
      return v;
    };

    Vector vals(N);
    for (int i = 0; i < N; ++i) vals(i) = poly(centers.points[i]);

    for (RegularizedKind kind : {RegularizedKind::chebyshev, RegularizedKind::monomial}) {
      BasisFamily fam = make_regularized_basis(centers, n, kind);
      Interpolant u = fit(fam, centers, vals);
      std::vector<Point> probes = random_points(unit_box(2), 200, 7ULL);
      std::vector<double> approx = evaluate(u, probes);
      std::vector<double> exact(probes.size());
      for (std::size_t i = 0; i < probes.size(); ++i) exact[i] = poly(probes[i]);
      CHECK(rmse(exact, approx) < 1e-8);
    }
  }
}

TEST_CASE("fit satisfies the interpolation condition at its nodes") {
  PointSet centers = halton_set(25, unit_box(2));
  BasisFamily fam = make_regularized_basis(centers, 4, RegularizedKind::chebyshev);
  Vector vals(25);
  for (int i = 0; i < 25; ++i) {
    vals(i) = std::sin(centers.points[i][0] + centers.points[i][1]);
  }
  Interpolant u = fit(fam, centers, vals);
  std::vector<double> at_nodes = evaluate(u, centers.points);
  double tol = 1e-8 * (1.0 + u.cond * 1e-12);
  for (int i = 0; i < 25; ++i) CHECK(std::abs(at_nodes[static_cast<std::size_t>(i)] - vals(i)) < tol);
}

TEST_CASE("flat kernels fall back to least squares instead of aborting") {
  PointSet centers = halton_set(25, unit_box(2));
  BasisFamily fam = make_kernel_basis(centers, KernelKind::gaussian, 0.01);
  Vector vals(25);
  for (int i = 0; i < 25; ++i) {
    vals(i) = std::sin(centers.points[i][0] + centers.points[i][1]);
  }
  Interpolant u = fit(fam, centers, vals);
  CHECK(u.used_least_squares);
  CHECK(std::isfinite(u.lambda.norm()));
  // Truncation keeps only the leading polynomial-like modes; the fit is
  // rough but finite.
  CHECK(u.fit_residual < 0.1);
}

TEST_CASE("fit rejects mismatched value lengths") {
  PointSet centers = halton_set(6, unit_box(2));
  BasisFamily fam = make_kernel_basis(centers, KernelKind::gaussian, 1.0);
  Vector bad = Vector::Zero(5);
  CHECK_THROWS_AS(fit(fam, centers, bad), std::invalid_argument);
}

TEST_CASE("evaluate with a unit coefficient picks out one function") {
  PointSet centers = halton_set(7, unit_box(2));
  BasisFamily fam = make_kernel_basis(centers, KernelKind::multiquadric, 1.3);
  std::vector<Point> probes = random_points(unit_box(2), 20, 5ULL);
  for (int k : {0, 3, 6}) {
    Interpolant u;
    u.family = fam;
    u.lambda = Vector::Zero(7);
    u.lambda(k) = 1.0;
    std::vector<double> got = evaluate(u, probes);
    for (std::size_t i = 0; i < probes.size(); ++i) {
      CHECK(got[i] == doctest::Approx(eval(fam.functions[static_cast<std::size_t>(k)], probes[i])));
    }
  }
}

TEST_CASE("evaluate is linear in the coefficients") {
  PointSet centers = halton_set(10, unit_box(2));
  BasisFamily fam = make_kernel_basis(centers, KernelKind::inverse_multiquadric, 0.8);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Interpolant u1, u2, usum;
  u1.family = fam;
  u2.family = fam;
  usum.family = fam;
  u1.lambda = Vector::Zero(10);
  u2.lambda = Vector::Zero(10);
  for (int i = 0; i < 10; ++i) {
    u1.lambda(i) = unif(rng);
    u2.lambda(i) = unif(rng);
  }
  usum.lambda = u1.lambda + u2.lambda;
  std::vector<Point> probes = random_points(unit_box(2), 15, 31ULL);
  std::vector<double> a = evaluate(u1, probes);
  std::vector<double> b = evaluate(u2, probes);
  std::vector<double> s = evaluate(usum, probes);
  for (std::size_t i = 0; i < probes.size(); ++i) {
    CHECK(s[i] == doctest::Approx(a[i] + b[i]).epsilon(1e-12));
  }
}

TEST_CASE("evaluate checks coefficient count") {
  PointSet centers = halton_set(4, unit_box(2));
  Interpolant u;
  u.family = make_kernel_basis(centers, KernelKind::gaussian, 1.0);
  u.lambda = Vector::Zero(3);
  std::vector<Point> probes{Point(0.5, 0.5)};
  CHECK_THROWS_AS(evaluate(u, probes), std::invalid_argument);
}

TEST_CASE("rmse closed-form cases") {
  std::vector<double> a{1.0, 1.0}, b{0.0, 0.0};
  CHECK(rmse(a, a) == 0.0);
  CHECK(rmse(a, b) == doctest::Approx(1.0));
  std::vector<double> c{3.0}, d{0.0};
  CHECK(rmse(c, d) == doctest::Approx(3.0));

  std::vector<double> x{1.0, -2.0, 0.5, 4.0};
  std::vector<double> y{0.0, 1.0, 2.0, -1.0};
  std::vector<double> xp{4.0, 0.5, -2.0, 1.0};
  std::vector<double> yp{-1.0, 2.0, 1.0, 0.0};
  CHECK(rmse(x, y) == doctest::Approx(rmse(xp, yp)).epsilon(1e-15));

  std::vector<double> empty;
  CHECK_THROWS_AS(rmse(empty, empty), std::invalid_argument);
  CHECK_THROWS_AS(rmse(a, c), std::invalid_argument);
}

TEST_CASE("gram matrix matches the explicit product") {
  PointSet centers = halton_set(6, unit_box(2));
  PointSet nodes = halton_set(9, unit_box(2), 50);
  BasisFamily fam = make_kernel_basis(centers, KernelKind::gaussian, 1.2);
  Matrix Phi = assemble(fam, nodes);
  Matrix A = gram(fam, nodes);
  CHECK((A - Phi.transpose() * Phi).norm() < 1e-12);

  BasisFamily single = make_monomial_basis(halton_set(1, unit_box(2)), 2);
  Matrix A1 = gram(single, nodes);
  double acc = 0.0;
  for (const Point& p : nodes.points) {
    double v = eval(single.functions[0], p);
    acc += v * v;
  }
  REQUIRE(A1.rows() == 1);
  CHECK(A1(0, 0) == doctest::Approx(acc).epsilon(1e-13));
}

TEST_CASE("plain monomial family develops a strong dependency block") {
  PointSet centers = line_centers_31();
  BasisFamily fam = make_monomial_basis(centers, 15);
  Matrix A = gram(fam, centers);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      double cosine = A(i, j) / std::sqrt(A(i, i) * A(j, j));
      CHECK(cosine > 0.99);
    }
  }
}

TEST_CASE("semi-cardinal conditioning beats the raw families") {
  PointSet centers = line_centers_31();
  double cond_p2 = cond2(assemble(make_semicardinal_basis(centers, 15, 2.0), centers));
  double cond_p = cond2(assemble(make_monomial_basis(centers, 15), centers));
  double cond_ga = cond2(assemble(make_kernel_basis(centers, KernelKind::gaussian, 1.0), centers));
  CHECK(cond_p2 < cond_p);
  CHECK(cond_p2 < cond_ga);
}
