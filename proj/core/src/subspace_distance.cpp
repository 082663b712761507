#include "radpoly/subspace_distance.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "radpoly/parallel.hpp"

namespace radpoly {

namespace {

// Exponent triple of one basis column in centered, isotropically scaled
// coordinates: x^a y^b (x^2+y^2)^i.
struct ColumnExponents {
  int a, b, i;
};

std::vector<ColumnExponents> polynomial_columns(int m) {
  std::vector<ColumnExponents> cols;
  for (int deg = 0; deg <= m; ++deg) {
    for (int a = deg; a >= 0; --a) cols.push_back({a, deg - a, 0});
  }
  return cols;
}

std::vector<ColumnExponents> radial_analytic_columns(int n) {
  // Monomials up to total degree n, then homogeneous degree n-i monomials
  // carrying the even radial power r^2i. Together these span the radial
  // space and the count matches its dimension (n+1)^2.
  std::vector<ColumnExponents> cols = polynomial_columns(n);
  for (int i = 1; i <= n; ++i) {
    for (int a = n - i; a >= 0; --a) cols.push_back({a, n - i - a, i});
  }
  return cols;
}

std::vector<Point> default_translate_generators(int n, const Box& box, unsigned long long seed) {
  // Tensorized Chebyshev layout of (n+1)^2 = h(n) centers plus 25% extra
  // random centers; any full-rank generator set spans the same space.
  const double pi = std::acos(-1.0);
  int per_axis = n + 1;
  std::vector<double> ax(static_cast<std::size_t>(per_axis)), ay(ax);
  for (int k = 1; k <= per_axis; ++k) {
    double t = std::cos((2.0 * k - 1.0) * pi / (2.0 * per_axis));  // in (-1,1)
    double u = 0.5 * (t + 1.0);
    ax[static_cast<std::size_t>(k - 1)] = box.lower[0] * (1.0 - u) + box.upper[0] * u;
    ay[static_cast<std::size_t>(k - 1)] = box.lower[1] * (1.0 - u) + box.upper[1] * u;
  }
  std::vector<Point> gens;
  for (double x : ax) {
    for (double y : ay) gens.emplace_back(x, y);
  }
  std::size_t extra = (gens.size() + 3) / 4;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(box.lower[0], box.upper[0]);
  std::uniform_real_distribution<double> uy(box.lower[1], box.upper[1]);
  for (std::size_t k = 0; k < extra; ++k) {
    double x = ux(rng), y = uy(rng);
    gens.emplace_back(x, y);
  }
  return gens;
}

}  // namespace

FunctionSpaceSpec FunctionSpaceSpec::radial(int n, const Box& box) {
  if (n < 1) throw std::invalid_argument("FunctionSpaceSpec::radial: need n >= 1");
  FunctionSpaceSpec s;
  s.kind = Kind::radial;
  s.degree = n;
  s.domain = box;
  return s;
}

FunctionSpaceSpec FunctionSpaceSpec::radial_translates(int n, const Box& box,
                                                       unsigned long long seed) {
  FunctionSpaceSpec s = radial(n, box);
  s.route = RadialRoute::translates;
  s.seed = seed;
  return s;
}

FunctionSpaceSpec FunctionSpaceSpec::polynomial(int m, const Box& box) {
  if (m < 0) throw std::invalid_argument("FunctionSpaceSpec::polynomial: need m >= 0");
  FunctionSpaceSpec s;
  s.kind = Kind::polynomial;
  s.degree = m;
  s.domain = box;
  return s;
}

int FunctionSpaceSpec::max_total_degree() const {
  return kind == Kind::radial ? 2 * degree : degree;
}

int FunctionSpaceSpec::dimension() const {
  if (kind == Kind::radial) return static_cast<int>(dim_h(degree, 2));
  return (degree + 1) * (degree + 2) / 2;
}

DistanceResult distance_to_space(const BasisFunction& phi0, const FunctionSpaceSpec& space,
                                 int quad_order) {
  const Box& box = space.domain;
  if (box.lower.dim() != 2) throw std::invalid_argument("distance_to_space: box must be 2-D");
  if (phi0.center.dim() != 2) throw std::invalid_argument("distance_to_space: target must be 2-D");
  for (int k = 0; k < 2; ++k) {
    if (phi0.center[k] < box.lower[k] || phi0.center[k] > box.upper[k]) {
      throw std::invalid_argument("distance_to_space: target center must lie in the box");
    }
  }
  if (quad_order < space.max_total_degree() + 2) {
    throw std::invalid_argument(
        "distance_to_space: quad_order too small for the space's polynomial degree");
  }

  QuadratureRule rule = gauss_legendre(quad_order);
  double cx = 0.5 * (box.lower[0] + box.upper[0]);
  double cy = 0.5 * (box.lower[1] + box.upper[1]);
  double hx = 0.5 * (box.upper[0] - box.lower[0]);
  double hy = 0.5 * (box.upper[1] - box.lower[1]);
  double scale = std::max(hx, hy);
  double jac = hx * hy;

  bool translate_route =
      space.kind == FunctionSpaceSpec::Kind::radial && space.route == FunctionSpaceSpec::RadialRoute::translates;

  std::vector<ColumnExponents> cols;
  std::vector<Point> generators;  // scaled coordinates
  std::size_t n_cols;
  if (translate_route) {
    std::vector<Point> raw =
        space.generators.empty() ? default_translate_generators(space.degree, box, space.seed)
                                 : space.generators;
    if (raw.size() < static_cast<std::size_t>(space.dimension())) {
      throw std::invalid_argument("distance_to_space: need at least h(n) translate generators");
    }
    generators.reserve(raw.size());
    for (const Point& g : raw) {
      generators.emplace_back((g[0] - cx) / scale, (g[1] - cy) / scale);
    }
    n_cols = generators.size();
  } else {
    cols = space.kind == FunctionSpaceSpec::Kind::radial ? radial_analytic_columns(space.degree)
                                                         : polynomial_columns(space.degree);
    n_cols = cols.size();
  }

  std::size_t n_rows = static_cast<std::size_t>(quad_order) * quad_order;
  Matrix A(n_rows, n_cols);
  Vector b(n_rows);
  int max_pow = space.max_total_degree();

  parallel_for(n_rows, [&](std::size_t row) {
    std::size_t qi = row / static_cast<std::size_t>(quad_order);
    std::size_t qj = row % static_cast<std::size_t>(quad_order);
    double x = cx + hx * rule.nodes[qi];
    double y = cy + hy * rule.nodes[qj];
    double sw = std::sqrt(rule.weights[qi] * rule.weights[qj] * jac);
    double xs = (x - cx) / scale;
    double ys = (y - cy) / scale;

    Eigen::Index r = static_cast<Eigen::Index>(row);
    b(r) = sw * eval(phi0, Point(x, y));

    if (translate_route) {
      int n = space.degree;
      for (std::size_t j = 0; j < n_cols; ++j) {
        double dx = xs - generators[j][0];
        double dy = ys - generators[j][1];
        A(r, static_cast<Eigen::Index>(j)) = sw * std::pow(dx * dx + dy * dy, n);
      }
      return;
    }

    std::vector<double> px(static_cast<std::size_t>(max_pow) + 1, 1.0), py(px), pr(px);
    double r2 = xs * xs + ys * ys;
    for (int k = 1; k <= max_pow; ++k) {
      px[static_cast<std::size_t>(k)] = px[static_cast<std::size_t>(k - 1)] * xs;
      py[static_cast<std::size_t>(k)] = py[static_cast<std::size_t>(k - 1)] * ys;
      pr[static_cast<std::size_t>(k)] = pr[static_cast<std::size_t>(k - 1)] * r2;
    }
    for (std::size_t j = 0; j < n_cols; ++j) {
      const ColumnExponents& e = cols[j];
      A(r, static_cast<Eigen::Index>(j)) =
          sw * px[static_cast<std::size_t>(e.a)] * py[static_cast<std::size_t>(e.b)] *
          pr[static_cast<std::size_t>(e.i)];
    }
  });

  // Column equilibration keeps the SVD cutoff meaningful across the widely
  // different column scales.
  Vector col_norms(n_cols);
  for (std::size_t j = 0; j < n_cols; ++j) {
    Eigen::Index jj = static_cast<Eigen::Index>(j);
    double nj = A.col(jj).norm();
    col_norms(jj) = nj > 0.0 ? nj : 1.0;
    A.col(jj) /= col_norms(jj);
  }

  Vector alpha = lstsq_svd(A, b, 1e-14);

  DistanceResult res;
  res.distance = (A * alpha - b).norm();
  res.normalized_distance = res.distance / std::sqrt(4.0 * jac);
  res.coefficients = alpha.array() / col_norms.array();
  res.quad_order = quad_order;
  res.cond = cond2(A);
  res.rank = numerical_rank(A, 1e-10);
  res.rank_collapse = res.rank < space.dimension();
  return res;
}

ExperimentReport table2(const std::vector<KernelKind>& kinds, int n_min, int n_max, double eps,
                        const Box& domain, int quad_order) {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("table2: bad degree range");

  ExperimentReport report;
  report.header = {"rbf", "space", "n", "distance", "cond", "quad_order"};

  Point center(0.5 * (domain.lower[0] + domain.upper[0]), 0.5 * (domain.lower[1] + domain.upper[1]));
  long long collapsed = 0;

  for (KernelKind kind : kinds) {
    BasisFunction phi0{center, 1.0, Kernel{kind, eps}};
    for (int n = n_min; n <= n_max; ++n) {
      struct Cell {
        const char* label;
        FunctionSpaceSpec spec;
      };
      const Cell cells[3] = {
          {"Hn", FunctionSpaceSpec::radial(n, domain)},
          {"P2n-1", FunctionSpaceSpec::polynomial(2 * n - 1, domain)},
          {"P2n", FunctionSpaceSpec::polynomial(2 * n, domain)},
      };
      for (const Cell& cell : cells) {
        DistanceResult r = distance_to_space(phi0, cell.spec, quad_order);
        if (r.rank_collapse) ++collapsed;
        report.add_row({kernel_name(kind), cell.label, csv_int(n), csv_real(r.distance),
                        csv_real(r.cond), csv_int(r.quad_order)});
      }
    }
  }
  report.add_provenance("rank_collapse_cells", csv_int(collapsed));
  return report;
}

}  // namespace radpoly
