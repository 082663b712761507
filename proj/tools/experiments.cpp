#include "experiments.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "radpoly/basis.hpp"
#include "radpoly/geometry.hpp"
#include "radpoly/interpolation.hpp"
#include "radpoly/linalg.hpp"
#include "radpoly/poisson.hpp"
#include "radpoly/subspace_distance.hpp"
#include "reference_values.hpp"

namespace radpoly::cli {

namespace {

std::string csv_coord(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> eps_grid(const ExperimentConfig& cfg) {
  std::vector<double> grid;
  if (cfg.eps_count == 1) {
    grid.push_back(cfg.eps_min);
    return grid;
  }
  double lo = std::log10(cfg.eps_min);
  double hi = std::log10(cfg.eps_max);
  for (int k = 0; k < cfg.eps_count; ++k) {
    grid.push_back(std::pow(10.0, lo + (hi - lo) * k / (cfg.eps_count - 1)));
  }
  return grid;
}

bool kernel_tag(const std::string& tag, KernelKind* kind) {
  if (tag == "ga") *kind = KernelKind::gaussian;
  else if (tag == "mq") *kind = KernelKind::multiquadric;
  else if (tag == "imq") *kind = KernelKind::inverse_multiquadric;
  else if (tag == "iq") *kind = KernelKind::inverse_quadric;
  else return false;
  return true;
}

bool polynomial_tag(const std::string& tag) {
  return tag == "p" || tag == "p_0" || tag == "p_1" || tag == "p_2" ||
         tag == "q_monomial" || tag == "q_chebyshev";
}

BasisFamily poly_family(const std::string& tag, const PointSet& centers, int n) {
  if (tag == "p") return make_monomial_basis(centers, n);
  if (tag == "p_0") return make_semicardinal_basis(centers, n, 0.0);
  if (tag == "p_1") return make_semicardinal_basis(centers, n, 1.0);
  if (tag == "p_2") return make_semicardinal_basis(centers, n, 2.0);
  if (tag == "q_monomial") return make_regularized_basis(centers, n, RegularizedKind::monomial);
  if (tag == "q_chebyshev") return make_regularized_basis(centers, n, RegularizedKind::chebyshev);
  throw ConfigError("unknown family: " + tag);
}

void validate_family_tags(const std::vector<std::string>& tags) {
  KernelKind k;
  for (const std::string& tag : tags) {
    if (!polynomial_tag(tag) && !kernel_tag(tag, &k)) {
      throw ConfigError("unknown family: " + tag +
                        " (expected p, p_0, p_1, p_2, q_monomial, q_chebyshev, ga, mq, imq or iq)");
    }
  }
}

void validate_common(const ExperimentConfig& cfg) {
  if (!(cfg.eps_min > 0.0) || !(cfg.eps_max > 0.0)) {
    throw ConfigError("eps bounds must be positive");
  }
  if (cfg.eps_max < cfg.eps_min) throw ConfigError("eps-max must be >= eps-min");
  if (cfg.eps_count < 1) throw ConfigError("eps-count must be >= 1");
  if (cfg.N < 1) throw ConfigError("N must be >= 1");
  if (cfg.quad_order < 1) throw ConfigError("quad-order must be >= 1");
  validate_family_tags(cfg.families);
}

int resolve_dim(const ExperimentConfig& cfg) {
  if (cfg.points == "star") {
    if (cfg.dim_set && cfg.dim != 2) throw ConfigError("star point sets are 2-D");
    return 2;
  }
  if (cfg.points == "cube") {
    if (cfg.dim_set && cfg.dim != 3) throw ConfigError("cube point sets are 3-D");
    return 3;
  }
  return cfg.dim;
}

// Side length m with m^d = N, for grid point sets.
int per_side(int N, int d) {
  int m = static_cast<int>(std::lround(std::pow(static_cast<double>(N), 1.0 / d)));
  for (int cand = std::max(2, m - 1); cand <= m + 1; ++cand) {
    long long total = 1;
    for (int k = 0; k < d; ++k) total *= cand;
    if (total == N) return cand;
  }
  throw ConfigError("grid point sets need N = m^dim with m >= 2");
}

PointSet interp_points(const ExperimentConfig& cfg, int d) {
  if (cfg.points == "grid") return regular_grid(per_side(cfg.N, d), unit_box(d));
  if (cfg.points == "halton") return halton_set(cfg.N, unit_box(d));
  if (cfg.points == "star") return star_points(cfg.N, Domain::star(Star{}));
  return halton_set(cfg.N, unit_box(3));  // cube
}

PointSet pde_points(const ExperimentConfig& cfg) {
  if (cfg.points == "grid") return regular_grid(per_side(cfg.N, 2), unit_box(2));
  if (cfg.points == "halton") return halton_collocation_set(cfg.N, unit_box(2));
  return star_points(cfg.N, Domain::star(Star{}));
}

// Largest degree whose polynomial family still fits N centers, unless the
// user fixed one.
int resolve_degree(const ExperimentConfig& cfg, int d, bool need_poly) {
  if (cfg.n >= 1) {
    if (need_poly && dim_h(cfg.n, d) > static_cast<std::uint64_t>(cfg.N)) {
      throw ConfigError("N must be at least h(n) = " + std::to_string(dim_h(cfg.n, d)) +
                        " for polynomial families");
    }
    return cfg.n;
  }
  if (dim_h(1, d) > static_cast<std::uint64_t>(cfg.N)) {
    if (need_poly) throw ConfigError("N too small for any polynomial family");
    return 1;
  }
  int n = 1;
  while (dim_h(n + 1, d) <= static_cast<std::uint64_t>(cfg.N)) ++n;
  return n;
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) s += ' ';
    s += parts[i];
  }
  return s;
}

void echo_config(ExperimentReport& rep, const ExperimentConfig& cfg,
                 const std::vector<std::string>& families, int dim, int n) {
  rep.add_provenance("command", cfg.command);
  rep.add_provenance("points", cfg.points);
  rep.add_provenance("dim", csv_int(dim));
  rep.add_provenance("N", csv_int(cfg.N));
  rep.add_provenance("n", csv_int(n));
  rep.add_provenance("families", join(families));
  rep.add_provenance("eps_min", csv_real(cfg.eps_min));
  rep.add_provenance("eps_max", csv_real(cfg.eps_max));
  rep.add_provenance("eps_count", csv_int(cfg.eps_count));
  rep.add_provenance("quad_order", csv_int(cfg.quad_order));
  rep.add_provenance("seed", std::to_string(cfg.seed));
  rep.add_provenance("check", cfg.check ? "1" : "0");
}

std::function<double(const Point&)> interp_target(const ExperimentConfig& cfg) {
  bool exponential = cfg.points == "cube";
  return [exponential](const Point& p) {
    double s = 0.0;
    for (int k = 0; k < p.dim(); ++k) s += p[k];
    return exponential ? std::exp(s) : std::sin(s);
  };
}

// One-dimensional centers (i-1)/(2n), i = 1..2n+1, on [0,1].
PointSet line_centers(int n) {
  PointSet ps;
  ps.domain = unit_box(1);
  int N = 2 * n + 1;
  for (int i = 1; i <= N; ++i) {
    ps.points.emplace_back(static_cast<double>(i - 1) / (2 * n));
    ps.boundary_mask.push_back(i == 1 || i == N);
  }
  return ps;
}

int column_index(const ExperimentReport& rep, const std::string& name) {
  for (std::size_t j = 0; j < rep.header.size(); ++j) {
    if (rep.header[j] == name) return static_cast<int>(j);
  }
  return -1;
}

double cell_value(const std::vector<std::string>& row, int j) {
  return std::strtod(row[static_cast<std::size_t>(j)].c_str(), nullptr);
}

}  // namespace

ExperimentReport run_table2(const ExperimentConfig& cfg) {
  validate_common(cfg);
  if (cfg.dim_set && cfg.dim != 2) throw ConfigError("table2: the distance table is 2-D");

  int n_max = cfg.n >= 1 ? cfg.n : 7;
  int n_min = std::min(2, n_max);
  if (cfg.quad_order < 2 * n_max + 2) {
    throw ConfigError("table2: quad-order " + std::to_string(cfg.quad_order) +
                      " is below 2*n+2 = " + std::to_string(2 * n_max + 2) +
                      ", too coarse to integrate degree-" + std::to_string(2 * n_max) +
                      " polynomials");
  }

  std::vector<std::string> tags =
      cfg.families.empty() ? std::vector<std::string>{"ga", "imq", "mq", "iq"} : cfg.families;
  std::vector<KernelKind> kinds;
  for (const std::string& tag : tags) {
    KernelKind kind;
    if (!kernel_tag(tag, &kind)) {
      throw ConfigError("table2: family must be a kernel (ga, mq, imq, iq), got " + tag);
    }
    kinds.push_back(kind);
  }

  Box box{Point(-1.0, -1.0), Point(1.0, 1.0)};
  ExperimentReport rep = table2(kinds, n_min, n_max, 0.5, box, cfg.quad_order);
  echo_config(rep, cfg, tags, 2, n_max);
  rep.add_provenance("eps", csv_real(0.5));
  return rep;
}

ExperimentReport run_interp(const ExperimentConfig& cfg) {
  validate_common(cfg);
  int d = resolve_dim(cfg);

  std::vector<std::string> tags =
      cfg.families.empty()
          ? std::vector<std::string>{"p", "p_2", "q_monomial", "q_chebyshev", "ga"}
          : cfg.families;
  bool need_poly = false;
  for (const std::string& tag : tags) need_poly = need_poly || polynomial_tag(tag);

  PointSet centers = interp_points(cfg, d);
  int n = resolve_degree(cfg, d, need_poly);
  auto target = interp_target(cfg);

  Vector vals(static_cast<Eigen::Index>(centers.size()));
  for (std::size_t i = 0; i < centers.size(); ++i) {
    vals(static_cast<Eigen::Index>(i)) = target(centers.points[i]);
  }
  std::vector<Point> eval_pts = random_points(centers.domain, cfg.N, cfg.seed);
  std::vector<double> exact(eval_pts.size());
  for (std::size_t i = 0; i < eval_pts.size(); ++i) exact[i] = target(eval_pts[i]);

  ExperimentReport rep;
  rep.header = {"family", "eps", "N", "rmse", "cond"};
  echo_config(rep, cfg, tags, d, n);
  rep.add_provenance("target", cfg.points == "cube" ? "exp(sum x_k)" : "sin(sum x_k)");

  for (const std::string& tag : tags) {
    KernelKind kind;
    if (kernel_tag(tag, &kind)) {
      for (double eps : eps_grid(cfg)) {
        Interpolant u = fit(make_kernel_basis(centers, kind, eps), centers, vals);
        double err = rmse(exact, evaluate(u, eval_pts));
        rep.add_row({tag, csv_real(eps), csv_int(cfg.N), csv_real(err), csv_real(u.cond)});
      }
    } else {
      Interpolant u = fit(poly_family(tag, centers, n), centers, vals);
      double err = rmse(exact, evaluate(u, eval_pts));
      rep.add_row({tag, "", csv_int(cfg.N), csv_real(err), csv_real(u.cond)});
    }
  }
  return rep;
}

ExperimentReport run_pde(const ExperimentConfig& cfg) {
  validate_common(cfg);
  if (cfg.points == "cube") throw ConfigError("pde: cube point sets are not supported, use grid, halton or star");
  if (cfg.dim_set && cfg.dim != 2) throw ConfigError("pde: the collocation problem is 2-D");

  std::vector<std::string> tags =
      cfg.families.empty()
          ? std::vector<std::string>{"p", "p_2", "q_monomial", "q_chebyshev", "ga"}
          : cfg.families;
  bool need_poly = false;
  for (const std::string& tag : tags) need_poly = need_poly || polynomial_tag(tag);

  PointSet centers = pde_points(cfg);
  int n = resolve_degree(cfg, 2, need_poly);

  PoissonProblem prob;
  prob.source = [](const Point& p) { return -2.0 * std::sin(p[0] + p[1]); };
  prob.boundary = [](const Point& p) { return std::sin(p[0] + p[1]); };
  prob.centers = centers;

  std::vector<double> exact(centers.size());
  for (std::size_t i = 0; i < centers.size(); ++i) {
    exact[i] = std::sin(centers.points[i][0] + centers.points[i][1]);
  }

  ExperimentReport rep;
  rep.header = {"family", "eps", "points", "N", "rmse", "cond"};
  echo_config(rep, cfg, tags, 2, n);
  rep.add_provenance("target", "sin(x+y)");

  auto add = [&](const std::string& tag, const std::string& eps_label, const BasisFamily& fam) {
    Interpolant u = solve_poisson(prob, fam);
    double err = rmse(exact, evaluate(u, centers.points));
    rep.add_row({tag, eps_label, cfg.points, csv_int(cfg.N), csv_real(err), csv_real(u.cond)});
  };

  for (const std::string& tag : tags) {
    KernelKind kind;
    if (kernel_tag(tag, &kind)) {
      for (double eps : eps_grid(cfg)) {
        add(tag, csv_real(eps), make_kernel_basis(centers, kind, eps));
      }
    } else {
      add(tag, "", poly_family(tag, centers, n));
    }
  }
  return rep;
}

ExperimentReport run_cond(const ExperimentConfig& cfg) {
  validate_common(cfg);
  if (cfg.dim_set && cfg.dim != 1) throw ConfigError("cond: the conditioning sweep is 1-D");

  int n_max = cfg.n >= 1 ? cfg.n : 15;
  std::vector<std::string> tags =
      cfg.families.empty() ? std::vector<std::string>{"ga", "p", "p_0", "p_1", "p_2"}
                           : cfg.families;

  ExperimentReport rep;
  rep.header.push_back("n");
  for (const std::string& tag : tags) rep.header.push_back(tag);
  echo_config(rep, cfg, tags, 1, n_max);
  rep.add_provenance("kernel_eps", csv_real(1.0));

  for (int n = 1; n <= n_max; ++n) {
    PointSet centers = line_centers(n);
    std::vector<std::string> row{csv_int(n)};
    for (const std::string& tag : tags) {
      KernelKind kind;
      BasisFamily fam = kernel_tag(tag, &kind) ? make_kernel_basis(centers, kind, 1.0)
                                               : poly_family(tag, centers, n);
      row.push_back(csv_real(cond2(assemble(fam, centers))));
    }
    rep.add_row(std::move(row));
  }
  return rep;
}

ExperimentReport run_gram(const ExperimentConfig& cfg) {
  validate_common(cfg);
  if (cfg.dim_set && cfg.dim != 1) throw ConfigError("gram: the dependency study is 1-D");

  int n = cfg.n >= 1 ? cfg.n : 15;
  std::vector<std::string> tags =
      cfg.families.empty() ? std::vector<std::string>{"p", "p_2"} : cfg.families;

  PointSet centers = line_centers(n);
  int N = static_cast<int>(centers.size());

  ExperimentReport rep;
  rep.header = {"family", "i"};
  for (int j = 1; j <= N; ++j) rep.header.push_back("a_" + std::to_string(j));
  echo_config(rep, cfg, tags, 1, n);
  rep.add_provenance("kernel_eps", csv_real(1.0));

  for (const std::string& tag : tags) {
    KernelKind kind;
    BasisFamily fam = kernel_tag(tag, &kind) ? make_kernel_basis(centers, kind, 1.0)
                                             : poly_family(tag, centers, n);
    Matrix A = gram(fam, centers);
    for (int i = 0; i < N; ++i) {
      std::vector<std::string> row{tag, csv_int(i + 1)};
      for (int j = 0; j < N; ++j) row.push_back(csv_real(A(i, j)));
      rep.add_row(std::move(row));
    }
  }
  return rep;
}

ExperimentReport run_points(const ExperimentConfig& cfg) {
  validate_common(cfg);
  int d = resolve_dim(cfg);

  PointSet ps;
  if (cfg.points == "grid") {
    ps = regular_grid(per_side(cfg.N, d), unit_box(d));
  } else if (cfg.points == "star") {
    ps = star_points(cfg.N, Domain::star(Star{}));
  } else if (cfg.points == "cube") {
    ps = halton_set(cfg.N, unit_box(3));
  } else if (d <= 2) {
    ps = halton_collocation_set(cfg.N, unit_box(d));
  } else {
    ps = halton_set(cfg.N, unit_box(3));
  }

  ExperimentReport rep;
  const char* coords[3] = {"x", "y", "z"};
  for (int k = 0; k < d; ++k) rep.header.push_back(coords[k]);
  rep.header.push_back("is_boundary");
  echo_config(rep, cfg, {}, d, cfg.n);

  for (std::size_t i = 0; i < ps.size(); ++i) {
    std::vector<std::string> row;
    for (int k = 0; k < d; ++k) row.push_back(csv_coord(ps.points[i][k]));
    row.push_back(ps.boundary_mask[i] ? "1" : "0");
    rep.add_row(std::move(row));
  }
  return rep;
}

std::vector<std::string> check_report(const ExperimentConfig& cfg, const ExperimentReport& rep) {
  std::vector<std::string> violations;

  if (cfg.command == "table2") {
    int c_rbf = column_index(rep, "rbf");
    int c_space = column_index(rep, "space");
    int c_n = column_index(rep, "n");
    int c_dist = column_index(rep, "distance");
    for (const auto& row : rep.rows) {
      const std::string& rbf = row[static_cast<std::size_t>(c_rbf)];
      if (rbf != "ga" && rbf != "iq") continue;
      const refs::DistanceRow* ref =
          refs::find_distance_row(rbf, row[static_cast<std::size_t>(c_space)]);
      if (ref == nullptr) continue;
      int n = static_cast<int>(cell_value(row, c_n));
      if (n < 2 || n > 7) continue;
      double got = cell_value(row, c_dist);
      double want = ref->by_n[static_cast<std::size_t>(n - 2)];
      double ratio = got / want;
      bool ok = n <= 5 ? std::abs(ratio - 1.0) < 0.05 : (ratio > 0.1 && ratio < 10.0);
      if (!ok) {
        violations.push_back("table2: " + rbf + "/" + row[static_cast<std::size_t>(c_space)] +
                             " at n=" + std::to_string(n) + " is " + csv_real(got) +
                             ", reference " + csv_real(want));
      }
    }
    return violations;
  }

  if (cfg.command == "interp" || cfg.command == "pde") {
    int c_family = column_index(rep, "family");
    int c_rmse = column_index(rep, "rmse");
    double best_q = 1e300, best_ga = 1e300;
    double q_cheb = -1.0;
    for (const auto& row : rep.rows) {
      const std::string& fam = row[static_cast<std::size_t>(c_family)];
      double err = cell_value(row, c_rmse);
      if (fam.rfind("q_", 0) == 0) best_q = std::min(best_q, err);
      if (fam == "ga") best_ga = std::min(best_ga, err);
      if (fam == "q_chebyshev") q_cheb = err;
    }

    if (cfg.command == "interp") {
      if (best_q >= 1e300) {
        violations.push_back("interp: check mode needs a q family in the run");
      } else {
        if (best_q >= 1e-8) {
          violations.push_back("interp: best regularized rmse " + csv_real(best_q) +
                               " is not below 1e-8");
        }
        if (best_ga < 1e300 && best_q >= best_ga) {
          violations.push_back("interp: best regularized rmse " + csv_real(best_q) +
                               " does not beat the best ga rmse " + csv_real(best_ga));
        }
      }
    } else {
      if (cfg.points == "grid" || cfg.points == "halton") {
        double bound = cfg.points == "grid" ? 1e-5 : 1e-9;
        if (q_cheb < 0.0) {
          violations.push_back("pde: check mode needs the q_chebyshev family in the run");
        } else if (q_cheb >= bound) {
          violations.push_back("pde: q_chebyshev rmse " + csv_real(q_cheb) + " is not below " +
                               csv_real(bound));
        }
      }
    }
    return violations;
  }

  if (cfg.command == "cond") {
    int c_p2 = column_index(rep, "p_2");
    int c_p = column_index(rep, "p");
    int c_ga = column_index(rep, "ga");
    if (c_p2 < 0 || c_p < 0 || c_ga < 0) {
      violations.push_back("cond: check mode needs the ga, p and p_2 families");
      return violations;
    }
    const auto& last = rep.rows.back();
    double v_p2 = cell_value(last, c_p2);
    double v_p = cell_value(last, c_p);
    double v_ga = cell_value(last, c_ga);
    if (!(v_p2 < v_p)) {
      violations.push_back("cond: p_2 (" + csv_real(v_p2) + ") is not better conditioned than p (" +
                           csv_real(v_p) + ")");
    }
    if (!(v_p2 < v_ga)) {
      violations.push_back("cond: p_2 (" + csv_real(v_p2) +
                           ") is not better conditioned than ga (" + csv_real(v_ga) + ")");
    }
    return violations;
  }

  if (cfg.command == "gram") {
    int c_family = column_index(rep, "family");
    int N = static_cast<int>(rep.header.size()) - 2;
    auto matrix_of = [&](const std::string& tag) {
      std::vector<std::vector<double>> A;
      for (const auto& row : rep.rows) {
        if (row[static_cast<std::size_t>(c_family)] != tag) continue;
        std::vector<double> vals;
        for (int j = 0; j < N; ++j) vals.push_back(cell_value(row, 2 + j));
        A.push_back(std::move(vals));
      }
      return A;
    };
    auto similarity = [](const std::vector<std::vector<double>>& A, int i, int j) {
      return A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] /
             std::sqrt(A[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] *
                       A[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)]);
    };

    std::vector<std::vector<double>> Ap = matrix_of("p");
    if (static_cast<int>(Ap.size()) == N && N >= 5) {
      for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
          if (!(similarity(Ap, i, j) > 0.99)) {
            violations.push_back("gram: p block similarity fell below 0.99");
            i = j = 5;
          }
        }
      }
    }
    std::vector<std::vector<double>> A2 = matrix_of("p_2");
    if (static_cast<int>(A2.size()) == N && N > 15) {
      for (int i = 0; i + 15 < N; ++i) {
        if (!(similarity(A2, i, i + 15) < similarity(A2, i, i + 1))) {
          violations.push_back("gram: p_2 similarity does not decay away from the diagonal");
          break;
        }
      }
    }
    return violations;
  }

  return violations;  // points: nothing to check
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg;

  CLI::App app{"radial polynomial basis experiments"};
  app.require_subcommand(1);

  const std::pair<const char*, const char*> commands[] = {
      {"table2", "kernel-to-space distance table on [-1,1]^2"},
      {"interp", "scattered-data interpolation error sweep"},
      {"pde", "Poisson collocation error sweep"},
      {"cond", "1-D collocation matrix conditioning sweep"},
      {"gram", "1-D Gram matrix dump for dependency analysis"},
      {"points", "point set export"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--dim", cfg.dim, "space dimension (1-3)")->check(CLI::Range(1, 3));
    sub->add_option("--points", cfg.points, "point set type")
        ->check(CLI::IsMember({"grid", "halton", "star", "cube"}));
    sub->add_option("--N", cfg.N, "number of centers");
    sub->add_option("--n", cfg.n, "degree parameter (default: derived)");
    sub->add_option("--family", cfg.families,
                    "family tag, repeatable: p, p_0, p_1, p_2, q_monomial, q_chebyshev, ga, mq, "
                    "imq, iq");
    sub->add_option("--eps-min", cfg.eps_min, "low end of the shape parameter sweep");
    sub->add_option("--eps-max", cfg.eps_max, "high end of the shape parameter sweep");
    sub->add_option("--eps-count", cfg.eps_count, "points in the shape parameter sweep");
    sub->add_option("--quad-order", cfg.quad_order, "quadrature points per axis");
    sub->add_option("--seed", cfg.seed, "seed for evaluation points");
    sub->add_option("--out", cfg.out, "write the CSV to this file instead of stdout");
    sub->add_flag("--check", cfg.check, "verify the report against its acceptance thresholds");
    subs.push_back(sub);
  }

  std::vector<const char*> argv;
  argv.push_back("radpoly");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  for (CLI::App* sub : subs) {
    if (sub->parsed()) {
      cfg.command = sub->get_name();
      cfg.dim_set = sub->count("--dim") > 0;
    }
  }

  try {
    ExperimentReport rep;
    if (cfg.command == "table2") rep = run_table2(cfg);
    else if (cfg.command == "interp") rep = run_interp(cfg);
    else if (cfg.command == "pde") rep = run_pde(cfg);
    else if (cfg.command == "cond") rep = run_cond(cfg);
    else if (cfg.command == "gram") rep = run_gram(cfg);
    else rep = run_points(cfg);

    if (cfg.out.empty()) {
      rep.write(out);
    } else {
      rep.write_file(cfg.out);
    }

    for (const auto& [key, value] : rep.provenance) {
      if (key == "rank_collapse_cells" && value != "0") {
        err << "numerical failure: " << value << " distance cells lost rank\n";
        return 3;
      }
    }

    if (cfg.check) {
      std::vector<std::string> violations = check_report(cfg, rep);
      if (!violations.empty()) {
        for (const std::string& v : violations) err << v << '\n';
        return 4;
      }
    }
    return 0;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const SingularMatrixError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace radpoly::cli
