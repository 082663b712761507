#include "radpoly/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>

namespace radpoly {

namespace {

void check_finite(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("Point: coordinates must be finite");
}

double radical_inverse(long long index, int base) {
  double f = 1.0, r = 0.0;
  long long i = index;
  while (i > 0) {
    f /= base;
    r += f * static_cast<double>(i % base);
    i /= base;
  }
  return r;
}

Point lerp_into(const Box& box, const Point& unit) {
  Point p = unit;
  for (int k = 0; k < unit.dim(); ++k) {
    p[k] = box.lower[k] * (1.0 - unit[k]) + box.upper[k] * unit[k];
  }
  return p;
}

int rounded_side(int N, int d) {
  return static_cast<int>(std::llround(std::pow(static_cast<double>(N), 1.0 / d)));
}

}  // namespace

Point::Point(double x) : dim_(1) {
  check_finite(x);
  c_[0] = x;
}

Point::Point(double x, double y) : dim_(2) {
  check_finite(x);
  check_finite(y);
  c_[0] = x;
  c_[1] = y;
}

Point::Point(double x, double y, double z) : dim_(3) {
  check_finite(x);
  check_finite(y);
  check_finite(z);
  c_[0] = x;
  c_[1] = y;
  c_[2] = z;
}

double squared_distance(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("squared_distance: dimension mismatch");
  double s = 0.0;
  for (int k = 0; k < a.dim(); ++k) {
    double dk = a[k] - b[k];
    s += dk * dk;
  }
  return s;
}

double distance(const Point& a, const Point& b) { return std::sqrt(squared_distance(a, b)); }

double Star::boundary_radius(double theta) const {
  return base_radius + amplitude * std::cos(lobes * theta);
}

Domain Domain::box(const Point& lower, const Point& upper) {
  if (lower.dim() != upper.dim()) throw std::invalid_argument("Domain::box: dimension mismatch");
  for (int k = 0; k < lower.dim(); ++k) {
    if (!(lower[k] < upper[k])) throw std::invalid_argument("Domain::box: lower must be < upper");
  }
  Domain d;
  d.shape_ = Box{lower, upper};
  return d;
}

Domain Domain::star(const Star& s) {
  if (s.center.dim() != 2) throw std::invalid_argument("Domain::star: center must be 2D");
  if (!(s.base_radius > s.amplitude) || s.amplitude < 0.0) {
    throw std::invalid_argument("Domain::star: need base_radius > amplitude >= 0");
  }
  Domain d;
  d.shape_ = s;
  return d;
}

int Domain::dim() const {
  if (is_box()) return as_box().lower.dim();
  return 2;
}

const Box& Domain::as_box() const {
  if (!is_box()) throw std::logic_error("Domain: not a box");
  return std::get<Box>(shape_);
}

const Star& Domain::as_star() const {
  if (!is_star()) throw std::logic_error("Domain: not a star");
  return std::get<Star>(shape_);
}

bool Domain::contains(const Point& p, double tol) const {
  if (p.dim() != dim()) throw std::invalid_argument("Domain::contains: dimension mismatch");
  if (is_box()) {
    const Box& b = as_box();
    for (int k = 0; k < p.dim(); ++k) {
      if (p[k] < b.lower[k] - tol || p[k] > b.upper[k] + tol) return false;
    }
    return true;
  }
  const Star& s = as_star();
  double dx = p[0] - s.center[0];
  double dy = p[1] - s.center[1];
  double r = std::hypot(dx, dy);
  if (r == 0.0) return true;
  return r <= s.boundary_radius(std::atan2(dy, dx)) + tol;
}

bool Domain::on_boundary(const Point& p, double tol) const {
  if (p.dim() != dim()) throw std::invalid_argument("Domain::on_boundary: dimension mismatch");
  if (is_box()) {
    if (!contains(p, tol)) return false;
    const Box& b = as_box();
    for (int k = 0; k < p.dim(); ++k) {
      if (std::abs(p[k] - b.lower[k]) <= tol || std::abs(p[k] - b.upper[k]) <= tol) return true;
    }
    return false;
  }
  const Star& s = as_star();
  double dx = p[0] - s.center[0];
  double dy = p[1] - s.center[1];
  double r = std::hypot(dx, dy);
  if (r == 0.0) return false;
  return std::abs(r - s.boundary_radius(std::atan2(dy, dx))) <= tol;
}

Domain unit_box(int d) {
  switch (d) {
    case 1: return Domain::box(Point(0.0), Point(1.0));
    case 2: return Domain::box(Point(0.0, 0.0), Point(1.0, 1.0));
    case 3: return Domain::box(Point(0.0, 0.0, 0.0), Point(1.0, 1.0, 1.0));
    default: throw std::invalid_argument("unit_box: d must be 1, 2 or 3");
  }
}

PointSet regular_grid(int m_per_side, const Domain& box_domain) {
  if (m_per_side < 2) throw std::invalid_argument("regular_grid: need m_per_side >= 2");
  const Box& box = box_domain.as_box();
  int d = box_domain.dim();
  int m = m_per_side;

  std::vector<std::vector<double>> axes(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    axes[k].reserve(m);
    for (int i = 0; i < m; ++i) {
      double t = static_cast<double>(i) / (m - 1);
      axes[k].push_back(box.lower[k] * (1.0 - t) + box.upper[k] * t);
    }
  }

  PointSet ps;
  ps.domain = box_domain;
  long long total = 1;
  for (int k = 0; k < d; ++k) total *= m;
  ps.points.reserve(static_cast<std::size_t>(total));
  ps.boundary_mask.reserve(static_cast<std::size_t>(total));

  std::vector<int> idx(static_cast<std::size_t>(d), 0);
  for (long long count = 0; count < total; ++count) {
    Point p;
    switch (d) {
      case 1: p = Point(axes[0][idx[0]]); break;
      case 2: p = Point(axes[0][idx[0]], axes[1][idx[1]]); break;
      default: p = Point(axes[0][idx[0]], axes[1][idx[1]], axes[2][idx[2]]); break;
    }
    bool edge = false;
    for (int k = 0; k < d; ++k) edge = edge || idx[k] == 0 || idx[k] == m - 1;
    ps.points.push_back(p);
    ps.boundary_mask.push_back(edge);
    // Odometer increment with the first coordinate slowest.
    for (int k = d - 1; k >= 0; --k) {
      if (++idx[k] < m) break;
      idx[k] = 0;
    }
  }
  return ps;
}

long long grid_boundary_count(int m, int d) {
  if (m < 2 || d < 1) throw std::invalid_argument("grid_boundary_count: need m >= 2, d >= 1");
  long long outer = 1, inner = 1;
  for (int k = 0; k < d; ++k) {
    outer *= m;
    inner *= m - 2;
  }
  return outer - inner;
}

std::vector<Point> halton(int N, int d, int skip) {
  if (N < 1) throw std::invalid_argument("halton: need N >= 1");
  if (d < 1 || d > 3) throw std::invalid_argument("halton: d must be 1, 2 or 3");
  if (skip < 0) throw std::invalid_argument("halton: skip must be nonnegative");

  static const int bases[3] = {2, 3, 5};
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) {
    long long index = static_cast<long long>(skip) + 1 + j;
    double u[3] = {0.0, 0.0, 0.0};
    for (int k = 0; k < d; ++k) u[k] = radical_inverse(index, bases[k]);
    switch (d) {
      case 1: out.emplace_back(u[0]); break;
      case 2: out.emplace_back(u[0], u[1]); break;
      default: out.emplace_back(u[0], u[1], u[2]); break;
    }
  }
  return out;
}

PointSet halton_set(int N, const Domain& box_domain, int skip) {
  const Box& box = box_domain.as_box();
  PointSet ps;
  ps.domain = box_domain;
  for (const Point& u : halton(N, box_domain.dim(), skip)) {
    ps.points.push_back(lerp_into(box, u));
    ps.boundary_mask.push_back(false);
  }
  return ps;
}

PointSet halton_collocation_set(int N, const Domain& box_domain) {
  const Box& box = box_domain.as_box();
  int d = box_domain.dim();
  if (d > 2) throw std::invalid_argument("halton_collocation_set: d must be 1 or 2");

  int m = rounded_side(N, d);
  long long nb = m >= 2 ? grid_boundary_count(m, d) : 0;
  if (nb >= N) throw std::invalid_argument("halton_collocation_set: N too small for its boundary ring");
  int n_interior = N - static_cast<int>(nb);

  PointSet ps;
  ps.domain = box_domain;
  for (const Point& u : halton(n_interior, d)) {
    ps.points.push_back(lerp_into(box, u));
    ps.boundary_mask.push_back(false);
  }

  if (d == 1) {
    if (nb >= 1) {
      ps.points.push_back(box.lower);
      ps.boundary_mask.push_back(true);
    }
    if (nb >= 2) {
      ps.points.push_back(box.upper);
      ps.boundary_mask.push_back(true);
    }
    return ps;
  }

  // Counterclockwise walk of the rectangle perimeter starting at the lower
  // left corner; for square boxes the step equals the grid spacing, so the
  // ring lines up with the boundary of the same-N regular grid.
  double w = box.upper[0] - box.lower[0];
  double h = box.upper[1] - box.lower[1];
  double perimeter = 2.0 * (w + h);
  for (long long j = 0; j < nb; ++j) {
    double t = perimeter * static_cast<double>(j) / static_cast<double>(nb);
    Point p;
    if (t < w) {
      p = Point(box.lower[0] + t, box.lower[1]);
    } else if (t < w + h) {
      p = Point(box.upper[0], box.lower[1] + (t - w));
    } else if (t < 2.0 * w + h) {
      p = Point(box.upper[0] - (t - w - h), box.upper[1]);
    } else {
      p = Point(box.lower[0], box.upper[1] - (t - 2.0 * w - h));
    }
    ps.points.push_back(p);
    ps.boundary_mask.push_back(true);
  }
  return ps;
}

PointSet star_points(int N, const Domain& star_domain) {
  if (N < 1) throw std::invalid_argument("star_points: need N >= 1");
  const Star& s = star_domain.as_star();

  int m = rounded_side(N, 2);
  long long nb = m >= 2 ? grid_boundary_count(m, 2) : 0;
  if (nb >= N) nb = 0;
  int n_interior = N - static_cast<int>(nb);

  double reach = s.base_radius + s.amplitude;
  Box bounding{Point(s.center[0] - reach, s.center[1] - reach),
               Point(s.center[0] + reach, s.center[1] + reach)};

  PointSet ps;
  ps.domain = star_domain;

  // Rejection sampling from a fixed Halton stream keeps the construction
  // deterministic for a given N.
  long long index = 0;
  int accepted = 0;
  while (accepted < n_interior) {
    ++index;
    Point u(radical_inverse(index, 2), radical_inverse(index, 3));
    Point p = lerp_into(bounding, u);
    double dx = p[0] - s.center[0];
    double dy = p[1] - s.center[1];
    double r = std::hypot(dx, dy);
    if (r < s.boundary_radius(r > 0.0 ? std::atan2(dy, dx) : 0.0)) {
      ps.points.push_back(p);
      ps.boundary_mask.push_back(false);
      ++accepted;
    }
  }

  const double two_pi = 2.0 * std::acos(-1.0);
  for (long long j = 0; j < nb; ++j) {
    double theta = two_pi * static_cast<double>(j) / static_cast<double>(nb);
    double r = s.boundary_radius(theta);
    ps.points.emplace_back(s.center[0] + r * std::cos(theta), s.center[1] + r * std::sin(theta));
    ps.boundary_mask.push_back(true);
  }
  return ps;
}

std::vector<Point> random_points(const Domain& domain, int count, unsigned long long seed) {
  if (count < 0) throw std::invalid_argument("random_points: negative count");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(count));

  if (domain.is_box()) {
    const Box& b = domain.as_box();
    int d = domain.dim();
    while (static_cast<int>(out.size()) < count) {
      Point u;
      switch (d) {
        case 1: u = Point(unif(rng)); break;
        case 2: u = Point(unif(rng), unif(rng)); break;
        default: u = Point(unif(rng), unif(rng), unif(rng)); break;
      }
      out.push_back(lerp_into(b, u));
    }
    return out;
  }

  const Star& s = domain.as_star();
  double reach = s.base_radius + s.amplitude;
  Box bounding{Point(s.center[0] - reach, s.center[1] - reach),
               Point(s.center[0] + reach, s.center[1] + reach)};
  while (static_cast<int>(out.size()) < count) {
    Point p = lerp_into(bounding, Point(unif(rng), unif(rng)));
    double dx = p[0] - s.center[0];
    double dy = p[1] - s.center[1];
    double r = std::hypot(dx, dy);
    if (r < s.boundary_radius(r > 0.0 ? std::atan2(dy, dx) : 0.0)) out.push_back(p);
  }
  return out;
}

std::vector<double> distances(const PointSet& centers, const Point& x) {
  std::vector<double> out;
  out.reserve(centers.size());
  for (const Point& c : centers.points) out.push_back(distance(c, x));
  return out;
}

std::vector<double> normalization_radii(const PointSet& centers, const Domain& domain) {
  if (centers.size() == 0) throw std::invalid_argument("normalization_radii: empty centers");
  std::vector<double> out;
  out.reserve(centers.size());

  if (domain.is_box()) {
    const Box& b = domain.as_box();
    for (const Point& c : centers.points) {
      double s = 0.0;
      for (int k = 0; k < c.dim(); ++k) {
        double far = std::max(std::abs(c[k] - b.lower[k]), std::abs(c[k] - b.upper[k]));
        s += far * far;
      }
      out.push_back(std::sqrt(s));
    }
    return out;
  }

  const Star& s = domain.as_star();
  const int samples = 4096;
  const double two_pi = 2.0 * std::acos(-1.0);
  std::vector<Point> rim;
  rim.reserve(samples);
  for (int j = 0; j < samples; ++j) {
    double theta = two_pi * j / samples;
    double r = s.boundary_radius(theta);
    rim.emplace_back(s.center[0] + r * std::cos(theta), s.center[1] + r * std::sin(theta));
  }
  for (const Point& c : centers.points) {
    double best = 0.0;
    for (const Point& p : rim) best = std::max(best, distance(c, p));
    out.push_back(best);
  }
  return out;
}

void write_points_csv(std::ostream& os, const PointSet& ps) {
  static const char* names[3] = {"x", "y", "z"};
  int d = ps.domain.dim();
  for (int k = 0; k < d; ++k) os << names[k] << ',';
  os << "is_boundary\n";
  char buf[64];
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (int k = 0; k < d; ++k) {
      std::snprintf(buf, sizeof buf, "%.17g", ps.points[i][k]);
      os << buf << ',';
    }
    os << (ps.boundary_mask[i] ? 1 : 0) << '\n';
  }
}

}  // namespace radpoly
