#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <variant>
#include <vector>

namespace radpoly {

/// A point in R^d, d in {1,2,3}. Coordinates must be finite.
class Point {
 public:
  Point() : dim_(1) {}
  explicit Point(double x);
  Point(double x, double y);
  Point(double x, double y, double z);

  int dim() const { return dim_; }
  double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

 private:
  std::array<double, 3> c_{};
  int dim_;
};

double squared_distance(const Point& a, const Point& b);
double distance(const Point& a, const Point& b);

struct Box {
  Point lower;
  Point upper;
};

/// Star-shaped region around `center` bounded by rho(theta) = base_radius +
/// amplitude * cos(lobes * theta). Two-dimensional.
struct Star {
  Point center{0.0, 0.0};
  double base_radius = 0.8;
  double amplitude = 0.2;
  int lobes = 5;

  double boundary_radius(double theta) const;
};

class Domain {
 public:
  static Domain box(const Point& lower, const Point& upper);
  static Domain star(const Star& s);

  int dim() const;
  bool is_box() const { return std::holds_alternative<Box>(shape_); }
  bool is_star() const { return std::holds_alternative<Star>(shape_); }
  const Box& as_box() const;
  const Star& as_star() const;

  bool contains(const Point& p, double tol = 1e-12) const;
  bool on_boundary(const Point& p, double tol = 1e-12) const;

 private:
  std::variant<Box, Star> shape_;
};

/// [0,1]^d.
Domain unit_box(int d);

struct PointSet {
  std::vector<Point> points;
  std::vector<bool> boundary_mask;
  Domain domain = unit_box(1);

  std::size_t size() const { return points.size(); }
};

/// Tensor grid of m_per_side^d equally spaced points covering the box,
/// endpoints included. First coordinate varies slowest. Face points are
/// flagged in the boundary mask.
PointSet regular_grid(int m_per_side, const Domain& box_domain);

/// Number of face points of a d-dimensional grid with m points per side.
long long grid_boundary_count(int m, int d);

/// Halton sequence in [0,1]^d with bases 2, 3, 5; element j uses index
/// skip + 1 + j of the radical-inverse streams.
std::vector<Point> halton(int N, int d, int skip = 0);

/// Halton points mapped into a box; no boundary points.
PointSet halton_set(int N, const Domain& box_domain, int skip = 0);

/// Scattered collocation set for boundary-value problems: N - N_b interior
/// Halton points plus N_b equally spaced boundary points, where N_b is the
/// boundary count of the regular grid with the same total N. d <= 2.
PointSet halton_collocation_set(int N, const Domain& box_domain);

/// Points for a star domain: interior Halton points accepted by rejection
/// against the boundary curve, plus equally spaced boundary-curve points
/// (same N_b rule as halton_collocation_set). Deterministic.
PointSet star_points(int N, const Domain& star_domain);

/// Uniform pseudo-random points in the domain from a fixed seed (Mersenne
/// Twister, coordinates drawn axis by axis; rejection sampling for star
/// domains). Used for reproducible error-evaluation point sets.
std::vector<Point> random_points(const Domain& domain, int count, unsigned long long seed);

/// Euclidean distances from every center to x.
std::vector<double> distances(const PointSet& centers, const Point& x);

/// Normalization radius per center: the largest distance from the center to
/// any point of the domain. Exact corner enumeration for boxes; dense
/// boundary sampling (4096 angles) for star domains.
std::vector<double> normalization_radii(const PointSet& centers, const Domain& domain);

/// CSV rows x[,y[,z]],is_boundary with header.
void write_points_csv(std::ostream& os, const PointSet& ps);

}  // namespace radpoly
