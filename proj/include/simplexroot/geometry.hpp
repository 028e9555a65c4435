#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace simplexroot {

using Point = Eigen::VectorXd;
using Vector = Eigen::VectorXd;

/// Relative tolerance for geometric identity checks, scaled by the local
/// circumradius.
inline constexpr double kRelativeTolerance = 1e-9;

/// A simplex is degenerate when |volume| / (longest edge)^n falls below this.
inline constexpr double kDegeneracyThreshold = 1e-12;

/// Circumradius above which constructions refuse to continue.
inline constexpr double kOverflowRadius = 1e150;

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class DegenerateSimplex : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class OverflowGuard : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// n+1 vertices in R^n, stored one vertex per row.
///
/// Construction checks the shape and that every coordinate is finite.
/// Degenerate simplices are representable (so their volume can be asked
/// for); operations that need a proper simplex call require_nondegenerate.
class Simplex {
 public:
  explicit Simplex(Eigen::MatrixXd vertices);
  Simplex(std::initializer_list<std::initializer_list<double>> rows);

  static Simplex from_rows(const std::vector<std::vector<double>>& rows);

  int dimension() const { return static_cast<int>(vertices_.cols()); }
  int vertex_count() const { return static_cast<int>(vertices_.rows()); }

  Point vertex(int i) const { return vertices_.row(i).transpose(); }
  const Eigen::MatrixXd& vertices() const { return vertices_; }

  Point centroid() const { return vertices_.colwise().mean().transpose(); }
  double longest_edge() const;

  Simplex translated(const Vector& shift) const;
  Simplex scaled_about(const Point& center, double factor) const;

  /// Scale-free flatness measure |volume| / (longest edge)^n.
  double degeneracy_measure() const;
  bool is_degenerate() const { return degeneracy_measure() < kDegeneracyThreshold; }
  void require_nondegenerate() const;

 private:
  Eigen::MatrixXd vertices_;
};

struct Sphere {
  Point center;
  double radius = 0.0;
};

/// Oriented hyperplane { x : unit_normal . x = offset }.
struct Hyperplane {
  Vector unit_normal;
  double offset = 0.0;

  double signed_distance(const Point& x) const { return unit_normal.dot(x) - offset; }
  Point project(const Point& x) const { return x - signed_distance(x) * unit_normal; }
};

double signed_volume(const Simplex& s);

/// Affine hull of every vertex except vertex i, normal pointing toward
/// vertex i (the simplex interior side).
Hyperplane facet_hyperplane(const Simplex& s, int i);

/// All n+1 facet hyperplanes, oriented inward, in vertex order.
std::vector<Hyperplane> facet_hyperplanes(const Simplex& s);

Sphere insphere(const Simplex& s);
Sphere circumsphere(const Simplex& s);

/// Touching points of the insphere with each facet; entry i lies on the
/// facet opposite vertex i.
std::vector<Point> contact_points(const Simplex& s);

/// Affine weights of x with respect to the vertices; they sum to one and
/// are all positive exactly when x is interior.
Eigen::VectorXd barycentric(const Simplex& s, const Point& x);

/// Precomputed affine map x -> barycentric weights for repeated queries.
class BarycentricMap {
 public:
  explicit BarycentricMap(const Simplex& s);

  Eigen::VectorXd operator()(const Point& x) const;
  /// Smallest weight of x; avoids materialising the full weight vector.
  double min_weight(const Point& x) const;

  /// Gradient of weight i (constant over space).
  Vector gradient(int i) const;

 private:
  Point origin_;
  Eigen::MatrixXd inverse_edges_;  // rows are gradients of weights 1..n
};

}  // namespace simplexroot
