#include "simplexroot/geometry.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace simplexroot {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Columns are A_j - A_0 for j = 1..n.
Eigen::MatrixXd edge_matrix(const Simplex& s) {
  const int n = s.dimension();
  Eigen::MatrixXd e(n, n);
  const auto& v = s.vertices();
  for (int j = 0; j < n; ++j) e.col(j) = (v.row(j + 1) - v.row(0)).transpose();
  return e;
}

void check_index(const Simplex& s, int i) {
  if (i < 0 || i >= s.vertex_count())
    throw std::out_of_range(fmt::format("vertex index {} outside [0, {})", i, s.vertex_count()));
}

// Below this reciprocal condition estimate a linear solve is treated as
// singular.
constexpr double kMinReciprocalCondition = 1e-14;

}  // namespace

Simplex::Simplex(Eigen::MatrixXd vertices) : vertices_(std::move(vertices)) {
  const auto n = vertices_.cols();
  if (n < 2) throw DimensionMismatch(fmt::format("dimension must be at least 2, got {}", n));
  if (vertices_.rows() != n + 1)
    throw DimensionMismatch(
        fmt::format("a simplex in R^{} needs {} vertices, got {}", n, n + 1, vertices_.rows()));
  if (!vertices_.allFinite()) throw GeometryError("simplex vertices must be finite");
}

Simplex::Simplex(std::initializer_list<std::initializer_list<double>> rows)
    : Simplex([&] {
        std::vector<std::vector<double>> v;
        for (const auto& r : rows) v.emplace_back(r);
        return from_rows(v);
      }()) {}

Simplex Simplex::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw DimensionMismatch("simplex needs at least one vertex");
  const auto n = rows.front().size();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n)
      throw DimensionMismatch(
          fmt::format("vertex {} has {} coordinates, expected {}", i, rows[i].size(), n));
    for (std::size_t c = 0; c < n; ++c)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = rows[i][c];
  }
  return Simplex(std::move(m));
}

double Simplex::longest_edge() const {
  double longest = 0.0;
  for (int i = 0; i < vertex_count(); ++i)
    for (int j = i + 1; j < vertex_count(); ++j)
      longest = std::max(longest, (vertices_.row(i) - vertices_.row(j)).norm());
  return longest;
}

Simplex Simplex::translated(const Vector& shift) const {
  if (shift.size() != dimension()) throw DimensionMismatch("translation has wrong dimension");
  Eigen::MatrixXd v = vertices_.rowwise() + shift.transpose();
  return Simplex(std::move(v));
}

Simplex Simplex::scaled_about(const Point& center, double factor) const {
  if (center.size() != dimension()) throw DimensionMismatch("scaling center has wrong dimension");
  Eigen::MatrixXd v =
      ((vertices_.rowwise() - center.transpose()) * factor).rowwise() + center.transpose();
  return Simplex(std::move(v));
}

double Simplex::degeneracy_measure() const {
  const double edge = longest_edge();
  if (edge == 0.0) return 0.0;
  // Normalise first: edge^n overflows long before the coordinates do.
  return std::abs((edge_matrix(*this) / edge).determinant()) / factorial(dimension());
}

void Simplex::require_nondegenerate() const {
  const double q = degeneracy_measure();
  if (!(q >= kDegeneracyThreshold))
    throw DegenerateSimplex(
        fmt::format("degenerate simplex: |volume|/edge^n = {:.3e} < {:.0e}", q, kDegeneracyThreshold));
}

double signed_volume(const Simplex& s) {
  return edge_matrix(s).determinant() / factorial(s.dimension());
}

BarycentricMap::BarycentricMap(const Simplex& s) : origin_(s.vertex(0)) {
  s.require_nondegenerate();
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(edge_matrix(s));
  if (lu.rcond() < kMinReciprocalCondition)
    throw DegenerateSimplex("edge matrix is numerically singular");
  inverse_edges_ = lu.inverse();
}

Eigen::VectorXd BarycentricMap::operator()(const Point& x) const {
  if (x.size() != origin_.size()) throw DimensionMismatch("point has wrong dimension");
  const Eigen::VectorXd tail = inverse_edges_ * (x - origin_);
  Eigen::VectorXd w(tail.size() + 1);
  w(0) = 1.0 - tail.sum();
  w.tail(tail.size()) = tail;
  return w;
}

double BarycentricMap::min_weight(const Point& x) const {
  const Eigen::VectorXd tail = inverse_edges_ * (x - origin_);
  return std::min(1.0 - tail.sum(), tail.minCoeff());
}

Vector BarycentricMap::gradient(int i) const {
  if (i == 0) return -inverse_edges_.colwise().sum().transpose();
  return inverse_edges_.row(i - 1).transpose();
}

Eigen::VectorXd barycentric(const Simplex& s, const Point& x) { return BarycentricMap(s)(x); }

std::vector<Hyperplane> facet_hyperplanes(const Simplex& s) {
  const BarycentricMap map(s);
  const int m = s.vertex_count();
  std::vector<Hyperplane> planes;
  planes.reserve(m);
  for (int i = 0; i < m; ++i) {
    // The weight of vertex i vanishes on the opposite facet and grows toward
    // the vertex, so its gradient is the inward facet normal.
    const Vector g = map.gradient(i);
    Hyperplane h{g / g.norm(), 0.0};
    double offset = 0.0;
    for (int j = 0; j < m; ++j)
      if (j != i) offset += h.unit_normal.dot(s.vertex(j));
    h.offset = offset / (m - 1);
    planes.push_back(std::move(h));
  }
  return planes;
}

Hyperplane facet_hyperplane(const Simplex& s, int i) {
  check_index(s, i);
  return facet_hyperplanes(s)[static_cast<std::size_t>(i)];
}

namespace {

Sphere insphere_from_planes(const std::vector<Hyperplane>& planes, int n) {
  // Unknowns (center, r): unit_normal_i . center - r = offset_i for all i.
  Eigen::MatrixXd a(n + 1, n + 1);
  Eigen::VectorXd b(n + 1);
  for (int i = 0; i <= n; ++i) {
    a.row(i).head(n) = planes[i].unit_normal.transpose();
    a(i, n) = -1.0;
    b(i) = planes[i].offset;
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  if (lu.rcond() < kMinReciprocalCondition)
    throw DegenerateSimplex("insphere system is numerically singular");
  const Eigen::VectorXd x = lu.solve(b);
  if (!(x(n) > 0.0)) throw DegenerateSimplex("insphere radius is not positive");
  return {x.head(n), x(n)};
}

}  // namespace

Sphere insphere(const Simplex& s) { return insphere_from_planes(facet_hyperplanes(s), s.dimension()); }

Sphere circumsphere(const Simplex& s) {
  s.require_nondegenerate();
  const Eigen::MatrixXd e = edge_matrix(s);
  // Offset y = O - A_0 satisfies 2 e_j . y = |e_j|^2.
  const Eigen::MatrixXd a = 2.0 * e.transpose();
  const Eigen::VectorXd b = e.colwise().squaredNorm().transpose();
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  if (lu.rcond() < kMinReciprocalCondition)
    throw DegenerateSimplex("circumsphere system is numerically singular");
  const Eigen::VectorXd y = lu.solve(b);
  const Point center = s.vertex(0) + y;
  double radius = 0.0;
  for (int i = 0; i < s.vertex_count(); ++i) radius += (s.vertex(i) - center).norm();
  radius /= s.vertex_count();
  return {center, radius};
}

std::vector<Point> contact_points(const Simplex& s) {
  const auto planes = facet_hyperplanes(s);
  const Sphere in = insphere_from_planes(planes, s.dimension());
  std::vector<Point> touch;
  touch.reserve(planes.size());
  for (const auto& h : planes) touch.push_back(h.project(in.center));
  return touch;
}

}  // namespace simplexroot
