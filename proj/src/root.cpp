#include "simplexroot/root.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace simplexroot {

double RootResult::scale() const {
  const double ratio = source_circumsphere.radius / source_insphere.radius;
  return ratio * ratio;
}

double RootResult::expected_circumradius() const {
  return source_circumsphere.radius * source_circumsphere.radius / source_insphere.radius;
}

RootResult root(const Simplex& s, double overflow_radius) {
  const auto planes = facet_hyperplanes(s);
  const Sphere in = insphere(s);
  const Sphere circ = circumsphere(s);

  const double root_radius = circ.radius * circ.radius / in.radius;
  if (!(root_radius <= overflow_radius))
    throw OverflowGuard(
        fmt::format("root circumradius {:.3e} exceeds guard {:.3e}", root_radius, overflow_radius));

  const double k = (circ.radius / in.radius) * (circ.radius / in.radius);
  const int m = s.vertex_count();
  std::vector<Point> touch;
  touch.reserve(m);
  Eigen::MatrixXd c(m, s.dimension());
  for (int i = 0; i < m; ++i) {
    touch.push_back(planes[i].project(in.center));
    c.row(i) = (in.center - k * (touch.back() - in.center)).transpose();
  }
  return RootResult{Simplex(std::move(c)), in, circ, std::move(touch)};
}

double check_root_circumsphere(const RootResult& rr) {
  const Point& center = rr.source_insphere.center;
  const double expected = rr.expected_circumradius();
  double worst = 0.0;
  for (int i = 0; i < rr.root.vertex_count(); ++i)
    worst = std::max(worst, std::abs((rr.root.vertex(i) - center).norm() - expected) / expected);

  const Sphere solved = circumsphere(rr.root);
  worst = std::max(worst, (solved.center - center).norm() / expected);
  worst = std::max(worst, std::abs(solved.radius - expected) / expected);
  return worst;
}

double check_gram_identity(const RootResult& rr, const Simplex& s) {
  if (s.dimension() != rr.root.dimension()) throw DimensionMismatch("source and root differ in dimension");
  const Point& center = rr.source_insphere.center;
  const double r2 = rr.source_circumsphere.radius * rr.source_circumsphere.radius;
  double worst = 0.0;
  for (int i = 0; i < rr.root.vertex_count(); ++i) {
    const Vector ci = rr.root.vertex(i) - center;
    for (int j = 0; j < s.vertex_count(); ++j) {
      if (i == j) continue;
      worst = std::max(worst, std::abs(ci.dot(s.vertex(j) - center) + r2) / r2);
    }
  }
  return worst;
}

double ContainmentCheck::min_margin() const {
  return margins.empty() ? 0.0 : *std::min_element(margins.begin(), margins.end());
}

ContainmentCheck check_containment(const RootResult& rr, const Simplex& s) {
  if (s.dimension() != rr.root.dimension()) throw DimensionMismatch("source and root differ in dimension");
  const Point& o = rr.source_circumsphere.center;
  const double big_r = rr.source_circumsphere.radius;
  ContainmentCheck out;
  for (const auto& h : facet_hyperplanes(rr.root)) out.margins.push_back(h.signed_distance(o) - big_r);
  out.center_inside = barycentric(rr.root, o).minCoeff() > 0.0;
  return out;
}

bool check_incenter_interior(const RootResult& rr) {
  return barycentric(rr.root, rr.source_insphere.center).minCoeff() > 0.0;
}

RadiusChain radius_chain(const Simplex& s) {
  const RootResult rr = root(s);
  return {rr.source_insphere.radius, rr.source_circumsphere.radius, insphere(rr.root).radius,
          circumsphere(rr.root).radius};
}

std::vector<double> circumball_margins(const Simplex& s, const Sphere& in, const Sphere& circ) {
  const Vector w = circ.center - in.center;
  const double d2 = w.squaredNorm();
  const double big_r = circ.radius;
  std::vector<double> margins;
  margins.reserve(s.vertex_count());
  for (int i = 0; i < s.vertex_count(); ++i) {
    const Point a_i = s.vertex(i);
    const double p = w.dot(a_i - circ.center);
    const double a = (a_i - in.center).norm();
    margins.push_back((p * (2.0 * p + d2) / (a + big_r) + a * d2) / (a * (a + big_r)));
  }
  return margins;
}

}  // namespace simplexroot
