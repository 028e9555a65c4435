#pragma once

#include "simplexroot/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

namespace testing_support {

using simplexroot::Point;
using simplexroot::Simplex;

inline Point pt(std::initializer_list<double> xs) {
  Point p(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) p(i++) = x;
  return p;
}

inline void check_point(const Point& got, const Point& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (Eigen::Index i = 0; i < got.size(); ++i) {
    INFO("coordinate " << i << ": got " << got(i) << ", want " << want(i));
    CHECK(std::abs(got(i) - want(i)) <= tol);
  }
}

inline double dist(const Point& a, const Point& b) { return (a - b).norm(); }

inline Simplex right_345() { return Simplex{{0, 0}, {4, 0}, {0, 3}}; }

inline Simplex equilateral() {
  const double h = std::sqrt(3.0) / 2.0;
  return Simplex{{1, 0}, {-0.5, h}, {-0.5, -h}};
}

// Regular tetrahedron with unit edge, independent of regular_simplex().
inline Simplex unit_edge_tetrahedron() {
  return Simplex{{0, 0, 0}, {1, 0, 0}, {0.5, std::sqrt(3.0) / 2.0, 0},
                 {0.5, std::sqrt(3.0) / 6.0, std::sqrt(2.0 / 3.0)}};
}

// Seeds used by the property tests; a fixed list keeps failures reproducible.
inline std::vector<std::uint64_t> property_seeds(int count, std::uint64_t base = 1000) {
  std::vector<std::uint64_t> out;
  for (int i = 0; i < count; ++i) out.push_back(base + static_cast<std::uint64_t>(i));
  return out;
}

}  // namespace testing_support
