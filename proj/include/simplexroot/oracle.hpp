#pragma once

#include "simplexroot/geometry.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace simplexroot {

struct SampleConfig {
  std::size_t sample_count = 100000;
  std::uint64_t seed = 0;
  /// Worker threads; 0 picks hardware concurrency. The result does not
  /// depend on this value.
  unsigned workers = 0;
};

/// Samples are drawn in fixed-size chunks, each with its own generator
/// seeded from (seed, chunk index).
inline constexpr std::size_t kSampleChunk = 4096;

/// Fraction of points drawn uniformly from the ball whose barycentric
/// weights in s are all >= -kRelativeTolerance.
double mc_ball_in_simplex(const Sphere& ball, const Simplex& s, const SampleConfig& cfg = {});

/// max over points of ||p - center| - radius| / radius.
double sphere_fit_residual(const std::vector<Point>& points, const Sphere& sphere);

/// Vertices of s as points.
std::vector<Point> vertex_points(const Simplex& s);

/// Uniform double in [0, 1) from the top 53 bits of one mt19937_64 draw.
double unit_uniform(std::mt19937_64& engine);

/// Vertices i.i.d. uniform in [-1, 1]^n, redrawn until nondegenerate with
/// r/R >= quality_floor. Coordinates are drawn vertex by vertex from
/// std::mt19937_64(seed) through unit_uniform, so a seed reproduces the
/// same simplex bit for bit on every platform.
Simplex random_simplex(int n, std::uint64_t seed, double quality_floor = 0.05,
                       int max_attempts = 1000000);

/// Entry (i, j) = (t_i - center) . (s_j - center).
Eigen::MatrixXd gram_matrix(const Simplex& s, const Simplex& t, const Point& center);

}  // namespace simplexroot
