#include "simplexroot/oracle.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace simplexroot {

namespace {

// Marsaglia polar method; consumes pairs of uniforms.
class NormalSource {
 public:
  explicit NormalSource(std::mt19937_64& engine) : engine_(engine) {}

  double operator()() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * unit_uniform(engine_) - 1.0;
      v = 2.0 * unit_uniform(engine_) - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

 private:
  std::mt19937_64& engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

std::uint64_t chunk_seed(std::uint64_t seed, std::size_t chunk) {
  // splitmix64 finaliser over the pair
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(chunk) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::size_t count_inside(const Sphere& ball, const BarycentricMap& map, std::size_t samples,
                         std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  NormalSource normal(engine);
  const auto n = ball.center.size();
  const double inv_n = 1.0 / static_cast<double>(n);
  Vector direction(n);
  std::size_t inside = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    double norm2 = 0.0;
    do {
      for (Eigen::Index c = 0; c < n; ++c) direction(c) = normal();
      norm2 = direction.squaredNorm();
    } while (norm2 == 0.0);
    const double radius = ball.radius * std::pow(unit_uniform(engine), inv_n);
    const Point x = ball.center + (radius / std::sqrt(norm2)) * direction;
    if (map.min_weight(x) >= -kRelativeTolerance) ++inside;
  }
  return inside;
}

}  // namespace

double unit_uniform(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

double mc_ball_in_simplex(const Sphere& ball, const Simplex& s, const SampleConfig& cfg) {
  if (ball.center.size() != s.dimension()) throw DimensionMismatch("ball and simplex differ in dimension");
  if (cfg.sample_count == 0) throw std::invalid_argument("sample_count must be at least 1");
  const BarycentricMap map(s);

  const std::size_t chunks = (cfg.sample_count + kSampleChunk - 1) / kSampleChunk;
  std::vector<std::size_t> inside(chunks, 0);
  const auto run_chunk = [&](std::size_t c) {
    const std::size_t begin = c * kSampleChunk;
    const std::size_t count = std::min(kSampleChunk, cfg.sample_count - begin);
    inside[c] = count_inside(ball, map, count, chunk_seed(cfg.seed, c));
  };

  unsigned workers = cfg.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.workers;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t c = w; c < chunks; c += workers) run_chunk(c);
      });
  }

  std::size_t total = 0;
  for (std::size_t v : inside) total += v;
  return static_cast<double>(total) / static_cast<double>(cfg.sample_count);
}

double sphere_fit_residual(const std::vector<Point>& points, const Sphere& sphere) {
  if (points.empty()) throw std::invalid_argument("sphere_fit_residual needs at least one point");
  double worst = 0.0;
  for (const auto& p : points)
    worst = std::max(worst, std::abs((p - sphere.center).norm() - sphere.radius) / sphere.radius);
  return worst;
}

std::vector<Point> vertex_points(const Simplex& s) {
  std::vector<Point> pts;
  pts.reserve(s.vertex_count());
  for (int i = 0; i < s.vertex_count(); ++i) pts.push_back(s.vertex(i));
  return pts;
}

Simplex random_simplex(int n, std::uint64_t seed, double quality_floor, int max_attempts) {
  if (n < 2) throw std::invalid_argument(fmt::format("dimension must be at least 2, got {}", n));
  // r/R <= 1/(n-1) for every simplex in R^n, so a floor at or above it
  // can never be met.
  if (!(quality_floor > 0.0 && quality_floor < 1.0 / (n - 1)))
    throw std::invalid_argument(
        fmt::format("quality_floor must lie in (0, 1/(n-1)) = (0, {:.6g}), got {}", 1.0 / (n - 1), quality_floor));

  std::mt19937_64 engine(seed);
  Eigen::MatrixXd v(n + 1, n);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    for (int i = 0; i <= n; ++i)
      for (int c = 0; c < n; ++c) v(i, c) = 2.0 * unit_uniform(engine) - 1.0;
    Simplex s(v);
    if (s.is_degenerate()) continue;
    try {
      if (insphere(s).radius / circumsphere(s).radius >= quality_floor) return s;
    } catch (const DegenerateSimplex&) {
    }
  }
  throw std::runtime_error(fmt::format("random_simplex: no simplex with r/R >= {} in {} attempts (n = {}, seed = {})",
                                       quality_floor, max_attempts, n, seed));
}

Eigen::MatrixXd gram_matrix(const Simplex& s, const Simplex& t, const Point& center) {
  if (s.dimension() != t.dimension() || center.size() != s.dimension())
    throw DimensionMismatch("gram_matrix inputs differ in dimension");
  Eigen::MatrixXd ts = t.vertices().rowwise() - center.transpose();
  Eigen::MatrixXd ss = s.vertices().rowwise() - center.transpose();
  return ts * ss.transpose();
}

}  // namespace simplexroot
