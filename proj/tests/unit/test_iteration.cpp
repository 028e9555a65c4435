#include "support.hpp"

#include "simplexroot/io.hpp"
#include "simplexroot/iteration.hpp"
#include "simplexroot/oracle.hpp"
#include "simplexroot/root.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace simplexroot;
using namespace testing_support;

namespace {

// Reference values for the 3-4-5 triangle from tests/oracles/root_iteration_mp.py
// (80-digit arithmetic, facet-area incenter, no recentering).
constexpr double kRatios345[] = {
    0.4,
    0.47054814270334339688,
    0.49312482914798832101,
    0.49821540639076394312,
    0.49956179054534830118,
    0.49988943687789170314,
    0.49997248443037529078,
    0.49999310538487378231,
    0.49999827830711380737,
    0.49999956933138826573,
};

const double kCenters345[][2] = {
    {2.0, 1.5},
    {1.0, 1.0},
    {2.2852317414749479005, 1.805670976271684869},
    {0.92866497309865443518, 1.0404358940802850165},
    {2.3111896551093020018, 1.8638891752205926142},
    {0.92663620807454007426, 1.0609962616510701351},
};

constexpr double kEvenLimit345[] = {0.92733878964185684129, 1.0686819637611626058};
constexpr double kOddLimit345[] = {2.3146264868500939569, 1.8804418457137868607};
constexpr double kGap345 = 1.6073335872721231266;

IterationConfig fixed_steps(int steps) {
  IterationConfig cfg;
  cfg.max_steps = steps;
  cfg.stop_when_converged = false;
  return cfg;
}

}  // namespace

TEST_SUITE("iteration") {

TEST_CASE("config validation") {
  IterationConfig cfg;
  cfg.max_steps = 1;
  CHECK_THROWS_AS(iterate(right_345(), cfg), std::invalid_argument);
  cfg = {};
  cfg.cauchy_tolerance = 0.0;
  CHECK_THROWS_AS(iterate(right_345(), cfg), std::invalid_argument);
  CHECK_THROWS_AS(iterate(Simplex{{0, 0}, {1, 1}, {2, 2}}), DegenerateSimplex);
}

TEST_CASE("equilateral triangle is a fixed point") {
  const Trajectory traj = iterate(equilateral(), fixed_steps(10));
  REQUIRE(traj.size() == 10);
  CHECK(traj.stop_reason == StopReason::MaxSteps);
  for (const auto& rec : traj.records) {
    CAPTURE(rec.k);
    CHECK(rec.circumradius == doctest::Approx(std::ldexp(1.0, rec.k - 1)).epsilon(1e-14));
    CHECK(rec.ratio == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(rec.circumcenter.norm() <= 1e-12 * rec.circumradius);
    CHECK(rec.circumcenter_direct.norm() <= 1e-12 * rec.circumradius);
    CHECK(rec.incenter.norm() <= 1e-12 * rec.circumradius);
  }
  const ConvergenceReport report = subsequence_limits(traj, fixed_steps(10));
  CHECK(report.gap <= 1e-12);
  CHECK(report.converged());
  CHECK(report.even_limit.norm() <= 1e-12);
  CHECK(report.odd_limit.norm() <= 1e-12);
  CHECK(estimate_rho(traj) == doctest::Approx(0.5));
}

TEST_CASE("regular simplices are fixed points") {
  for (int n = 3; n <= 6; ++n) {
    const Trajectory traj = iterate(regular_simplex(n), fixed_steps(10));
    for (const auto& rec : traj.records) {
      CHECK(rec.ratio == doctest::Approx(1.0 / n).epsilon(1e-13));
      CHECK(rec.circumcenter.norm() <= 1e-12 * rec.circumradius);
    }
    CHECK(estimate_rho(traj) == doctest::Approx(1.0 / n).epsilon(1e-13));
  }
}

TEST_CASE("3-4-5 trajectory matches the high-precision reference") {
  const Trajectory traj = iterate(right_345(), fixed_steps(12));
  REQUIRE(traj.size() == 12);
  for (int k = 1; k <= 10; ++k) {
    CAPTURE(k);
    CHECK(traj[static_cast<std::size_t>(k - 1)].ratio == doctest::Approx(kRatios345[k - 1]).epsilon(1e-13));
  }
  for (int k = 1; k <= 6; ++k) {
    CAPTURE(k);
    const auto& rec = traj[static_cast<std::size_t>(k - 1)];
    check_point(rec.circumcenter, pt({kCenters345[k - 1][0], kCenters345[k - 1][1]}), 1e-13);
  }
  CHECK(traj[1].inradius == doctest::Approx(2.9409258918958962305).epsilon(1e-14));
  for (std::size_t i = 1; i < traj.size(); ++i) CHECK(traj[i].ratio > traj[i - 1].ratio);
}

TEST_CASE("3-4-5 limits") {
  IterationConfig cfg;
  cfg.max_steps = 40;
  const ConvergenceReport quick = subsequence_limits(iterate(right_345(), cfg), cfg);
  CHECK(quick.converged());
  CHECK(quick.gap == doctest::Approx(kGap345).epsilon(1e-9));

  cfg.max_steps = 60;
  cfg.cauchy_tolerance = 1e-12;
  const Trajectory traj = iterate(right_345(), cfg);
  const ConvergenceReport report = subsequence_limits(traj, cfg);
  CHECK(report.converged());
  CHECK(traj.stop_reason == StopReason::Converged);
  check_point(report.even_limit, pt({kEvenLimit345[0], kEvenLimit345[1]}), 1e-12);
  check_point(report.odd_limit, pt({kOddLimit345[0], kOddLimit345[1]}), 1e-12);
  CHECK(report.gap == doctest::Approx(kGap345).epsilon(1e-12));
  CHECK(report.tail_decay_ratio() <= 0.6);
  CHECK(report.rho_estimate == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("short trajectories are rejected") {
  const Trajectory traj = iterate(right_345(), fixed_steps(3));
  CHECK_THROWS_AS(subsequence_limits(traj, fixed_steps(3)), std::invalid_argument);
  Trajectory one;
  one.records.push_back(traj[0]);
  CHECK_THROWS_AS(estimate_rho(one), std::invalid_argument);
}

TEST_CASE("overflow guard") {
  IterationConfig cfg = fixed_steps(60);
  cfg.overflow_radius = 1e6;
  const Trajectory traj = iterate(right_345(), cfg);
  CHECK(traj.stop_reason == StopReason::Overflow);
  for (const auto& rec : traj.records) CHECK(rec.circumradius <= 1e6);

  cfg.overflow_radius = 3.0;
  CHECK_THROWS_AS(iterate(right_345(), cfg), OverflowGuard);

  // Unrecentered runs reach the default guard only through growth of R_k.
  IterationConfig wide = fixed_steps(1000);
  const Trajectory long_run = iterate(right_345(), wide);
  CHECK(long_run.stop_reason == StopReason::Overflow);
  CHECK(long_run.records.back().circumradius <= kOverflowRadius);
}

TEST_CASE("recentering does not change the absolute trajectory") {
  const Simplex s = random_simplex(3, 5);
  IterationConfig a = fixed_steps(8);
  IterationConfig b = a;
  b.recenter = false;
  const Trajectory ta = iterate(s, a);
  const Trajectory tb = iterate(s, b);
  REQUIRE(ta.size() == tb.size());
  for (std::size_t i = 0; i < ta.size(); ++i) {
    const double scale = ta[i].circumradius;
    CHECK(dist(ta[i].incenter, tb[i].incenter) <= 1e-9 * scale);
    CHECK(dist(ta[i].circumcenter, tb[i].circumcenter) <= 1e-9 * scale);
    CHECK(ta[i].ratio == doctest::Approx(tb[i].ratio).epsilon(1e-9));
    // The stored local simplex plus offset is the absolute iterate.
    const Simplex abs_a = ta[i].simplex.translated(ta[i].offset);
    CHECK((abs_a.vertices() - tb[i].simplex.vertices()).cwiseAbs().maxCoeff() <= 1e-9 * scale);
  }
}

TEST_CASE("parity step matches a direct circumcenter difference") {
  for (int n = 2; n <= 5; ++n)
    for (auto seed : property_seeds(10)) {
      const Simplex s = random_simplex(n, seed);
      const Sphere in = insphere(s);
      const Sphere circ = circumsphere(s);
      const ParityStep step = parity_step(s, in, circ);
      const Simplex s2 = root(s).root;
      const Simplex s3 = root(s2).root;
      const Point direct = circumsphere(s3).center - circ.center;
      CHECK(dist(step.displacement, direct) <= 1e-9 * circumsphere(s3).radius);
      CHECK(step.root_inradius_slack == doctest::Approx(insphere(s2).radius - circ.radius)
                                            .epsilon(1e-6)
                                            .scale(circ.radius));
      CHECK(step.root_inradius_slack >= -1e-12 * circ.radius);
    }
}

TEST_CASE("trajectory invariants on random simplices") {
  for (int n = 2; n <= 5; ++n)
    for (auto seed : property_seeds(12)) {
      CAPTURE(n);
      CAPTURE(seed);
      const Trajectory traj = iterate(random_simplex(n, seed), fixed_steps(14));
      const double bound = 1.0 / (n - 1) + kRelativeTolerance;
      double rho_hat = 0.0;
      for (std::size_t i = 0; i < traj.size(); ++i) {
        const auto& rec = traj[i];
        rho_hat = std::max(rho_hat, rec.ratio);
        CHECK(rec.ratio <= bound);
        // Chain bookkeeping stays within tau * R_k of the direct solve.
        CHECK(dist(rec.circumcenter, rec.circumcenter_direct) <= kRelativeTolerance * rec.circumradius);
        if (i + 1 < traj.size()) {
          const auto& next = traj[i + 1];
          const double r2 = rec.circumradius * rec.circumradius;
          CHECK(std::abs(next.circumradius * rec.inradius - r2) <= kRelativeTolerance * r2);
          CHECK(next.ratio >= rec.ratio - kRelativeTolerance);
          CHECK(next.inradius >= rec.circumradius * (1.0 - kRelativeTolerance));
          // Circumball of S_k sits inside S_{k+1}.
          const Sphere ball{rec.circumcenter_direct - next.offset, rec.circumradius};
          for (const auto& h : facet_hyperplanes(next.simplex))
            CHECK(h.signed_distance(ball.center) - ball.radius >= -kRelativeTolerance * next.circumradius);
        }
        if (i + 2 < traj.size()) {
          const auto& after = traj[i + 2];
          CHECK(dist(traj[i + 1].incenter, after.circumcenter_direct) <= kRelativeTolerance * traj[i + 1].circumradius);
        }
      }
      // Growth bound with the running maximum of r/R.
      const double big_r1 = traj[0].circumradius;
      for (const auto& rec : traj.records)
        CHECK(rec.circumradius >= big_r1 * std::pow(1.0 / rho_hat, rec.k - 1) * (1.0 - 1e-9));
    }
}

TEST_CASE("triangle incenter and circumcenter collapse relative to R_k") {
  for (auto seed : property_seeds(20)) {
    const Trajectory traj = iterate(random_simplex(2, seed), fixed_steps(40));
    const auto& last = traj.records.back();
    CHECK(dist(last.incenter, last.circumcenter_direct) / last.circumradius < 1e-6);
  }
}

TEST_CASE("triangle angle deviations halve and flip") {
  const double eps = 0.05;
  const double third = std::numbers::pi / 3.0;
  // Law of sines with circumradius 1/2: isoceles triangle with angles (pi/3 + eps, pi/3 + eps, pi/3 - 2 eps).
  const double base_half = std::sin(third - 2 * eps) / 2.0;
  const double side = std::sin(third + eps);
  const double height = std::sqrt(side * side - base_half * base_half);
  const Simplex s{{-base_half, 0}, {base_half, 0}, {0, height}};
  const auto before = triangle_angles(s);
  CHECK(before[0] == doctest::Approx(third + eps));
  CHECK(before[1] == doctest::Approx(third + eps));
  CHECK(before[2] == doctest::Approx(third - 2 * eps));
  const auto devs = triangle_angle_deviations(iterate(s, fixed_steps(3)));
  CHECK(devs[1][0] == doctest::Approx(-eps / 2));
  CHECK(devs[1][1] == doctest::Approx(-eps / 2));
  CHECK(devs[1][2] == doctest::Approx(eps));

  for (const auto& d : triangle_angle_deviations(iterate(equilateral(), fixed_steps(6))))
    for (double x : d) CHECK(std::abs(x) <= 1e-13);

  // Reference deviations for 3-4-5.
  const auto t = triangle_angle_deviations(iterate(right_345(), fixed_steps(6)));
  CHECK(t[0][0] == doctest::Approx(0.52359877559829887308).epsilon(1e-14));
  CHECK(t[0][1] == doctest::Approx(-0.40369644240331335935).epsilon(1e-14));
  CHECK(t[0][2] == doctest::Approx(-0.11990233319498551373).epsilon(1e-14));
  CHECK(t[1][0] == doctest::Approx(-0.26179938779914943654).epsilon(1e-13));
  CHECK(t[1][1] == doctest::Approx(0.20184822120165667968).epsilon(1e-13));
  CHECK(t[1][2] == doctest::Approx(0.059951166597492756863).epsilon(1e-13));

  CHECK_THROWS_AS(triangle_angle_deviations(iterate(regular_simplex(3), fixed_steps(3))), DimensionMismatch);
}

TEST_CASE("ratio limit estimates") {
  for (auto seed : property_seeds(10)) {
    const Trajectory traj = iterate(random_simplex(2, seed), fixed_steps(40));
    CHECK(estimate_rho(traj) == doctest::Approx(0.5).epsilon(1e-6));
  }
  const Trajectory four = iterate(random_simplex(4, 3), fixed_steps(60));
  const double rho = estimate_rho(four);
  CHECK(rho > 0.0);
  CHECK(rho <= 1.0 / 3.0 + kRelativeTolerance);
}

}  // TEST_SUITE
