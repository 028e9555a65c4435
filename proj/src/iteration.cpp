#include "simplexroot/iteration.hpp"

#include "simplexroot/root.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace simplexroot {

void IterationConfig::validate() const {
  if (max_steps < 2) throw std::invalid_argument(fmt::format("max_steps must be >= 2, got {}", max_steps));
  if (!(cauchy_tolerance > 0.0)) throw std::invalid_argument("cauchy_tolerance must be positive");
  if (!(overflow_radius > 0.0)) throw std::invalid_argument("overflow_radius must be positive");
}

ParityStep parity_step(const Simplex& s, const Sphere& in, const Sphere& circ) {
  const std::vector<double> margins = circumball_margins(s, in, circ);
  const int n = s.dimension();
  Eigen::MatrixXd a(n + 1, n + 1);
  Eigen::VectorXd b(n + 1);
  for (int i = 0; i <= n; ++i) {
    // Root facet i is orthogonal to A_i - I, with the root on the I side.
    const Vector toward = s.vertex(i) - in.center;
    a.row(i).head(n) = (toward / toward.norm()).transpose();
    a(i, n) = -1.0;
    b(i) = -margins[static_cast<std::size_t>(i)];
  }
  const Eigen::VectorXd x = a.partialPivLu().solve(b);
  return {x.head(n), x(n)};
}

Trajectory iterate(const Simplex& s1, const IterationConfig& cfg) {
  cfg.validate();
  s1.require_nondegenerate();

  Trajectory traj;
  Simplex local = s1;
  Vector offset = Vector::Zero(s1.dimension());
  if (cfg.recenter) {
    offset = insphere(local).center;
    local = local.translated(-offset);
  }

  for (int k = 1; k <= cfg.max_steps; ++k) {
    const Sphere in = insphere(local);
    const Sphere circ = circumsphere(local);
    if (!(circ.radius <= cfg.overflow_radius)) {
      traj.stop_reason = StopReason::Overflow;
      break;
    }

    TrajectoryRecord rec{k, local, offset, offset + in.center, Point(), offset + circ.center,
                         in.radius, circ.radius, in.radius / circ.radius, Vector(), 0.0};
    if (k == 1) {
      rec.circumcenter = rec.circumcenter_direct;
    } else if (k == 2) {
      rec.circumcenter = traj.records[0].incenter;
    } else {
      const auto& two_back = traj.records[static_cast<std::size_t>(k - 3)];
      rec.circumcenter = two_back.circumcenter + two_back.parity_step;
    }
    ParityStep step = parity_step(local, in, circ);
    rec.parity_step = std::move(step.displacement);
    rec.root_inradius_slack = step.root_inradius_slack;
    traj.records.push_back(std::move(rec));

    if (cfg.stop_when_converged && k >= 4) {
      const auto& recs = traj.records;
      const double even_or_odd = recs[static_cast<std::size_t>(k - 3)].parity_step.norm();
      const double other = recs[static_cast<std::size_t>(k - 4)].parity_step.norm();
      if (even_or_odd < cfg.cauchy_tolerance && other < cfg.cauchy_tolerance) {
        traj.stop_reason = StopReason::Converged;
        break;
      }
    }
    if (k == cfg.max_steps) {
      traj.stop_reason = StopReason::MaxSteps;
      break;
    }

    // The next circumradius is R^2 / r; stop before root() would refuse.
    if (!(circ.radius * circ.radius / in.radius <= cfg.overflow_radius)) {
      traj.stop_reason = StopReason::Overflow;
      break;
    }
    Simplex next = root(local, cfg.overflow_radius).root;
    if (cfg.recenter) {
      const Vector shift = insphere(next).center;
      next = next.translated(-shift);
      offset += shift;
    }
    local = std::move(next);
  }

  if (traj.stop_reason == StopReason::Overflow && traj.records.size() < 2)
    throw OverflowGuard("circumradius exceeded the overflow guard before two iterates");
  return traj;
}

double ConvergenceReport::tail_decay_ratio() const {
  double worst = 0.0;
  for (std::size_t j = decay_ratios.size() / 2; j < decay_ratios.size(); ++j)
    if (!std::isnan(decay_ratios[j])) worst = std::max(worst, decay_ratios[j]);
  return worst;
}

ConvergenceReport subsequence_limits(const Trajectory& traj, const IterationConfig& cfg) {
  const int count = static_cast<int>(traj.size());
  if (count < 4)
    throw std::invalid_argument(fmt::format("trajectory too short: {} records, need at least 4", count));

  const auto at = [&](int k) -> const TrajectoryRecord& { return traj.records[static_cast<std::size_t>(k - 1)]; };
  const int last_even = count % 2 == 0 ? count : count - 1;
  const int last_odd = count % 2 == 1 ? count : count - 1;

  ConvergenceReport report;
  report.even_limit = at(last_even).circumcenter;
  report.odd_limit = at(last_odd).circumcenter;
  report.gap = (report.even_limit - report.odd_limit).norm();
  report.final_even_step = at(last_even - 2).parity_step.norm();
  report.final_odd_step = at(last_odd - 2).parity_step.norm();
  report.even_converged = report.final_even_step < cfg.cauchy_tolerance;
  report.odd_converged = report.final_odd_step < cfg.cauchy_tolerance;
  report.steps_used = count;
  for (int k = 1; k + 4 <= count; ++k) {
    const double before = at(k).parity_step.norm();
    const double after = at(k + 2).parity_step.norm();
    report.decay_ratios.push_back(before > 0.0 ? after / before : std::numeric_limits<double>::quiet_NaN());
  }
  report.rho_estimate = estimate_rho(traj);
  return report;
}

std::array<double, 3> triangle_angles(const Simplex& s) {
  if (s.dimension() != 2) throw DimensionMismatch("triangle angles need a 2-dimensional simplex");
  std::array<double, 3> angles{};
  for (int i = 0; i < 3; ++i) {
    const Vector u = s.vertex((i + 1) % 3) - s.vertex(i);
    const Vector v = s.vertex((i + 2) % 3) - s.vertex(i);
    angles[static_cast<std::size_t>(i)] = std::atan2(std::abs(u(0) * v(1) - u(1) * v(0)), u.dot(v));
  }
  return angles;
}

std::vector<std::array<double, 3>> triangle_angle_deviations(const Trajectory& traj) {
  if (traj.dimension() != 2) throw DimensionMismatch("angle deviations are defined for triangles only");
  std::vector<std::array<double, 3>> out;
  out.reserve(traj.size());
  for (const auto& rec : traj.records) {
    auto a = triangle_angles(rec.simplex);
    for (double& x : a) x -= std::numbers::pi / 3.0;
    out.push_back(a);
  }
  return out;
}

double estimate_rho(const Trajectory& traj) {
  if (traj.size() < 2)
    throw std::invalid_argument(fmt::format("trajectory too short: {} records, need at least 2", traj.size()));
  return traj.records.back().ratio;
}

}  // namespace simplexroot
