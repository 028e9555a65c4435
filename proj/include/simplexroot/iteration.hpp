#pragma once

#include "simplexroot/geometry.hpp"

#include <array>
#include <vector>

namespace simplexroot {

struct IterationConfig {
  int max_steps = 60;
  /// Absolute bound on the final same-parity step |O_k - O_{k+2}|.
  double cauchy_tolerance = 1e-9;
  /// Translate every iterate so its incenter sits at the local origin.
  bool recenter = true;
  double overflow_radius = kOverflowRadius;
  /// Stop as soon as both parity subsequences meet cauchy_tolerance. Past
  /// that point O_k - I_k drops under the rounding level of coordinates of
  /// size R_k and further steps only measure noise.
  bool stop_when_converged = true;

  void validate() const;
};

/// One iterate S_k. Positions marked absolute are in the frame of S_1.
struct TrajectoryRecord {
  int k = 0;  ///< 1-based, S_1 is the input
  Simplex simplex;  ///< in the local frame
  Vector offset;    ///< local frame origin, absolute
  Point incenter;       ///< I_k, absolute
  Point circumcenter;   ///< O_k, absolute (same-parity chain, see iterate)
  Point circumcenter_direct;  ///< offset + circumcenter solved in the local frame
  double inradius = 0.0;
  double circumradius = 0.0;
  double ratio = 0.0;
  /// O_{k+2} - O_k, solved from the containment margins of S_k.
  Vector parity_step;
  /// r_{k+1} - R_k from the same solve; nonnegative since the root contains the circumball.
  double root_inradius_slack = 0.0;
};

enum class StopReason { MaxSteps, Converged, Overflow };

struct Trajectory {
  std::vector<TrajectoryRecord> records;
  StopReason stop_reason = StopReason::MaxSteps;

  std::size_t size() const { return records.size(); }
  const TrajectoryRecord& operator[](std::size_t i) const { return records[i]; }
  int dimension() const { return records.empty() ? 0 : records.front().simplex.dimension(); }
};

struct ParityStep {
  Vector displacement;  ///< O_{k+2} - O_k
  double root_inradius_slack = 0.0;  ///< r_{k+1} - R_k
};

/// Displacement from the circumcenter of s to the incenter of root(s),
/// which is also the circumcenter two iterations later.
///
/// Both centers are pinned by their distances to the root facets: the
/// incenter I' sits at r' from each, and O sits at R + margin_i. With u_i
/// the inward unit normal of root facet i, the unknowns x = I' - O and
/// t = r' - R satisfy u_i . x - t = -margin_i. Solving for the difference
/// directly keeps relative precision when |x| is many orders below R.
ParityStep parity_step(const Simplex& s, const Sphere& in, const Sphere& circ);

/// Iterates S_{k+1} = root(S_k).
///
/// O_1 is solved directly and O_2 = I_1; later circumcenters are advanced
/// along each parity chain with parity_step, so absolute positions do not
/// inherit the eps * R_k rounding of the growing local coordinates.
///
/// Throws DegenerateSimplex for flat input and OverflowGuard when fewer
/// than two iterates fit under the overflow radius.
Trajectory iterate(const Simplex& s1, const IterationConfig& cfg = {});

struct ConvergenceReport {
  Point even_limit;  ///< last of O_2, O_4, ...
  Point odd_limit;   ///< last of O_1, O_3, ...
  double gap = 0.0;
  bool even_converged = false;
  bool odd_converged = false;
  int steps_used = 0;
  double final_even_step = 0.0;
  double final_odd_step = 0.0;
  /// Entry j is |O_{k+2} O_{k+4}| / |O_k O_{k+2}| for k = j + 1; NaN where
  /// the denominator vanishes.
  std::vector<double> decay_ratios;
  double rho_estimate = 0.0;

  bool converged() const { return even_converged && odd_converged; }
  /// Largest ratio over the second half of decay_ratios, ignoring NaN.
  double tail_decay_ratio() const;
};

/// Needs at least four records.
ConvergenceReport subsequence_limits(const Trajectory& traj, const IterationConfig& cfg);

/// Angles of each triangle S_k minus pi/3, in vertex order. The root of a
/// triangle is similar to its contact triangle, so each step maps the
/// deviations to -1/2 times themselves.
std::vector<std::array<double, 3>> triangle_angle_deviations(const Trajectory& traj);

/// Interior angles of a triangle, in vertex order.
std::array<double, 3> triangle_angles(const Simplex& s);

/// Last r_k / R_k. The ratios never decrease, so this bounds all earlier ones.
double estimate_rho(const Trajectory& traj);

}  // namespace simplexroot
