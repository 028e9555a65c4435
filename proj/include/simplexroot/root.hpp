#pragma once

#include "simplexroot/geometry.hpp"

#include <vector>

namespace simplexroot {

/// Output of the root construction together with the source quantities it
/// was built from.
///
/// Root vertex i is the image of contact point B_i (the insphere touching
/// point on the facet opposite source vertex i) under inversion in the
/// sphere (I, R) followed by point reflection through I. Since |I B_i| = r
/// this is the homothety C_i = I - (R^2 / r^2) (B_i - I).
struct RootResult {
  Simplex root;
  Sphere source_insphere;
  Sphere source_circumsphere;
  std::vector<Point> contact_points;

  /// Homothety coefficient magnitude R^2 / r^2 that maps the contact
  /// simplex onto the root (with a sign flip).
  double scale() const;
  /// Circumradius the root must have: R^2 / r.
  double expected_circumradius() const;
};

/// Throws DegenerateSimplex for flat input and OverflowGuard when the root
/// circumradius R^2/r would exceed overflow_radius.
RootResult root(const Simplex& s, double overflow_radius = kOverflowRadius);

/// Largest relative deviation of the root's circumsphere from (I, R^2/r).
/// Covers both the vertex distances to I and an independent circumsphere
/// solve on the root.
double check_root_circumsphere(const RootResult& rr);

/// max over i != j of |(C_i - I).(A_j - I) + R^2| / R^2.
double check_gram_identity(const RootResult& rr, const Simplex& s);

struct ContainmentCheck {
  /// Per root facet (opposite root vertex i): signed distance of the source
  /// circumcenter to the facet, minus the source circumradius.
  std::vector<double> margins;
  /// Every barycentric weight of the source circumcenter in the root is > 0.
  bool center_inside = false;

  double min_margin() const;
};

ContainmentCheck check_containment(const RootResult& rr, const Simplex& s);

/// The source incenter lies strictly inside the root.
bool check_incenter_interior(const RootResult& rr);

struct RadiusChain {
  double source_inradius = 0.0;
  double source_circumradius = 0.0;
  double root_inradius = 0.0;
  double root_circumradius = 0.0;

  double source_ratio() const { return source_inradius / source_circumradius; }
  double root_ratio() const { return root_inradius / root_circumradius; }
};

/// Radii of s and of root(s); the root radii come from fresh insphere and
/// circumsphere solves on the root.
RadiusChain radius_chain(const Simplex& s);

/// Containment margins of the source circumball against the root facets,
/// evaluated in closed form from the source alone.
///
/// Root facet i is the hyperplane { X : (X - I).(A_i - I) = -R^2 }, so with
/// w = O - I, p_i = w.(A_i - O), a_i = |A_i - I| and d = |w|:
///
///   margin_i = (p_i (2 p_i + d^2) / (a_i + R) + a_i d^2) / (a_i (a_i + R)).
///
/// This form never subtracts two O(R) quantities, so it keeps full relative
/// precision when the margins are tiny compared with R. Entry order matches
/// check_containment.
std::vector<double> circumball_margins(const Simplex& s, const Sphere& in, const Sphere& circ);

}  // namespace simplexroot
