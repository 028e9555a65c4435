#pragma once

#include "simplexroot/geometry.hpp"
#include "simplexroot/iteration.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace simplexroot {

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON interchange form of a simplex:
///   {"dimension": n, "vertices": [[...], ...], "name": "..."}
/// with n+1 rows of n numbers; "name" is optional.
struct SimplexDocument {
  int dimension = 0;
  Eigen::MatrixXd vertices;
  std::optional<std::string> name;

  /// Throws DegenerateSimplex when the vertices are flat.
  Simplex to_simplex() const;
  static SimplexDocument from_simplex(const Simplex& s, std::optional<std::string> name = std::nullopt);
};

/// Throws DocumentError on malformed JSON or inconsistent shape.
SimplexDocument parse_simplex_document(const std::string& text);
std::string to_json(const SimplexDocument& doc);

/// Catalog entries: "equilateral" (circumradius 1, vertices (1,0),
/// (-1/2, +-sqrt(3)/2)), "right-3-4-5" ((0,0),(4,0),(0,3)) and "regular-N"
/// (regular N-simplex, circumradius 1, centered at the origin).
SimplexDocument named_simplex(const std::string& name);

/// Regular n-simplex with circumradius 1 centered at the origin.
Simplex regular_simplex(int n);

/// Columns: k, r, R, ratio, I_1..I_n, O_1..O_n, dist_O_k_O_k+2. The last
/// column is empty on the final two rows.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

/// Trajectory rows plus the convergence report as one JSON document.
std::string trajectory_json(const Trajectory& traj, const std::optional<ConvergenceReport>& report);

std::string to_string(StopReason reason);

}  // namespace simplexroot
