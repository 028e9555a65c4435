#pragma once

#include "simplexroot/geometry.hpp"

#include <string>

namespace simplexroot {

enum class PlotMode {
  Root,         ///< S_k, incircle, contact points and root(S_k)
  Containment,  ///< S_k, its circumcircle and root(S_k) around it
  Centers,      ///< S_1..S_K with circles, plus the O_k trail by parity
};

PlotMode parse_plot_mode(const std::string& name);

/// Standalone SVG 1.1 document for a triangle and its first `steps`
/// iterates. The view box fits every drawn object with a 5% margin.
/// Throws DimensionMismatch for non-planar input.
std::string render_svg(const Simplex& s1, PlotMode mode, int steps);

}  // namespace simplexroot
