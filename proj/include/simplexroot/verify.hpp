#pragma once

#include "simplexroot/geometry.hpp"
#include "simplexroot/oracle.hpp"

#include <string>
#include <vector>

namespace simplexroot {

struct CheckResult {
  std::string name;
  double relative = 0.0;  ///< residual scaled by the case's R (or R^2)
  double absolute = 0.0;
  bool passed = false;
};

/// All root-transform checks for one simplex at one tolerance:
/// root circumsphere, Gram identity, facet margins, circumcenter and
/// incenter interiority, radius chain and Monte-Carlo ball containment.
struct CaseVerification {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult& find(const std::string& name) const;
};

CaseVerification verify_case(const Simplex& s, double tolerance, const SampleConfig& mc);

}  // namespace simplexroot
