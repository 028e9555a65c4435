#include "simplexroot/verify.hpp"

#include "simplexroot/root.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace simplexroot {

bool CaseVerification::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult& CaseVerification::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no check named " + name);
}

CaseVerification verify_case(const Simplex& s, double tolerance, const SampleConfig& mc) {
  const RootResult rr = root(s);
  const double big_r = rr.source_circumsphere.radius;
  const double r = rr.source_insphere.radius;
  CaseVerification out;
  const auto add = [&](std::string name, double relative, double scale, bool passed) {
    out.checks.push_back({std::move(name), relative, relative * scale, passed});
  };

  const double circ = check_root_circumsphere(rr);
  add("root_circumsphere", circ, rr.expected_circumradius(), circ <= tolerance);

  const double gram = check_gram_identity(rr, s);
  add("gram_identity", gram, big_r * big_r, gram <= tolerance);

  const ContainmentCheck containment = check_containment(rr, s);
  const double shortfall = std::max(0.0, -containment.min_margin()) / big_r;
  add("containment_margin", shortfall, big_r, shortfall <= tolerance);
  add("circumcenter_interior", containment.center_inside ? 0.0 : 1.0, 1.0, containment.center_inside);

  const bool incenter_inside = check_incenter_interior(rr);
  add("incenter_interior", incenter_inside ? 0.0 : 1.0, 1.0, incenter_inside);

  const double r2 = insphere(rr.root).radius;
  const double big_r2 = circumsphere(rr.root).radius;
  const double recurrence = std::abs(big_r2 * r - big_r * big_r) / (big_r * big_r);
  add("radius_recurrence", recurrence, big_r * big_r, recurrence <= tolerance);
  const double container = std::max(0.0, big_r - r2) / big_r;
  add("container_inequality", container, big_r, container <= tolerance);
  const double monotone = std::max(0.0, r / big_r - r2 / big_r2);
  add("ratio_monotone", monotone, 1.0, monotone <= tolerance);

  const double fraction = mc_ball_in_simplex(rr.source_circumsphere, rr.root, mc);
  add("mc_ball_containment", 1.0 - fraction, static_cast<double>(mc.sample_count), fraction == 1.0);
  return out;
}

}  // namespace simplexroot
