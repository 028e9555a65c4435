#include "simplexroot/geometry.hpp"
#include "simplexroot/io.hpp"
#include "simplexroot/iteration.hpp"
#include "simplexroot/oracle.hpp"
#include "simplexroot/root.hpp"
#include "simplexroot/verify.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace simplexroot;

namespace {

Simplex as_simplex(const Eigen::MatrixXd& vertices) { return Simplex(vertices); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = R"pbdoc(
        Root-of-a-simplex construction and iteration
        --------------------------------------------

        Simplices are passed as (n+1) x n arrays, one vertex per row.
    )pbdoc";

  py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);
  py::register_exception<DegenerateSimplex>(m, "DegenerateSimplex", PyExc_ValueError);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
  py::register_exception<OverflowGuard>(m, "OverflowGuard", PyExc_OverflowError);

  py::class_<Sphere>(m, "Sphere")
      .def(py::init<Point, double>(), py::arg("center"), py::arg("radius"))
      .def_readonly("center", &Sphere::center)
      .def_readonly("radius", &Sphere::radius)
      .def("__repr__", [](const Sphere& s) { return "<Sphere radius=" + std::to_string(s.radius) + ">"; });

  py::class_<Hyperplane>(m, "Hyperplane")
      .def_readonly("unit_normal", &Hyperplane::unit_normal)
      .def_readonly("offset", &Hyperplane::offset)
      .def("signed_distance", &Hyperplane::signed_distance);

  m.def("signed_volume", [](const Eigen::MatrixXd& v) { return signed_volume(as_simplex(v)); });
  m.def("facet_hyperplane", [](const Eigen::MatrixXd& v, int i) { return facet_hyperplane(as_simplex(v), i); },
        py::arg("vertices"), py::arg("i"));
  m.def("insphere", [](const Eigen::MatrixXd& v) { return insphere(as_simplex(v)); });
  m.def("circumsphere", [](const Eigen::MatrixXd& v) { return circumsphere(as_simplex(v)); });
  m.def("contact_points", [](const Eigen::MatrixXd& v) { return contact_points(as_simplex(v)); });
  m.def("barycentric", [](const Eigen::MatrixXd& v, const Point& x) { return barycentric(as_simplex(v), x); });

  py::class_<RootResult>(m, "RootResult")
      .def_property_readonly("root", [](const RootResult& r) { return r.root.vertices(); })
      .def_readonly("source_insphere", &RootResult::source_insphere)
      .def_readonly("source_circumsphere", &RootResult::source_circumsphere)
      .def_readonly("contact_points", &RootResult::contact_points);

  m.def("root", [](const Eigen::MatrixXd& v) { return root(as_simplex(v)); }, "Root of the simplex with the given vertices.");
  m.def("check_root_circumsphere", &check_root_circumsphere);
  m.def("check_gram_identity",
        [](const RootResult& rr, const Eigen::MatrixXd& v) { return check_gram_identity(rr, as_simplex(v)); });
  m.def("check_containment", [](const RootResult& rr, const Eigen::MatrixXd& v) {
    const auto c = check_containment(rr, as_simplex(v));
    return py::make_tuple(c.margins, c.center_inside);
  });
  m.def("check_incenter_interior", &check_incenter_interior);
  m.def("radius_chain", [](const Eigen::MatrixXd& v) {
    const auto c = radius_chain(as_simplex(v));
    return py::make_tuple(c.source_inradius, c.source_circumradius, c.root_inradius, c.root_circumradius);
  });

  py::class_<IterationConfig>(m, "IterationConfig")
      .def(py::init<>())
      .def_readwrite("max_steps", &IterationConfig::max_steps)
      .def_readwrite("cauchy_tolerance", &IterationConfig::cauchy_tolerance)
      .def_readwrite("recenter", &IterationConfig::recenter)
      .def_readwrite("overflow_radius", &IterationConfig::overflow_radius)
      .def_readwrite("stop_when_converged", &IterationConfig::stop_when_converged);

  py::class_<TrajectoryRecord>(m, "TrajectoryRecord")
      .def_readonly("k", &TrajectoryRecord::k)
      .def_property_readonly("simplex", [](const TrajectoryRecord& r) { return r.simplex.vertices(); })
      .def_readonly("offset", &TrajectoryRecord::offset)
      .def_readonly("incenter", &TrajectoryRecord::incenter)
      .def_readonly("circumcenter", &TrajectoryRecord::circumcenter)
      .def_readonly("inradius", &TrajectoryRecord::inradius)
      .def_readonly("circumradius", &TrajectoryRecord::circumradius)
      .def_readonly("ratio", &TrajectoryRecord::ratio)
      .def_readonly("parity_step", &TrajectoryRecord::parity_step);

  py::enum_<StopReason>(m, "StopReason")
      .value("MaxSteps", StopReason::MaxSteps)
      .value("Converged", StopReason::Converged)
      .value("Overflow", StopReason::Overflow);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("records", &Trajectory::records)
      .def_readonly("stop_reason", &Trajectory::stop_reason)
      .def("__len__", &Trajectory::size);

  py::class_<ConvergenceReport>(m, "ConvergenceReport")
      .def_readonly("even_limit", &ConvergenceReport::even_limit)
      .def_readonly("odd_limit", &ConvergenceReport::odd_limit)
      .def_readonly("gap", &ConvergenceReport::gap)
      .def_readonly("even_converged", &ConvergenceReport::even_converged)
      .def_readonly("odd_converged", &ConvergenceReport::odd_converged)
      .def_readonly("steps_used", &ConvergenceReport::steps_used)
      .def_readonly("decay_ratios", &ConvergenceReport::decay_ratios)
      .def_readonly("rho_estimate", &ConvergenceReport::rho_estimate)
      .def("tail_decay_ratio", &ConvergenceReport::tail_decay_ratio);

  m.def("iterate", [](const Eigen::MatrixXd& v, const IterationConfig& cfg) { return iterate(as_simplex(v), cfg); },
        py::arg("vertices"), py::arg("config") = IterationConfig{});
  m.def("subsequence_limits", &subsequence_limits, py::arg("trajectory"), py::arg("config") = IterationConfig{});
  m.def("triangle_angle_deviations", &triangle_angle_deviations);
  m.def("estimate_rho", &estimate_rho);

  m.def("random_simplex",
        [](int n, std::uint64_t seed, double floor) { return random_simplex(n, seed, floor).vertices(); },
        py::arg("n"), py::arg("seed"), py::arg("quality_floor") = 0.05);
  m.def(
      "mc_ball_in_simplex",
      [](const Sphere& ball, const Eigen::MatrixXd& v, std::size_t samples, std::uint64_t seed) {
        SampleConfig cfg;
        cfg.sample_count = samples;
        cfg.seed = seed;
        py::gil_scoped_release release;
        return mc_ball_in_simplex(ball, as_simplex(v), cfg);
      },
      py::arg("ball"), py::arg("vertices"), py::arg("sample_count") = 100000, py::arg("seed") = 0);
  m.def("gram_matrix", [](const Eigen::MatrixXd& s, const Eigen::MatrixXd& t, const Point& c) {
    return gram_matrix(as_simplex(s), as_simplex(t), c);
  });
  m.def("named_simplex", [](const std::string& name) { return named_simplex(name).vertices; });
  m.def("verify", [](const Eigen::MatrixXd& v, double tol, std::size_t samples) {
    SampleConfig cfg;
    cfg.sample_count = samples;
    const auto result = verify_case(as_simplex(v), tol, cfg);
    py::dict out;
    for (const auto& c : result.checks) out[py::str(c.name)] = py::make_tuple(c.relative, c.passed);
    return out;
  }, py::arg("vertices"), py::arg("tolerance") = kRelativeTolerance, py::arg("sample_count") = 10000);

#ifdef SIMPLEXROOT_VERSION
  m.attr("__version__") = SIMPLEXROOT_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
