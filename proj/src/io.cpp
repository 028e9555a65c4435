#include "simplexroot/io.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include <cmath>
#include <ostream>
#include <regex>

namespace simplexroot {

using nlohmann::json;

namespace {

json point_json(const Point& p) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) arr.push_back(p(i));
  return arr;
}

}  // namespace

Simplex SimplexDocument::to_simplex() const {
  Simplex s(vertices);
  s.require_nondegenerate();
  return s;
}

SimplexDocument SimplexDocument::from_simplex(const Simplex& s, std::optional<std::string> name) {
  return {s.dimension(), s.vertices(), std::move(name)};
}

SimplexDocument parse_simplex_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(fmt::format("invalid JSON: {}", e.what()));
  }
  if (!j.is_object()) throw DocumentError("simplex document must be a JSON object");
  if (!j.contains("dimension") || !j["dimension"].is_number_integer())
    throw DocumentError("\"dimension\" must be an integer");
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw DocumentError("\"vertices\" must be an array");

  SimplexDocument doc;
  doc.dimension = j["dimension"].get<int>();
  if (doc.dimension < 2) throw DocumentError(fmt::format("dimension must be at least 2, got {}", doc.dimension));
  const auto& rows = j["vertices"];
  if (rows.size() != static_cast<std::size_t>(doc.dimension) + 1)
    throw DocumentError(fmt::format("expected {} vertices for dimension {}, got {}", doc.dimension + 1,
                                    doc.dimension, rows.size()));
  doc.vertices.resize(doc.dimension + 1, doc.dimension);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(doc.dimension))
      throw DocumentError(fmt::format("vertex {} must have {} coordinates", i, doc.dimension));
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_number()) throw DocumentError(fmt::format("vertex {} coordinate {} is not a number", i, c));
      const double x = row[c].get<double>();
      if (!std::isfinite(x)) throw DocumentError(fmt::format("vertex {} coordinate {} is not finite", i, c));
      doc.vertices(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = x;
    }
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw DocumentError("\"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  return doc;
}

std::string to_json(const SimplexDocument& doc) {
  json j;
  j["dimension"] = doc.dimension;
  json rows = json::array();
  for (Eigen::Index i = 0; i < doc.vertices.rows(); ++i) rows.push_back(point_json(doc.vertices.row(i).transpose()));
  j["vertices"] = std::move(rows);
  if (doc.name) j["name"] = *doc.name;
  return j.dump(2);
}

Simplex regular_simplex(int n) {
  if (n < 2) throw std::invalid_argument(fmt::format("dimension must be at least 2, got {}", n));
  // e_1..e_n plus a last vertex on the diagonal: all pairwise distances sqrt(2).
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n + 1, n);
  v.topRows(n).setIdentity();
  v.row(n).setConstant((1.0 - std::sqrt(n + 1.0)) / n);
  const Eigen::RowVectorXd centroid = v.colwise().mean();
  v.rowwise() -= centroid;
  v /= v.row(0).norm();
  return Simplex(std::move(v));
}

SimplexDocument named_simplex(const std::string& name) {
  if (name == "equilateral") {
    const double h = std::sqrt(3.0) / 2.0;
    return SimplexDocument::from_simplex(Simplex{{1.0, 0.0}, {-0.5, h}, {-0.5, -h}}, name);
  }
  if (name == "right-3-4-5")
    return SimplexDocument::from_simplex(Simplex{{0.0, 0.0}, {4.0, 0.0}, {0.0, 3.0}}, name);
  static const std::regex regular(R"(regular-(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, regular)) {
    const int n = std::stoi(m[1].str());
    if (n < 2 || n > 64) throw DocumentError(fmt::format("regular-N needs 2 <= N <= 64, got {}", n));
    return SimplexDocument::from_simplex(regular_simplex(n), name);
  }
  throw DocumentError(fmt::format("unknown named simplex '{}' (expected equilateral, right-3-4-5 or regular-N)", name));
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  const int n = traj.dimension();
  out << "k,r,R,ratio";
  for (int c = 1; c <= n; ++c) out << ",I_" << c;
  for (int c = 1; c <= n; ++c) out << ",O_" << c;
  out << ",dist_O_k_O_k+2\n";
  const std::size_t count = traj.size();
  for (std::size_t i = 0; i < count; ++i) {
    const auto& rec = traj.records[i];
    fmt::print(out, "{},{:.17g},{:.17g},{:.17g}", rec.k, rec.inradius, rec.circumradius, rec.ratio);
    for (int c = 0; c < n; ++c) fmt::print(out, ",{:.17g}", rec.incenter(c));
    for (int c = 0; c < n; ++c) fmt::print(out, ",{:.17g}", rec.circumcenter(c));
    if (i + 2 < count)
      fmt::print(out, ",{:.17g}\n", rec.parity_step.norm());
    else
      out << ",\n";
  }
}

std::string to_string(StopReason reason) {
  switch (reason) {
    case StopReason::MaxSteps: return "max_steps";
    case StopReason::Converged: return "converged";
    case StopReason::Overflow: return "overflow";
  }
  return "unknown";
}

std::string trajectory_json(const Trajectory& traj, const std::optional<ConvergenceReport>& report) {
  json j;
  j["dimension"] = traj.dimension();
  j["stop_reason"] = to_string(traj.stop_reason);
  json rows = json::array();
  const std::size_t count = traj.size();
  for (std::size_t i = 0; i < count; ++i) {
    const auto& rec = traj.records[i];
    json row;
    row["k"] = rec.k;
    row["r"] = rec.inradius;
    row["R"] = rec.circumradius;
    row["ratio"] = rec.ratio;
    row["incenter"] = point_json(rec.incenter);
    row["circumcenter"] = point_json(rec.circumcenter);
    row["dist_O_k_O_k+2"] = i + 2 < count ? json(rec.parity_step.norm()) : json(nullptr);
    rows.push_back(std::move(row));
  }
  j["records"] = std::move(rows);
  if (report) {
    json r;
    r["even_limit"] = point_json(report->even_limit);
    r["odd_limit"] = point_json(report->odd_limit);
    r["gap"] = report->gap;
    r["even_converged"] = report->even_converged;
    r["odd_converged"] = report->odd_converged;
    r["final_even_step"] = report->final_even_step;
    r["final_odd_step"] = report->final_odd_step;
    r["steps_used"] = report->steps_used;
    json ratios = json::array();
    for (double x : report->decay_ratios) ratios.push_back(std::isnan(x) ? json(nullptr) : json(x));
    r["decay_ratios"] = std::move(ratios);
    r["rho_estimate"] = report->rho_estimate;
    j["report"] = std::move(r);
  }
  return j.dump(2);
}

}  // namespace simplexroot
