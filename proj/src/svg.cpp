#include "simplexroot/svg.hpp"

#include "simplexroot/iteration.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace simplexroot {

namespace {

struct Box {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void add(double x, double y) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  void add_circle(const Point& c, double r) {
    add(c(0) - r, c(1) - r);
    add(c(0) + r, c(1) + r);
  }
  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
  bool empty() const { return !(min_x <= max_x); }
};

// Collects primitives in world coordinates and writes them with y flipped.
class Canvas {
 public:
  void polygon(const Simplex& s, const std::string& stroke, const std::string& css_class) {
    std::string pts;
    for (int i = 0; i < s.vertex_count(); ++i) {
      box_.add(s.vertices()(i, 0), s.vertices()(i, 1));
      pts += fmt::format("{:.9g},{:.9g} ", s.vertices()(i, 0), -s.vertices()(i, 1));
    }
    items_.push_back(fmt::format(R"(<polygon class="{}" points="{}" fill="none" stroke="{}"/>)", css_class, pts,
                                 stroke));
  }
  void circle(const Sphere& c, const std::string& stroke, const std::string& css_class) {
    box_.add_circle(c.center, c.radius);
    items_.push_back(fmt::format(R"(<circle class="{}" cx="{:.9g}" cy="{:.9g}" r="{:.9g}" fill="none" stroke="{}"/>)",
                                 css_class, c.center(0), -c.center(1), c.radius, stroke));
  }
  void dot(const Point& p, const std::string& fill, const std::string& css_class) {
    box_.add(p(0), p(1));
    dots_.push_back({p, fill, css_class});
  }
  void polyline(const std::vector<Point>& pts, const std::string& stroke, const std::string& css_class) {
    std::string s;
    for (const auto& p : pts) {
      box_.add(p(0), p(1));
      s += fmt::format("{:.9g},{:.9g} ", p(0), -p(1));
    }
    items_.push_back(
        fmt::format(R"(<polyline class="{}" points="{}" fill="none" stroke="{}"/>)", css_class, s, stroke));
  }

  std::string finish(const std::string& title) const {
    Box box = box_;
    if (box.empty()) box.add(0.0, 0.0);
    const double span = std::max({box.width(), box.height(), 1e-300});
    const double margin = 0.05 * span;
    const double w = box.width() + 2 * margin;
    const double h = box.height() + 2 * margin;
    const double px_w = 800.0;
    const double px_h = std::max(100.0, std::min(4000.0, px_w * h / w));
    const double dot_r = 0.006 * std::max(w, h);

    std::string out;
    out += R"(<?xml version="1.0" encoding="UTF-8" standalone="no"?>)"
           "\n";
    out += fmt::format(
        R"(<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{:.0f}" height="{:.0f}" viewBox="{:.9g} {:.9g} {:.9g} {:.9g}">)"
        "\n",
        px_w, px_h, box.min_x - margin, -box.max_y - margin, w, h);
    out += fmt::format("<title>{}</title>\n", title);
    out += "<g stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\" style=\"vector-effect:non-scaling-stroke\">\n";
    for (const auto& item : items_) out += item + "\n";
    for (const auto& d : dots_)
      out += fmt::format(R"(<circle class="{}" cx="{:.9g}" cy="{:.9g}" r="{:.9g}" fill="{}" stroke="none"/>)"
                         "\n",
                         d.css_class, d.at(0), -d.at(1), dot_r, d.fill);
    out += "</g>\n</svg>\n";
    return out;
  }

 private:
  struct Dot {
    Point at;
    std::string fill;
    std::string css_class;
  };
  Box box_;
  std::vector<std::string> items_;
  std::vector<Dot> dots_;
};

Simplex absolute(const TrajectoryRecord& rec) { return rec.simplex.translated(rec.offset); }

Sphere shifted(Sphere s, const Vector& offset) {
  s.center += offset;
  return s;
}

}  // namespace

PlotMode parse_plot_mode(const std::string& name) {
  if (name == "root") return PlotMode::Root;
  if (name == "containment") return PlotMode::Containment;
  if (name == "centers") return PlotMode::Centers;
  throw std::invalid_argument(fmt::format("unknown plot mode '{}' (expected root, containment or centers)", name));
}

std::string render_svg(const Simplex& s1, PlotMode mode, int steps) {
  if (s1.dimension() != 2) throw DimensionMismatch(fmt::format("plots need a triangle, got dimension {}", s1.dimension()));
  if (steps < 1) throw std::invalid_argument("steps must be at least 1");

  IterationConfig cfg;
  cfg.max_steps = steps + 1;
  cfg.stop_when_converged = false;
  const Trajectory traj = iterate(s1, cfg);
  const int drawn = std::min<int>(steps, static_cast<int>(traj.size()) - 1);

  Canvas canvas;
  switch (mode) {
    case PlotMode::Root:
      for (int k = 0; k < drawn; ++k) {
        const auto& rec = traj.records[static_cast<std::size_t>(k)];
        canvas.polygon(absolute(rec), "#000000", "simplex");
        canvas.circle(shifted(insphere(rec.simplex), rec.offset), "#1f77b4", "incircle");
        for (const auto& b : contact_points(rec.simplex)) canvas.dot(b + rec.offset, "#1f77b4", "contact");
        canvas.dot(rec.incenter, "#2ca02c", "incenter");
        canvas.polygon(absolute(traj.records[static_cast<std::size_t>(k + 1)]), "#d62728", "root");
      }
      return canvas.finish("Root of a triangle: image of the contact triangle");
    case PlotMode::Containment:
      for (int k = 0; k < drawn; ++k) {
        const auto& rec = traj.records[static_cast<std::size_t>(k)];
        canvas.polygon(absolute(rec), "#000000", "simplex");
        canvas.circle(shifted(circumsphere(rec.simplex), rec.offset), "#ff7f0e", "circumcircle");
        canvas.dot(rec.circumcenter, "#ff7f0e", "circumcenter");
        canvas.polygon(absolute(traj.records[static_cast<std::size_t>(k + 1)]), "#d62728", "root");
      }
      return canvas.finish("Root triangle around the source circumcircle");
    case PlotMode::Centers: {
      std::vector<Point> even, odd;
      for (int k = 0; k < drawn; ++k) {
        const auto& rec = traj.records[static_cast<std::size_t>(k)];
        canvas.polygon(absolute(rec), "#7f7f7f", "simplex");
        canvas.circle(shifted(circumsphere(rec.simplex), rec.offset), "#c7c7c7", "circumcircle");
        (rec.k % 2 == 0 ? even : odd).push_back(rec.circumcenter);
      }
      if (even.size() > 1) canvas.polyline(even, "#1f77b4", "even-trail");
      if (odd.size() > 1) canvas.polyline(odd, "#d62728", "odd-trail");
      for (const auto& p : even) canvas.dot(p, "#1f77b4", "even-center");
      for (const auto& p : odd) canvas.dot(p, "#d62728", "odd-center");
      return canvas.finish("Circumcenters of the iterated roots by parity");
    }
  }
  throw std::logic_error("unhandled plot mode");
}

}  // namespace simplexroot
