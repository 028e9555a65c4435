// Command-line front end: gen, iterate, verify, plot.
//
// Exit codes: 0 success / converged, 1 verification failure, 2 not
// converged, 3 degenerate input, 4 overflow, 5 unsupported dimension,
// 64 unreadable or malformed input document.

#include "simplexroot/io.hpp"
#include "simplexroot/iteration.hpp"
#include "simplexroot/oracle.hpp"
#include "simplexroot/svg.hpp"
#include "simplexroot/verify.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

namespace {

using namespace simplexroot;

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kNotConverged = 2,
  kDegenerate = 3,
  kOverflow = 4,
  kUnsupportedDimension = 5,
  kBadInput = 64,
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw DocumentError(fmt::format("cannot open '{}'", path));
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Simplex load_simplex(const std::string& path) { return parse_simplex_document(read_input(path)).to_simplex(); }

struct GenOptions {
  int dim = 2;
  std::uint64_t seed = 0;
  double quality = 0.05;
  std::string named;
};

int run_gen(const GenOptions& opt) {
  SimplexDocument doc =
      opt.named.empty()
          ? SimplexDocument::from_simplex(random_simplex(opt.dim, opt.seed, opt.quality),
                                          fmt::format("random-d{}-s{}", opt.dim, opt.seed))
          : named_simplex(opt.named);
  std::cout << to_json(doc) << "\n";
  return kOk;
}

struct IterateOptions {
  std::string input = "-";
  int steps = 60;
  double tol = 1e-9;
  std::string format = "csv";
  bool no_recenter = false;
  bool no_early_stop = false;
};

void print_report_text(std::ostream& out, const Trajectory& traj, const ConvergenceReport& r) {
  const double big_r = traj.records.back().circumradius;
  const auto point = [](const Point& p) {
    std::string s;
    for (Eigen::Index i = 0; i < p.size(); ++i) s += fmt::format("{}{:.17g}", i ? " " : "", p(i));
    return s;
  };
  out << fmt::format("stop_reason={}\n", to_string(traj.stop_reason));
  out << fmt::format("steps_used={}\n", r.steps_used);
  out << fmt::format("even_limit={}\n", point(r.even_limit));
  out << fmt::format("odd_limit={}\n", point(r.odd_limit));
  out << fmt::format("gap={:.17g}\n", r.gap);
  out << fmt::format("final_even_step={:.6e} (relative to R_k {:.6e})\n", r.final_even_step, r.final_even_step / big_r);
  out << fmt::format("final_odd_step={:.6e} (relative to R_k {:.6e})\n", r.final_odd_step, r.final_odd_step / big_r);
  out << fmt::format("even_converged={}\nodd_converged={}\n", r.even_converged, r.odd_converged);
  out << fmt::format("tail_decay_ratio={:.6g}\n", r.tail_decay_ratio());
  out << fmt::format("rho_estimate={:.17g}\n", r.rho_estimate);
}

int run_iterate(const IterateOptions& opt) {
  const Simplex s1 = load_simplex(opt.input);
  IterationConfig cfg;
  cfg.max_steps = opt.steps;
  cfg.cauchy_tolerance = opt.tol;
  cfg.recenter = !opt.no_recenter;
  cfg.stop_when_converged = !opt.no_early_stop;
  const Trajectory traj = iterate(s1, cfg);

  std::optional<ConvergenceReport> report;
  if (traj.size() >= 4) report = subsequence_limits(traj, cfg);

  if (opt.format == "json") {
    std::cout << trajectory_json(traj, report) << "\n";
  } else {
    write_trajectory_csv(std::cout, traj);
    if (report) print_report_text(std::cerr, traj, *report);
  }
  std::cout.flush();

  if (traj.stop_reason == StopReason::Overflow) {
    std::cerr << "overflow guard reached; trajectory truncated\n";
    return kOverflow;
  }
  if (!report) {
    std::cerr << "fewer than 4 iterates; convergence not assessed\n";
    return kNotConverged;
  }
  return report->converged() ? kOk : kNotConverged;
}

struct VerifyOptions {
  std::string input;
  int random = 0;
  int dim = 2;
  std::uint64_t seed = 0;
  double quality = 0.05;
  std::size_t mc_samples = 100000;
  double tol = kRelativeTolerance;
};

int run_verify(const VerifyOptions& opt) {
  struct Case {
    Simplex simplex;
    std::optional<std::uint64_t> seed;
  };
  std::vector<Case> cases;
  if (!opt.input.empty()) {
    cases.push_back({load_simplex(opt.input), std::nullopt});
  } else {
    if (opt.random < 1) throw CLI::ValidationError("verify needs --input or --random COUNT");
    for (int i = 0; i < opt.random; ++i) {
      const std::uint64_t case_seed = opt.seed + static_cast<std::uint64_t>(i);
      cases.push_back({random_simplex(opt.dim, case_seed, opt.quality), case_seed});
    }
  }

  SampleConfig mc;
  mc.sample_count = opt.mc_samples;
  std::vector<std::string> order;
  std::map<std::string, CheckResult> worst;
  int failures = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    mc.seed = cases[i].seed.value_or(0) ^ 0x5eedULL;
    const CaseVerification v = verify_case(cases[i].simplex, opt.tol, mc);
    for (const auto& c : v.checks) {
      auto [it, inserted] = worst.try_emplace(c.name, c);
      if (inserted) order.push_back(c.name);
      it->second.relative = std::max(it->second.relative, c.relative);
      it->second.absolute = std::max(it->second.absolute, c.absolute);
      it->second.passed = it->second.passed && c.passed;
      if (!c.passed) {
        ++failures;
        std::cerr << fmt::format("FAIL case {}{}: {} relative residual {:.3e} (tolerance {:.1e})\n", i,
                                 cases[i].seed ? fmt::format(" seed {}", *cases[i].seed) : std::string(), c.name,
                                 c.relative, opt.tol);
        if (cases[i].seed)
          std::cerr << fmt::format("  reproduce: simplexroot gen --dim {} --seed {} --quality {}\n", opt.dim,
                                   *cases[i].seed, opt.quality);
      }
    }
  }

  std::cout << fmt::format("{} case(s), tolerance {:.1e}, {} Monte-Carlo samples per case\n", cases.size(), opt.tol,
                           opt.mc_samples);
  std::cout << fmt::format("{:<24} {:>14} {:>14}  {}\n", "check", "max_relative", "max_absolute", "status");
  for (const auto& name : order) {
    const auto& c = worst.at(name);
    std::cout << fmt::format("{:<24} {:>14.6e} {:>14.6e}  {}\n", name, c.relative, c.absolute,
                             c.passed ? "ok" : "FAIL");
  }
  return failures == 0 ? kOk : kVerificationFailed;
}

struct PlotOptions {
  std::string input = "-";
  int steps = 1;
  std::string show = "root";
};

int run_plot(const PlotOptions& opt) {
  const Simplex s = load_simplex(opt.input);
  if (s.dimension() != 2) {
    std::cerr << fmt::format("plot supports triangles only; input has dimension {}\n", s.dimension());
    return kUnsupportedDimension;
  }
  std::cout << render_svg(s, parse_plot_mode(opt.show), opt.steps);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root-of-a-simplex iteration toolkit"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a simplex document (random or from the catalog)");
  gen_cmd->add_option("--dim", gen.dim, "Dimension of a random simplex")->check(CLI::Range(2, 64));
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--quality", gen.quality, "Minimum r/R of a random simplex");
  gen_cmd->add_option("--named", gen.named, "equilateral | right-3-4-5 | regular-N");

  IterateOptions it;
  auto* it_cmd = app.add_subcommand("iterate", "Iterate the root map and report the circumcenter limits");
  it_cmd->add_option("--input", it.input, "Simplex document, '-' for stdin");
  it_cmd->add_option("--steps", it.steps, "Maximum number of iterates")->check(CLI::Range(2, 100000));
  it_cmd->add_option("--tol", it.tol, "Absolute Cauchy tolerance on |O_k - O_{k+2}|")->check(CLI::PositiveNumber);
  it_cmd->add_option("--format", it.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  it_cmd->add_flag("--no-recenter", it.no_recenter, "Keep absolute coordinates instead of recentering");
  it_cmd->add_flag("--no-early-stop", it.no_early_stop, "Run all steps even after convergence");

  VerifyOptions ver;
  auto* ver_cmd = app.add_subcommand("verify", "Check the root properties on one or many simplices");
  auto* ver_input = ver_cmd->add_option("--input", ver.input, "Simplex document, '-' for stdin");
  auto* ver_random = ver_cmd->add_option("--random", ver.random, "Number of random simplices");
  ver_input->excludes(ver_random);
  ver_cmd->add_option("--dim", ver.dim, "Dimension of random simplices")->check(CLI::Range(2, 64));
  ver_cmd->add_option("--seed", ver.seed, "Seed of the first random case; case i uses seed + i");
  ver_cmd->add_option("--quality", ver.quality, "Minimum r/R of random simplices");
  ver_cmd->add_option("--mc-samples", ver.mc_samples, "Monte-Carlo samples per case")->check(CLI::PositiveNumber);
  ver_cmd->add_option("--tol", ver.tol, "Relative tolerance for every check")->check(CLI::NonNegativeNumber);

  PlotOptions plot;
  auto* plot_cmd = app.add_subcommand("plot", "Render a triangle and its roots as SVG");
  plot_cmd->add_option("--input", plot.input, "Simplex document, '-' for stdin");
  plot_cmd->add_option("--steps", plot.steps, "Number of iterates to draw")->check(CLI::Range(1, 64));
  plot_cmd->add_option("--show", plot.show, "root | containment | centers")
      ->check(CLI::IsMember({"root", "containment", "centers"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*it_cmd) return run_iterate(it);
    if (*ver_cmd) return run_verify(ver);
    if (*plot_cmd) return run_plot(plot);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const DegenerateSimplex& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return kDegenerate;
  } catch (const OverflowGuard& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return kOverflow;
  } catch (const DimensionMismatch& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kBadInput;
  } catch (const DocumentError& e) {
    std::cerr << "bad input document: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kOk;
}
