#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "lwl/check_suite.hpp"
#include "lwl/constants.hpp"
#include "lwl/diophantine.hpp"
#include "lwl/inequalities.hpp"
#include "lwl/io.hpp"
#include "lwl/model.hpp"
#include "lwl/quadrature.hpp"
#include "lwl/witness.hpp"

namespace {

struct Options {
  std::string input;
  std::string out;
  std::string format = "text";
  std::string objective = "both";
  std::string only;
  double T = 72.0;
  double tol = 1e-8;
  double eps = 0.5;
  double eta = 0.0;
  double dio_eps = 0.1;
  std::uint64_t seed = 1;
  int p = 0;
  int delta = 4;
  int grid = 0;
  int count = 20;
  int samples = 2000;
  int grid_density = 160;
  std::int64_t mcap = 1 << 16;
  bool normalize = false;
  bool as_printed = false;
  std::string dump;
};

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string flag(bool converged) { return converged ? "converged" : "NOT CONVERGED"; }

int run_eval(const Options& opt) {
  const lwl::ExponentialSum s = lwl::load_problem(opt.input);
  lwl::QuadratureConfig quad;
  quad.rel_tol = opt.tol;

  const auto l1 = lwl::l1_norm_interval(s, opt.T, quad);
  const double l2 = lwl::l2_norm_sq_interval_exact(s, opt.T) / opt.T;
  lwl::BesicovitchConfig bcfg;
  bcfg.quad = quad;
  const auto bes = lwl::besicovitch_l1(s, bcfg);

  Sink sink(opt.out);
  std::ostream& os = sink.stream();
  if (opt.format == "json") {
    os << "{\n  \"N\": " << s.size() << ",\n  \"T\": " << lwl::format_full(opt.T)
       << ",\n  \"l1_mean\": " << lwl::format_full(l1.value / opt.T)
       << ",\n  \"l1_converged\": " << (l1.converged ? "true" : "false")
       << ",\n  \"l2_mean_sq\": " << lwl::format_full(l2)
       << ",\n  \"besicovitch\": " << lwl::format_full(bes.value)
       << ",\n  \"besicovitch_converged\": " << (bes.converged ? "true" : "false")
       << ",\n  \"besicovitch_exact_period\": " << (bes.exact_period ? "true" : "false")
       << "\n}\n";
  } else {
    os << "N = " << s.size() << "\n";
    os << "l1 mean over [-T/2, T/2], T=" << opt.T << ": " << lwl::format_full(l1.value / opt.T)
       << " (" << flag(l1.converged) << ")\n";
    os << "l2 mean square (exact Gram): " << lwl::format_full(l2) << "\n";
    os << "long-run mean: " << lwl::format_full(bes.value) << " ("
       << (bes.exact_period ? "exact one-period mean" : flag(bes.converged)) << ")\n";
    if (!bes.exact_period) {
      os << "  ladder:";
      for (const auto& [T, v] : bes.trace) os << " (" << T << ", " << lwl::format_full(v) << ")";
      os << "\n";
    }
  }
  return (l1.converged && (bes.converged || bes.exact_period)) ? 0 : 1;
}

int run_certify(const Options& opt) {
  lwl::ExponentialSum s = lwl::load_problem(opt.input);
  if (opt.normalize) s = lwl::normalize_affine(s).sum;

  lwl::CertifyConfig cfg;
  cfg.delta = opt.delta;
  cfg.p = opt.p;
  cfg.eps = opt.eps;
  cfg.eta = opt.eta;
  cfg.witness.M = opt.grid;
  cfg.quad.rel_tol = opt.tol;
  const lwl::CertificateReport report = lwl::certify_lower_bound(s, cfg);

  Sink sink(opt.out);
  sink.stream() << lwl::report_to_json(report) << "\n";
  if (!opt.out.empty() || opt.format != "json") {
    std::cerr << "certified: weighted coefficient sum " << lwl::format_full(report.S_harmonic)
              << " <= " << lwl::format_full(report.certified_constant) << " * "
              << lwl::format_full(report.measured_norm) << " (interval mean); "
              << (report.pass ? "PASS" : "FAIL") << "\n";
  }
  return report.pass ? 0 : 1;
}

int run_check(const Options& opt) {
  lwl::SuiteConfig cfg;
  cfg.seed = opt.seed;
  cfg.count = opt.count;
  cfg.only = opt.only;
  cfg.T = opt.T == 72.0 ? 0.0 : opt.T;  // explicit --T overrides the preset sweep
  const auto results = lwl::run_check_suite(cfg);

  Sink sink(opt.out);
  std::ostream& os = sink.stream();
  os << lwl::check_csv_header() << "\n";
  int failures = 0;
  for (const auto& r : results) {
    os << lwl::check_csv_row(r) << "\n";
    if (!r.pass) ++failures;
  }
  if (failures > 0)
    std::cerr << failures << " of " << results.size() << " checks failed\n";
  else
    std::cerr << "all " << results.size() << " checks passed\n";
  return failures == 0 ? 0 : 1;
}

int run_optimize(const Options& opt) {
  Sink sink(opt.out);
  std::ostream& os = sink.stream();
  const auto describe = [&os](const char* label, const lwl::OptimizeResult& r) {
    os << label << ": min = " << lwl::format_full(r.value) << " at eps = "
       << lwl::format_full(r.eps) << ", delta = " << lwl::format_full(r.delta) << " ("
       << r.iterations << " iterations, " << flag(r.converged) << ")\n";
  };

  lwl::OptimizeConfig cfg;
  cfg.grid_density = opt.grid_density;
  if (opt.objective == "general" || opt.objective == "both")
    describe("general", lwl::optimize_objective(lwl::ObjectiveKind::General, cfg));
  if (opt.objective == "unimodular" || opt.objective == "both")
    describe("unimodular", lwl::optimize_objective(lwl::ObjectiveKind::Unimodular, cfg));

  if (!opt.dump.empty()) {
    std::ofstream grid(opt.dump);
    if (!grid) throw std::runtime_error("cannot open output file: " + opt.dump);
    grid << "eps,delta,general,unimodular\n";
    for (int i = 1; i < opt.grid_density; ++i) {
      const double eps = static_cast<double>(i) / opt.grid_density;
      for (int j = 0; j <= opt.grid_density; ++j) {
        const double delta =
            2.0 * std::pow(100.0, static_cast<double>(j) / opt.grid_density);
        grid << lwl::format_full(eps) << "," << lwl::format_full(delta) << ","
             << lwl::format_full(lwl::objective_general(eps, delta)) << ","
             << lwl::format_full(lwl::objective_unimodular(eps, delta)) << "\n";
      }
    }
  }
  return 0;
}

int run_dirichlet(const Options& opt) {
  const lwl::ExponentialSum s = lwl::load_problem(opt.input);
  if (s.size() > 8) {
    std::cerr << "error: the denominator scan supports at most 8 frequencies\n";
    return 1;
  }
  const auto approx = lwl::dirichlet_approx(s.lambdas, opt.dio_eps, opt.mcap);

  Sink sink(opt.out);
  std::ostream& os = sink.stream();
  if (!approx.found) {
    os << "no denominator up to " << opt.mcap << " reaches eps = " << opt.dio_eps
       << "; best M = " << approx.best_M
       << " with quality = " << lwl::format_full(approx.best_quality) << "\n";
    return 1;
  }
  os << "M = " << approx.M << "\n";
  os << "numerators =";
  for (auto n : approx.numerators) os << " " << n;
  os << "\n";
  os << "quality = " << lwl::format_full(approx.quality) << " (< eps = " << opt.dio_eps << ")\n";
  double coeff_mass = 0.0;
  for (const auto& a : s.coeffs) coeff_mass += std::abs(a);
  os << "pointwise gap sup |Phi - Psi| = " << lwl::format_full(lwl::periodization_gap(s, approx))
     << " (bound " << lwl::format_full(2.0 * std::numbers::pi * opt.dio_eps * coeff_mass)
     << ")\n";
  const auto cmp = lwl::periodic_comparison_check(s, approx);
  os << lwl::check_csv_header() << "\n" << lwl::check_csv_row(cmp) << "\n";
  return cmp.pass ? 0 : 1;
}

int run_curve(const Options& opt) {
  const lwl::ExponentialSum s = lwl::load_problem(opt.input);
  lwl::QuadratureConfig quad;
  quad.rel_tol = opt.tol;

  Sink sink(opt.out);
  std::ostream& os = sink.stream();
  os << "t,re,im\n";
  for (int i = 0; i <= opt.samples; ++i) {
    const double t = opt.T * static_cast<double>(i) / opt.samples;
    const lwl::cplx v = lwl::eval_sum(s, t);
    os << lwl::format_full(t) << "," << lwl::format_full(v.real()) << ","
       << lwl::format_full(v.imag()) << "\n";
  }

  const auto length = lwl::l1_norm_interval(lwl::derivative_sum(s), opt.T, quad, 0.5 * opt.T);
  std::cerr << "arc length over [0, " << opt.T << "] = " << lwl::format_full(length.value)
            << " (" << flag(length.converged) << ")\n";
  if (opt.T >= 72.0) {
    const auto check = lwl::curve_length_check(s, opt.T, opt.as_printed, quad);
    std::cerr << "certified lower bound: " << lwl::format_full(check.rhs) << " ("
              << check.name << ", " << (check.pass ? "holds" : "VIOLATED") << ")\n";
    return length.converged && check.pass ? 0 : 1;
  }
  return length.converged ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified L1 lower bounds for non-harmonic trigonometric polynomials"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    auto* in = cmd->add_option("--input", opt.input, "problem file (JSON)");
    if (needs_input) in->required();
    cmd->add_option("--out", opt.out, "write output here instead of stdout");
    cmd->add_option("--tol", opt.tol, "quadrature relative tolerance");
    cmd->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* eval = app.add_subcommand("eval", "interval and long-run norms of a problem file");
  add_common(eval, true);
  eval->add_option("--T", opt.T, "interval length");

  auto* certify = app.add_subcommand("certify", "run the full lower-bound certificate");
  add_common(certify, true);
  certify->add_option("--p", opt.p, "window shape (0 = smallest admissible)");
  certify->add_option("--delta", opt.delta, "block growth factor (integer >= 2)");
  certify->add_option("--eps", opt.eps, "substitution budget in (0,1)");
  certify->add_option("--eta", opt.eta, "damping rate (0 = 0.999 x admissible)");
  certify->add_option("--grid", opt.grid, "witness grid size, power of two (0 = auto)");
  certify->add_flag("--normalize", opt.normalize, "apply the affine unit-gap normalization first");

  auto* check = app.add_subcommand("check", "seeded inequality suite, CSV output");
  add_common(check, false);
  check->add_option("--seed", opt.seed, "suite seed");
  check->add_option("--n", opt.count, "instances per randomized family");
  check->add_option("--only", opt.only, "substring filter on check names");
  check->add_option("--T", opt.T, "interval length override");

  auto* optimize = app.add_subcommand("optimize", "minimize the asymptotic constants");
  add_common(optimize, false);
  optimize->add_option("--objective", opt.objective, "general, unimodular, or both")
      ->check(CLI::IsMember({"general", "unimodular", "both"}));
  optimize->add_option("--grid-density", opt.grid_density, "coarse scan density");
  optimize->add_option("--dump", opt.dump, "write the objective grid as CSV");

  auto* dirichlet = app.add_subcommand("dirichlet", "simultaneous rational approximation");
  add_common(dirichlet, true);
  dirichlet->add_option("--eps", opt.dio_eps, "approximation quality target in (0, 1/2)");
  dirichlet->add_option("--mcap", opt.mcap, "largest denominator to scan");

  auto* curve = app.add_subcommand("curve", "trace samples and arc length");
  add_common(curve, true);
  curve->add_option("--T", opt.T, "parameter range length");
  curve->add_option("--samples", opt.samples, "trace sample count");
  curve->add_flag("--as-printed", opt.as_printed, "use the looser (T/20) weighted bound");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) return run_eval(opt);
    if (certify->parsed()) return run_certify(opt);
    if (check->parsed()) return run_check(opt);
    if (optimize->parsed()) return run_optimize(opt);
    if (dirichlet->parsed()) return run_dirichlet(opt);
    if (curve->parsed()) return run_curve(opt);
  } catch (const lwl::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lwl::HypothesisViolated& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
