#pragma once

namespace lwl {

// 1/(1 - e^{-eta}): uniform bound on the damped recursion that assembles the
// witness, and the envelope factor appearing in every certified constant.
double recursion_envelope(double eta);

// Large-p limit of the admissible damping rate:
// (delta-1)(sqrt(delta)-1) eps / (sqrt(2) delta).
double asymptotic_eta(double eps, double delta);

// Asymptotic constants to minimize over (eps, delta).  General coefficients:
// (delta-1) / ((1-eps)(1 - e^{-eta_inf})); coefficients bounded away from 0
// trade (delta-1) for ln(delta).
double objective_general(double eps, double delta);
double objective_unimodular(double eps, double delta);

enum class ObjectiveKind { General, Unimodular };

struct OptimizeConfig {
  int grid_density = 160;     // points per axis in the coarse scan
  int max_iterations = 10000;
  double simplex_tol = 1e-8;  // simplex diameter
  double value_tol = 1e-10;   // best-vertex value change
  // Optional scan window; 0 keeps the default range (eps in (0.01, 0.99),
  // delta from 1.01 general / 2.0 unimodular up to 200, log-spaced).
  double eps_lo = 0.0, eps_hi = 0.0;
  double delta_lo = 0.0, delta_hi = 0.0;
};

struct OptimizeResult {
  double eps = 0.0;
  double delta = 0.0;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Deterministic coarse grid scan (eps linear in (0.01, 0.99), delta
// log-spaced up to 200) followed by Nelder-Mead from the best cell.
OptimizeResult optimize_objective(ObjectiveKind kind, const OptimizeConfig& cfg = {});

// Largest damping rate for which the witness substitution error stays within
// eps delta^{-j} at window shape p; clamped to (0, 1).
double eta_admissible(int p, int delta, double eps);

// Fully assembled constant C(p, delta, eps, eta) in
//   sum_k |a_k|/(k+1)  <=  C * (1/|I_p|) int_{I_p} |sum|
// for unit-gap frequencies.  Requires eta <= eta_admissible(p, delta, eps)
// and eps < (2|I_p|-1)/(2|I_p|).
double finite_interval_constant(int p, int delta, double eps, double eta);

}  // namespace lwl
