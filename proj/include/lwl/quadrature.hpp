#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "lwl/model.hpp"

namespace lwl {

struct QuadratureConfig {
  double rel_tol = 1e-8;
  double panel_width_cap = 0.5;
  int max_refinements = 12;
};

struct IntegralResult {
  double value = 0.0;
  bool converged = false;
  int refinements = 0;  // panel-count doublings performed
};

// Pointwise value sum_k a_k exp(2 i pi lambda_k t), compensated summation.
cplx eval_sum(const ExponentialSum& s, double t);

// Composite 16-node Gauss-Legendre over [a, b].  Starts from panels no wider
// than panel_width_cap and doubles the panel count until two successive
// passes agree to rel_tol; converged=false if the refinement budget runs out
// (the last value is still returned).
IntegralResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                  double b, const QuadratureConfig& cfg = {});

// int_{center-T/2}^{center+T/2} |sum|.  Same refinement policy; the panel
// width is additionally capped by 1/(8 (|lambda_first| + |lambda_last| + 1))
// so each panel sees a small fraction of the fastest oscillation.
IntegralResult l1_norm_interval(const ExponentialSum& s, double T,
                                const QuadratureConfig& cfg = {}, double center = 0.0);

// Exact int_{-T/2}^{T/2} |sum|^2 via the Gram form
//   sum_{k,l} a_k conj(a_l) K(lambda_k - lambda_l),
// K(0) = T, K(mu) = sin(pi mu T)/(pi mu).  No quadrature involved.
double l2_norm_sq_interval_exact(const ExponentialSum& s, double T);

struct BesicovitchConfig {
  double rel_tol = 1e-6;  // agreement between successive ladder values
  double T0 = 64.0;
  int max_doublings = 8;
  // Denominators up to this bound are probed; a hit makes the mean exact
  // (the sum is periodic, so one period already carries the limit).
  int period_denominator_cap = 64;
  QuadratureConfig quad;
};

struct BesicovitchResult {
  double value = 0.0;
  bool converged = false;
  bool exact_period = false;
  std::vector<std::pair<double, double>> trace;  // (T, mean at T)
};

// Long-run mean (1/T) int_{-T/2}^{T/2} |sum| estimated on the doubling ladder
// T = T0, 2 T0, ...  Reports the value at the largest T reached together with
// a convergence flag; never extrapolates beyond computed values.
BesicovitchResult besicovitch_l1(const ExponentialSum& s, const BesicovitchConfig& cfg = {});

// Fourier coefficients of samples on a symmetric interval [-L/2, L/2] taken
// at t_m = -L/2 + m L/M:  c_s = (1/M) sum_m g_m exp(-2 i pi s t_m / L).
// Bin b holds frequency b for b < M/2 and b - M otherwise.
struct FourierCoefficients {
  int M = 0;
  double interval_length = 0.0;
  std::vector<cplx> c;  // size M, bin-indexed
  bool aliasing_suspected = false;

  cplx at(int s) const;  // signed frequency, -M/2 <= s < M/2
};

// M must be a power of two >= 256.  aliasing_suspected is set when the top
// octave (|s| >= M/4) carries more than 1e-6 of the total energy.
FourierCoefficients fourier_coeffs_from_samples(const std::vector<cplx>& samples,
                                                double interval_length);
FourierCoefficients fourier_coeffs_on_interval(const std::function<cplx(double)>& f,
                                               double interval_length, int M);

// Inverse of the convention above: values v_m = sum_b d_b exp(2 i pi b t_m / L)
// with the same bin meaning (unscaled synthesis on the same grid).
std::vector<cplx> synthesize_on_grid(const std::vector<cplx>& bins, double interval_length);

}  // namespace lwl
