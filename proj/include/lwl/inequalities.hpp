#pragma once

#include <string>
#include <vector>

#include "lwl/model.hpp"
#include "lwl/quadrature.hpp"

namespace lwl {

// Outcome of one inequality check.  margin is the slack of the inequality in
// its natural direction (rhs - lhs for upper bounds, lhs - rhs for lower
// bounds), so pass <=> margin >= -tol uniformly for both kinds.
struct CheckResult {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool pass = false;
  std::string details;
};

constexpr double kCheckTol = 1e-7;

// |sum_{k != l} z_k conj(z_l)/(lambda_k - lambda_l)| <= pi sum |z_k|^2 for
// frequencies at mutual distance >= 1.  A gap violation is noted in details
// but the bilinear form is still evaluated.
CheckResult hilbert_check(const std::vector<cplx>& z, const std::vector<double>& lambdas,
                          double tol = kCheckTol);

// Sharp lower constant for (1/T) int_{-T/2}^{T/2} |sum|^2 over unit-gap sums:
// (pi^2/8)(T^2-1)/T^3 on 1 < T <= 2, 3 pi^2/64 for T >= 2.
double ingham_l2_constant(double T);

// (1/T) int_{-T/2}^{T/2} |sum|^2 >= C(T) sum |a_k|^2.
CheckResult ingham_l2_check(const ExponentialSum& s, double T, bool use_exact_gram = true,
                            const QuadratureConfig& cfg = {}, double tol = kCheckTol);

// (1/T) int_{-T/2}^{T/2} |sum| >= (2/pi)((T^2-1)/T^2) max |a_k|.
CheckResult ingham_linfty_check(const ExponentialSum& s, double T,
                                const QuadratureConfig& cfg = {}, double tol = kCheckTol);

// int_{-1/2}^{1/2} |sum_{k=-N}^{N} e^{2 i pi k t}| dt through the closed form
// |sin((2N+1) pi t)/sin(pi t)|.
double dirichlet_kernel_l1(int N, const QuadratureConfig& cfg = {});

// The three headline lower bounds for unit-gap sums.
enum class LowerBoundVariant {
  BesicovitchHarmonic,  // long-run mean >= (1/26) sum |a_k|/(k+1)
  UnimodularLog,        // long-run mean >= (4/pi^3) ln N  when all |a_k| >= 1
  FiniteWindow,         // (1/T) int   >= (1/122) sum |a_k|/(k+1) for T >= 72
};

// T is used by FiniteWindow only.  Throws HypothesisViolated when the
// variant's hypotheses (gaps, |a_k| >= 1, T >= 72) fail.
CheckResult l1_lower_bound_check(const ExponentialSum& s, LowerBoundVariant variant,
                                 double T = 72.0, const BesicovitchConfig& cfg = {},
                                 double tol = kCheckTol);

// Termwise derivative: coefficients 2 i pi lambda_k a_k on the same frequencies.
ExponentialSum derivative_sum(const ExponentialSum& s);

// Arc length of t -> sum over [0, T] against the weighted frequency sum:
// int_0^T |P'(t)| dt >= (T/122) sum |lambda_k| |a_k|/(k+1).  The flag switches
// the right-hand side to the looser printed form (T/20) sum |lambda_k||a_k|/k.
CheckResult curve_length_check(const ExponentialSum& s, double T, bool as_printed = false,
                               const QuadratureConfig& cfg = {}, double tol = kCheckTol);

// Ingham's kernel pair: H = cos(pi s) on [-1/2, 1/2] and the companion kernel
// G_T with transform pi^2 (T^2 - 4 xi^2) H_hat(xi)^2.
double ingham_H_hat(double xi);
double ingham_G_hat(double T, double xi);
// Time-domain peak G_T(0) = (pi^2/2)(T^2 - 1), also the integral of G_hat.
double ingham_G0(double T);

}  // namespace lwl
