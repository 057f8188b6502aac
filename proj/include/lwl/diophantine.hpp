#pragma once

#include <cstdint>
#include <vector>

#include "lwl/inequalities.hpp"
#include "lwl/model.hpp"
#include "lwl/quadrature.hpp"

namespace lwl {

// Simultaneous rational approximation lambda_k ~ numerators[k]/M with
// |lambda_k - numerators[k]/M| < eps/M for every k.
struct RationalApproximation {
  bool found = false;
  std::int64_t M = 0;
  std::vector<std::int64_t> numerators;
  double quality = 0.0;  // max_k M |lambda_k - numerators[k]/M|, < eps when found
  double eps_requested = 0.0;

  // Best denominator seen during the scan, reported when nothing met eps.
  std::int64_t best_M = 0;
  double best_quality = 0.0;
};

// Scans M = 1..M_cap with numerators[k] = round(M lambda_k) and returns the
// first M whose quality beats eps; the box principle guarantees a hit for
// M_cap >= ceil(1/eps)^N.  found=false reports the best attempt instead.
RationalApproximation dirichlet_approx(const std::vector<double>& lambdas, double eps,
                                       std::int64_t M_cap);

// sup over [-M/2, M/2] of |Phi - Psi| where Psi replaces each frequency by
// numerators[k]/M.  Sampled at 64 points per unit length, then refined x4
// around the coarse maximum; bounded by 2 pi eps sum |a_k|.
double periodization_gap(const ExponentialSum& s, const RationalApproximation& approx);

// Periodization comparison at denominator scale M:
//   (1/M) int_{-M/2}^{M/2} |Phi|  >=  (1/M) int |Psi| - 2 pi eps sum |a_k|.
CheckResult periodic_comparison_check(const ExponentialSum& s,
                                      const RationalApproximation& approx,
                                      const QuadratureConfig& cfg = {},
                                      double tol = kCheckTol);

}  // namespace lwl
