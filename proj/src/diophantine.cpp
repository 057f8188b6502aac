#include "lwl/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace lwl {

namespace {

constexpr double kPi = std::numbers::pi;

ExponentialSum periodized(const ExponentialSum& s, const RationalApproximation& approx) {
  // Rounding can merge neighbours; coefficients of merged frequencies add, so
  // the surrogate stays a valid (strictly increasing) sum.
  std::vector<double> freqs;
  std::vector<cplx> coeffs;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const double f =
        static_cast<double>(approx.numerators[k]) / static_cast<double>(approx.M);
    if (!freqs.empty() && f == freqs.back())
      coeffs.back() += s.coeffs[k];
    else {
      freqs.push_back(f);
      coeffs.push_back(s.coeffs[k]);
    }
  }
  return ExponentialSum(freqs, coeffs);
}

}  // namespace

RationalApproximation dirichlet_approx(const std::vector<double>& lambdas, double eps,
                                       std::int64_t M_cap) {
  if (!(eps > 0.0 && eps < 0.5))
    throw std::invalid_argument("dirichlet_approx: eps must lie in (0, 1/2)");
  if (M_cap < 1) throw std::invalid_argument("dirichlet_approx: M_cap must be >= 1");

  RationalApproximation best;
  best.eps_requested = eps;
  best.best_quality = std::numeric_limits<double>::infinity();

  for (std::int64_t M = 1; M <= M_cap; ++M) {
    double quality = 0.0;
    std::vector<std::int64_t> nums(lambdas.size());
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
      const double scaled = lambdas[k] * static_cast<double>(M);
      nums[k] = static_cast<std::int64_t>(std::llround(scaled));
      quality = std::max(quality, std::abs(scaled - static_cast<double>(nums[k])));
    }
    if (quality < best.best_quality) {
      best.best_quality = quality;
      best.best_M = M;
    }
    if (quality < eps) {
      best.found = true;
      best.M = M;
      best.numerators = std::move(nums);
      best.quality = quality;
      return best;
    }
  }
  return best;
}

double periodization_gap(const ExponentialSum& s, const RationalApproximation& approx) {
  if (!approx.found) throw std::invalid_argument("periodization_gap: approximation not found");
  if (approx.numerators.size() != s.size())
    throw std::invalid_argument("periodization_gap: approximation size mismatch");

  const ExponentialSum psi = periodized(s, approx);
  const double half = 0.5 * static_cast<double>(approx.M);
  const auto gap_at = [&](double t) { return std::abs(eval_sum(s, t) - eval_sum(psi, t)); };

  const std::int64_t coarse = std::max<std::int64_t>(64 * approx.M, 64);
  double sup = 0.0, argmax = -half;
  const double step = 2.0 * half / static_cast<double>(coarse);
  for (std::int64_t i = 0; i <= coarse; ++i) {
    const double t = -half + step * static_cast<double>(i);
    const double g = gap_at(t);
    if (g > sup) {
      sup = g;
      argmax = t;
    }
  }

  // Two x4 refinement rounds around the running maximum.
  double width = step;
  for (int round = 0; round < 2; ++round) {
    const double lo = std::max(-half, argmax - width);
    const double hi = std::min(half, argmax + width);
    const int fine = 256;
    for (int i = 0; i <= fine; ++i) {
      const double t = lo + (hi - lo) * static_cast<double>(i) / fine;
      const double g = gap_at(t);
      if (g > sup) {
        sup = g;
        argmax = t;
      }
    }
    width /= 4.0;
  }
  return sup;
}

CheckResult periodic_comparison_check(const ExponentialSum& s,
                                      const RationalApproximation& approx,
                                      const QuadratureConfig& cfg, double tol) {
  if (!approx.found)
    throw std::invalid_argument("periodic_comparison_check: approximation not found");
  const ExponentialSum psi = periodized(s, approx);
  const double M = static_cast<double>(approx.M);

  double coeff_mass = 0.0;
  for (const cplx& a : s.coeffs) coeff_mass += std::abs(a);

  const auto lhs = l1_norm_interval(s, M, cfg);
  const auto rhs = l1_norm_interval(psi, M, cfg);

  CheckResult r;
  r.name = "periodic-comparison";
  r.lhs = lhs.value / M;
  r.rhs = rhs.value / M - 2.0 * kPi * approx.eps_requested * coeff_mass;
  r.margin = r.lhs - r.rhs;
  r.pass = r.margin >= -tol;
  r.details = "M=" + std::to_string(approx.M) +
              " quality=" + std::to_string(approx.quality) +
              (lhs.converged && rhs.converged ? "" : "; quadrature did not converge");
  return r;
}

}  // namespace lwl
