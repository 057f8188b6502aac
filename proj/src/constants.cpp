#include "lwl/constants.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lwl {

namespace {

constexpr double kHuge = 1e300;

double objective(ObjectiveKind kind, double eps, double delta) {
  const bool in_domain = eps > 0.0 && eps < 1.0 &&
                         (kind == ObjectiveKind::General ? delta > 1.0 : delta >= 2.0);
  if (!in_domain) return kHuge;
  const double dent = -std::expm1(-asymptotic_eta(eps, delta));  // 1 - e^{-eta_inf}
  const double numer = kind == ObjectiveKind::General ? delta - 1.0 : std::log(delta);
  return numer / ((1.0 - eps) * dent);
}

}  // namespace

double recursion_envelope(double eta) {
  if (!(eta > 0.0)) throw std::invalid_argument("recursion_envelope: eta must be positive");
  return 1.0 / (-std::expm1(-eta));
}

double asymptotic_eta(double eps, double delta) {
  return (delta - 1.0) * (std::sqrt(delta) - 1.0) * eps / (std::numbers::sqrt2 * delta);
}

double objective_general(double eps, double delta) {
  return objective(ObjectiveKind::General, eps, delta);
}

double objective_unimodular(double eps, double delta) {
  return objective(ObjectiveKind::Unimodular, eps, delta);
}

OptimizeResult optimize_objective(ObjectiveKind kind, const OptimizeConfig& cfg) {
  if (cfg.grid_density < 50)
    throw std::invalid_argument("optimize_objective: grid density must be >= 50");

  const double delta_lo =
      cfg.delta_lo > 0.0 ? cfg.delta_lo : (kind == ObjectiveKind::General ? 1.01 : 2.0);
  const double delta_hi = cfg.delta_hi > 0.0 ? cfg.delta_hi : 200.0;
  const double eps_lo = cfg.eps_lo > 0.0 ? cfg.eps_lo : 0.01;
  const double eps_hi = cfg.eps_hi > 0.0 ? cfg.eps_hi : 0.99;
  auto f = [&](double e, double d) { return objective(kind, e, d); };

  double best_e = 0.5 * (eps_lo + eps_hi), best_d = delta_lo, best_v = kHuge;
  for (int i = 0; i < cfg.grid_density; ++i) {
    const double e = eps_lo + (eps_hi - eps_lo) * i / (cfg.grid_density - 1);
    for (int j = 0; j < cfg.grid_density; ++j) {
      const double d = delta_lo * std::pow(delta_hi / delta_lo,
                                           static_cast<double>(j) / (cfg.grid_density - 1));
      const double v = f(e, d);
      if (v < best_v) {
        best_v = v;
        best_e = e;
        best_d = d;
      }
    }
  }

  // Nelder-Mead from the best grid cell; out-of-domain points evaluate huge,
  // which the simplex simply contracts away from.
  using Pt = std::array<double, 2>;
  std::array<Pt, 3> vx = {Pt{best_e, best_d},
                          Pt{std::min(0.99, best_e + 0.02), best_d},
                          Pt{best_e, best_d * 1.05}};
  std::array<double, 3> fv;
  for (int i = 0; i < 3; ++i) fv[i] = f(vx[i][0], vx[i][1]);

  OptimizeResult out;
  int it = 0;
  for (; it < cfg.max_iterations; ++it) {
    std::array<int, 3> ord = {0, 1, 2};
    std::sort(ord.begin(), ord.end(), [&](int a, int b) { return fv[a] < fv[b]; });
    const int lo = ord[0], mid = ord[1], hi = ord[2];

    double diam = 0.0;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        diam = std::max(diam, std::hypot(vx[a][0] - vx[b][0], vx[a][1] - vx[b][1]));
    if (diam < cfg.simplex_tol || std::abs(fv[hi] - fv[lo]) < cfg.value_tol) {
      out.converged = true;
      break;
    }

    const Pt cen = {0.5 * (vx[lo][0] + vx[mid][0]), 0.5 * (vx[lo][1] + vx[mid][1])};
    auto blend = [&](double t) {
      return Pt{cen[0] + t * (cen[0] - vx[hi][0]), cen[1] + t * (cen[1] - vx[hi][1])};
    };
    const Pt refl = blend(1.0);
    const double fr = f(refl[0], refl[1]);
    if (fr < fv[lo]) {
      const Pt exp_pt = blend(2.0);
      const double fe = f(exp_pt[0], exp_pt[1]);
      if (fe < fr) {
        vx[hi] = exp_pt;
        fv[hi] = fe;
      } else {
        vx[hi] = refl;
        fv[hi] = fr;
      }
    } else if (fr < fv[mid]) {
      vx[hi] = refl;
      fv[hi] = fr;
    } else {
      const Pt con = blend(fr < fv[hi] ? 0.5 : -0.5);
      const double fc = f(con[0], con[1]);
      if (fc < std::min(fr, fv[hi])) {
        vx[hi] = con;
        fv[hi] = fc;
      } else {
        for (int a = 0; a < 3; ++a) {
          if (a == lo) continue;
          vx[a] = {0.5 * (vx[a][0] + vx[lo][0]), 0.5 * (vx[a][1] + vx[lo][1])};
          fv[a] = f(vx[a][0], vx[a][1]);
        }
      }
    }
  }

  const int lo = static_cast<int>(std::min_element(fv.begin(), fv.end()) - fv.begin());
  out.eps = vx[lo][0];
  out.delta = vx[lo][1];
  out.value = fv[lo];
  out.iterations = it;
  return out;
}

double eta_admissible(int p, int delta, double eps) {
  if (p < 2) throw std::invalid_argument("eta_admissible: p must be >= 2");
  if (delta < 2) throw std::invalid_argument("eta_admissible: delta must be >= 2");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eta_admissible: eps in (0,1)");
  const double d = delta;
  const double ip = static_cast<double>(p) * p + p;
  const double tail = 2.0 * d * std::sqrt(2.0 * (ip + 1.0)) * (d - 1.0) /
                      (std::exp(p - 1.5) * std::pow(std::numbers::pi / 2.0, p));
  const double main_term = std::numbers::sqrt2 * d * d *
                           (static_cast<double>(p) * p + p + 1.0) /
                           (static_cast<double>(p) * p);
  const double eta = eps * (std::sqrt(d) - 1.0) * (d - 1.0) / (tail + main_term);
  return std::clamp(eta, std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0));
}

double finite_interval_constant(int p, int delta, double eps, double eta) {
  if (p < 2) throw std::invalid_argument("finite_interval_constant: p must be >= 2");
  if (delta < 2) throw std::invalid_argument("finite_interval_constant: delta must be >= 2");
  const double ip = static_cast<double>(p) * p + p;
  if (!(eps > 0.0 && eps < (2.0 * ip - 1.0) / (2.0 * ip)))
    throw std::invalid_argument("finite_interval_constant: eps out of range");
  if (!(eta > 0.0) || eta > eta_admissible(p, delta, eps))
    throw std::invalid_argument("finite_interval_constant: eta above admissible rate");

  const double plateau = ip / (static_cast<double>(p) * p);
  const double widen = 2.0 * ip / (2.0 * ip - 1.0);
  const double residual_loss = 1.0 - widen * eps;
  return (delta - 1.0) * plateau * widen * recursion_envelope(eta) / residual_loss;
}

}  // namespace lwl
