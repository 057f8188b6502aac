#include "lwl/witness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lwl/constants.hpp"
#include "lwl/parallel.hpp"

namespace lwl {

namespace {

constexpr double kPi = std::numbers::pi;

cplx unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

// acc[m] += amp * exp(sign * 2 i pi lambda t_m) on t_m = -L/2 + m h, advanced
// by repeated multiplication with periodic refresh.
void add_wave(std::vector<cplx>& acc, cplx amp, double lambda, double L, int sign) {
  const int M = static_cast<int>(acc.size());
  const double h = L / M;
  const double om = sign * 2.0 * kPi * lambda;
  const cplx step = unit_phase(om * h);
  cplx cur = amp * unit_phase(om * (-0.5 * L));
  for (int m = 0; m < M; ++m) {
    acc[m] += cur;
    cur *= step;
    if ((m & 1023) == 1023) cur = amp * unit_phase(om * (-0.5 * L + h * (m + 1)));
  }
}

double grid_l2(const std::vector<cplx>& v, double L) {
  double acc = 0.0;
  for (const cplx& z : v) acc += std::norm(z);
  return std::sqrt(acc / static_cast<double>(v.size()) * L);
}

}  // namespace

std::vector<cplx> unimodular_phases(const std::vector<cplx>& coeffs) {
  std::vector<cplx> u(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const double mag = std::abs(coeffs[k]);
    u[k] = mag > 0.0 ? std::conj(coeffs[k]) / mag : cplx{1.0, 0.0};
  }
  return u;
}

std::vector<cplx> analytic_completion(const std::vector<cplx>& samples,
                                      double interval_length) {
  const int M = static_cast<int>(samples.size());
  const auto co = fourier_coeffs_from_samples(samples, interval_length);
  std::vector<cplx> bins(M, cplx{0.0, 0.0});
  bins[0] = co.c[0];
  for (int b = 1; b < M / 2; ++b) bins[b] = 2.0 * co.c[b];
  bins[M / 2] = co.c[M / 2];
  return synthesize_on_grid(bins, interval_length);
}

WitnessBundle build_witness(const ExponentialSum& s, const BlockScheme& scheme,
                            const Window& w, const WitnessConfig& cfg) {
  const std::int64_t N = static_cast<std::int64_t>(s.size());
  if (N < 1) throw std::invalid_argument("build_witness: empty sum");
  const std::int64_t cap = scheme.capacity();
  if (N > cap) throw std::invalid_argument("build_witness: scheme capacity below N");
  if (!(cfg.eta >= 0.0 && cfg.eta < 1.0))
    throw std::invalid_argument("build_witness: eta must lie in [0, 1)");

  WitnessBundle b;
  b.scheme = scheme;
  b.interval_length = w.length();
  b.eps = cfg.eps;
  b.eta = cfg.eta > 0.0 ? cfg.eta : 0.999 * eta_admissible(w.p(), scheme.delta, cfg.eps);
  b.envelope = recursion_envelope(b.eta);

  // Pad to full capacity with zero coefficients on a continued unit lattice;
  // the padded slots still carry phase 1 and participate in every block.
  b.lambdas.assign(s.lambdas.begin(), s.lambdas.end());
  b.coeffs.assign(s.coeffs.begin(), s.coeffs.end());
  for (std::int64_t k = N; k < cap; ++k) {
    b.lambdas.push_back(s.lambdas.back() + static_cast<double>(k - N + 1));
    b.coeffs.push_back(cplx{0.0, 0.0});
  }
  b.phases = unimodular_phases(b.coeffs);

  const int n = scheme.n;
  const double L = b.interval_length;

  int M = cfg.M != 0 ? cfg.M : (1 << 14);
  if (M < 256 || !std::has_single_bit(static_cast<unsigned>(M)))
    throw std::invalid_argument("build_witness: M must be a power of two >= 256");

  // Resolve the grid: with M unspecified, grow it until every level's sampled
  // spectrum keeps its top octave quiet (or the cap is reached).
  for (;;) {
    b.f_levels.assign(n + 1, std::vector<cplx>(M, cplx{0.0, 0.0}));
    bool aliasing = false;
    for (int j = 0; j <= n; ++j) {
      auto& fj = b.f_levels[j];
      const double inv_size = 1.0 / static_cast<double>(scheme.block_size(j));
      for (std::int64_t k = scheme.beta[j]; k < scheme.beta[j + 1]; ++k)
        add_wave(fj, b.phases[k - 1] * inv_size, b.lambdas[k - 1], L, -1);
      std::vector<cplx> mag(M);
      for (int m = 0; m < M; ++m) mag[m] = std::abs(fj[m]);
      aliasing = aliasing || fourier_coeffs_from_samples(mag, L).aliasing_suspected;
    }
    if (cfg.M == 0 && aliasing && M < (1 << 20)) {
      M <<= 1;
      continue;
    }
    b.aliasing_suspected = aliasing;
    break;
  }
  b.M = M;

  b.window_vals.resize(M);
  const double h = L / M;
  for (int m = 0; m < M; ++m) b.window_vals[m] = w.value(-0.5 * L + h * m);

  // Analytic completions: keep bin 0 once, double 1..M/2-1, keep the Nyquist
  // bin once.  On this grid the +M/2 and -M/2 waves coincide, so Re h = |f|
  // holds exactly and h carries only nonnegative frequencies.
  b.h_levels.assign(n + 1, {});
  for (int j = 0; j <= n; ++j) {
    std::vector<cplx> mag(M);
    for (int m = 0; m < M; ++m) mag[m] = std::abs(b.f_levels[j][m]);
    b.h_levels[j] = analytic_completion(mag, L);

    double ident = 0.0, nh = 0.0, nf = 0.0;
    for (int m = 0; m < M; ++m) {
      ident = std::max(ident, std::abs(b.h_levels[j][m].real() - mag[m].real()));
      nh += std::norm(b.h_levels[j][m]);
      nf += std::norm(mag[m]);
    }
    b.completion_identity_err = std::max(b.completion_identity_err, ident);
    if (nf > 0.0)
      b.completion_l2_ratio = std::max(b.completion_l2_ratio, std::sqrt(nh / nf));
  }

  b.U.assign(M, cplx{0.0, 0.0});
  for (int j = 0; j <= n; ++j)
    for (int m = 0; m < M; ++m) b.U[m] += b.f_levels[j][m];

  // Damped assembly, tracking the envelope along the way.
  std::vector<cplx> F = b.f_levels[0];
  auto sup_abs = [](const std::vector<cplx>& v) {
    double sup = 0.0;
    for (const cplx& z : v) sup = std::max(sup, std::abs(z));
    return sup;
  };
  b.sup_intermediate = sup_abs(F);
  for (int j = 1; j <= n; ++j) {
    for (int m = 0; m < M; ++m)
      F[m] = F[m] * std::exp(-b.eta * b.h_levels[j][m]) + b.f_levels[j][m];
    b.sup_intermediate = std::max(b.sup_intermediate, sup_abs(F));
  }
  b.V = std::move(F);
  b.sup_V = sup_abs(b.V);

  // Explicit expansion V = sum_j f_j exp(-eta (h_{j+1} + ... + h_n)).
  {
    std::vector<cplx> suffix(M, cplx{0.0, 0.0});
    std::vector<cplx> expanded = b.f_levels[n];
    for (int j = n - 1; j >= 0; --j) {
      for (int m = 0; m < M; ++m) {
        suffix[m] += b.h_levels[j + 1][m];
        expanded[m] += b.f_levels[j][m] * std::exp(-b.eta * suffix[m]);
      }
    }
    double gap = 0.0;
    for (int m = 0; m < M; ++m) gap = std::max(gap, std::abs(expanded[m] - b.V[m]));
    b.recursion_expansion_gap = gap;
  }

  // Structure of the damping factors e^{-eta H_{j,k}}: suffix-sum norms
  // against the geometric bound, contraction of e^{-eta H}-1, and absence of
  // negative-frequency content.
  const double delta = scheme.delta;
  for (int j = 0; j < n; ++j) {
    std::vector<cplx> H(M, cplx{0.0, 0.0});
    for (int k = j + 1; k <= n; ++k) {
      for (int m = 0; m < M; ++m) H[m] += b.h_levels[k][m];
      const double nH = grid_l2(H, L);
      const double bound = std::sqrt(2.0 * (L + 1.0)) * std::pow(delta, -0.5 * j) /
                           (std::sqrt(delta) - 1.0);
      b.suffix_norm_ratio = std::max(b.suffix_norm_ratio, nH / bound);

      std::vector<cplx> g1(M);
      for (int m = 0; m < M; ++m) g1[m] = std::exp(-b.eta * H[m]) - 1.0;
      if (nH > 0.0)
        b.damping_norm_ratio =
            std::max(b.damping_norm_ratio, grid_l2(g1, L) / (b.eta * nH));
      const auto cg = fourier_coeffs_from_samples(g1, L);
      for (int bb = M / 2 + 1; bb < M; ++bb)
        b.analytic_leak = std::max(b.analytic_leak, std::abs(cg.c[bb]));
    }
  }
  b.analytic_structure_ok = b.analytic_leak <= 1e-8;
  return b;
}

double window_leakage_bound(const BlockScheme& scheme, const Window& w,
                            const std::vector<double>& padded_lambdas) {
  const std::int64_t cap = scheme.capacity();
  if (static_cast<std::int64_t>(padded_lambdas.size()) != cap)
    throw std::invalid_argument("window_leakage_bound: lambdas must fill the scheme");

  std::vector<double> inv_size(cap), level_scale(cap);
  std::vector<int> level(cap);
  for (std::int64_t k = 1; k <= cap; ++k) {
    const int j = scheme.level_of(k);
    level[k - 1] = j;
    inv_size[k - 1] = 1.0 / static_cast<double>(scheme.block_size(j));
    level_scale[k - 1] = std::pow(static_cast<double>(scheme.delta), j);
  }

  double worst = 0.0;
  for (std::int64_t l = 0; l < cap; ++l) {
    double acc = 0.0;
    for (std::int64_t k = 0; k < cap; ++k) {
      if (k == l) continue;
      acc += inv_size[k] * std::abs(w.transform(padded_lambdas[k] - padded_lambdas[l]));
    }
    worst = std::max(worst, level_scale[l] * acc);
  }
  return worst;
}

double extraction_residual(const WitnessBundle& b, const Window& w) {
  const std::int64_t cap = b.scheme.capacity();
  const double L = b.interval_length;
  double worst = 0.0;
  for (std::int64_t l = 0; l < cap; ++l) {
    cplx inner{0.0, 0.0};
    for (std::int64_t k = 0; k < cap; ++k) {
      const int j = b.scheme.level_of(k + 1);
      inner += b.phases[k] * w.transform(b.lambdas[k] - b.lambdas[l]) /
               static_cast<double>(b.scheme.block_size(j));
    }
    inner /= L;
    const int jl = b.scheme.level_of(l + 1);
    const double dj = std::pow(static_cast<double>(b.scheme.delta), jl);
    worst = std::max(worst, 2.0 * L * dj * std::abs(inner - b.phases[l] / dj));
  }
  return worst;
}

double substitution_residual(const WitnessBundle& b) {
  const std::int64_t cap = b.scheme.capacity();
  const int M = b.M;
  const double L = b.interval_length;

  std::vector<cplx> diff(M);
  for (int m = 0; m < M; ++m) diff[m] = (b.U[m] - b.V[m]) * b.window_vals[m];

  std::vector<double> rho(cap, 0.0);
  const int chunks = static_cast<int>(std::min<std::int64_t>(cap, 64));
  run_chunks(chunks, [&](int c) {
    const std::int64_t l0 = cap * c / chunks, l1 = cap * (c + 1) / chunks;
    std::vector<cplx> wave(M);
    for (std::int64_t l = l0; l < l1; ++l) {
      std::fill(wave.begin(), wave.end(), cplx{0.0, 0.0});
      add_wave(wave, cplx{1.0, 0.0}, b.lambdas[l], L, +1);
      cplx acc{0.0, 0.0};
      for (int m = 0; m < M; ++m) acc += diff[m] * wave[m];
      rho[l] = std::abs(acc) / static_cast<double>(M);
    }
  });

  double worst = 0.0;
  for (std::int64_t l = 0; l < cap; ++l) {
    const int jl = b.scheme.level_of(l + 1);
    worst = std::max(worst, rho[l] * std::pow(static_cast<double>(b.scheme.delta), jl));
  }
  return worst;
}

double duality_gap(const WitnessBundle& b, const ExponentialSum& original, double block_sum) {
  if (!(block_sum > 0.0)) return 0.0;
  const int M = b.M;
  std::vector<cplx> phi_sum(M, cplx{0.0, 0.0});
  for (std::size_t k = 0; k < original.size(); ++k)
    add_wave(phi_sum, original.coeffs[k], original.lambdas[k], b.interval_length, +1);
  cplx acc{0.0, 0.0};
  for (int m = 0; m < M; ++m) acc += b.U[m] * phi_sum[m] * b.window_vals[m];
  acc /= static_cast<double>(M);
  return std::abs(acc - block_sum) / block_sum;
}

CertificateReport certify_lower_bound(const ExponentialSum& s, const CertifyConfig& cfg) {
  if (s.size() == 0) throw std::invalid_argument("certify_lower_bound: empty sum");
  if (!validate_gap(s, 1.0 - 1e-12))
    throw HypothesisViolated("certify_lower_bound: frequency gaps fall below 1");
  if (cfg.delta < 2) throw std::invalid_argument("certify_lower_bound: delta must be >= 2");

  const int p_min = min_admissible_p(cfg.delta);
  const int p = cfg.p != 0 ? cfg.p : p_min;
  if (p < p_min)
    throw HypothesisViolated("certify_lower_bound: window shape p = " + std::to_string(p) +
                             " below admissible minimum " + std::to_string(p_min));
  const Window w(p);
  const double L = w.length();

  if (!(cfg.eps > 0.0 && cfg.eps < (2.0 * L - 1.0) / (2.0 * L)))
    throw std::invalid_argument("certify_lower_bound: eps out of range");
  const double eta_cap = eta_admissible(p, cfg.delta, cfg.eps);
  const double eta = cfg.eta > 0.0 ? cfg.eta : 0.999 * eta_cap;
  if (eta > eta_cap)
    throw HypothesisViolated("certify_lower_bound: eta exceeds admissible rate " +
                             std::to_string(eta_cap));

  const BlockScheme scheme = build_blocks(cfg.delta, static_cast<std::int64_t>(s.size()));

  WitnessConfig wc = cfg.witness;
  wc.eta = eta;
  wc.eps = cfg.eps;
  const WitnessBundle bundle = build_witness(s, scheme, w, wc);
  const WeightedSums sums = weighted_sums(s, scheme);

  CertificateReport rep;
  rep.p = p;
  rep.delta = cfg.delta;
  rep.eps = cfg.eps;
  rep.eta = eta;
  rep.M = bundle.M;
  rep.S_block = sums.block;
  rep.S_harmonic = sums.harmonic;
  rep.envelope = bundle.envelope;
  rep.witness_sup = bundle.sup_V;
  rep.aliasing_suspected = bundle.aliasing_suspected;
  rep.analytic_leak = bundle.analytic_leak;

  rep.ledger.leakage_max = window_leakage_bound(scheme, w, bundle.lambdas);
  rep.ledger.extraction_max = extraction_residual(bundle, w);
  rep.ledger.substitution_max = substitution_residual(bundle);
  rep.ledger.duality_rel = duality_gap(bundle, s, sums.block);

  const auto norm = l1_norm_interval(s, L, cfg.quad);
  rep.measured_norm = norm.value / L;
  rep.quadrature_converged = norm.converged;
  rep.certified_constant = finite_interval_constant(p, cfg.delta, cfg.eps, eta);

  const double plateau = w.plateau();
  const double widen = 2.0 * L / (2.0 * L - 1.0);
  const bool ledger_ok = rep.ledger.leakage_max <= 0.5 + 1e-9 &&
                         rep.ledger.extraction_max <= 1.0 + 1e-9 &&
                         rep.ledger.substitution_max <= cfg.eps + 1e-9 &&
                         rep.ledger.duality_rel <= 1.0 / (2.0 * L) + 1e-6;
  const bool chain_ok =
      (1.0 - widen * cfg.eps) * rep.S_block <=
          plateau * widen * rep.envelope * rep.measured_norm * (1.0 + 1e-9) + 1e-12 &&
      rep.S_harmonic <= rep.certified_constant * rep.measured_norm * (1.0 + 1e-9) + 1e-12;
  const bool witness_ok = rep.witness_sup <= rep.envelope + 1e-9 &&
                          bundle.sup_intermediate <= rep.envelope + 1e-9 &&
                          bundle.recursion_expansion_gap <= 1e-9 &&
                          bundle.completion_identity_err <= 1e-10 &&
                          bundle.completion_l2_ratio <= std::numbers::sqrt2 + 1e-12;
  rep.pass = ledger_ok && chain_ok && witness_ok && rep.quadrature_converged;
  return rep;
}

}  // namespace lwl
