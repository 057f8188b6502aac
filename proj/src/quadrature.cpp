#include "lwl/quadrature.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lwl/parallel.hpp"
#include "lwl/window.hpp"

namespace lwl {

namespace {

constexpr double kPi = std::numbers::pi;

// 16-node Gauss-Legendre rule on [-1, 1].
constexpr std::array<double, 8> kGlAbscissa = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
constexpr std::array<double, 8> kGlWeight = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

struct Rule16 {
  std::array<double, 16> x;  // nodes ascending in [-1, 1]
  std::array<double, 16> w;
};

const Rule16& rule16() {
  static const Rule16 r = [] {
    Rule16 out;
    for (int q = 0; q < 8; ++q) {
      out.x[q] = -kGlAbscissa[7 - q];
      out.w[q] = kGlWeight[7 - q];
      out.x[8 + q] = kGlAbscissa[q];
      out.w[8 + q] = kGlWeight[q];
    }
    return out;
  }();
  return r;
}

// Neumaier-compensated accumulator.
struct Kahan {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double total() const { return sum + comp; }
};

cplx unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

// One composite pass of |sum| over [lo, lo+T] with P panels.  Node phases are
// advanced panel-to-panel by a fixed complex step and refreshed periodically
// so rounding does not accumulate.  Chunk partials are reduced in index
// order, which keeps the result independent of the thread count.
double l1_pass(const ExponentialSum& s, double lo, double T, std::int64_t P) {
  const auto& r = rule16();
  const double wp = T / static_cast<double>(P);
  const std::size_t n = s.size();

  std::array<double, 16> node_offset{};
  for (int q = 0; q < 16; ++q) node_offset[q] = 0.5 * wp * (r.x[q] + 1.0);

  const int chunks = static_cast<int>(std::min<std::int64_t>(P, 64));
  std::vector<double> partial(chunks, 0.0);

  run_chunks(chunks, [&](int c) {
    const std::int64_t i0 = P * c / chunks;
    const std::int64_t i1 = P * (c + 1) / chunks;
    std::vector<cplx> base(n), step(n);
    std::vector<std::vector<cplx>> node(16, std::vector<cplx>(n));
    for (std::size_t k = 0; k < n; ++k) {
      const double om = 2.0 * kPi * s.lambdas[k];
      step[k] = unit_phase(om * wp);
      base[k] = s.coeffs[k] * unit_phase(om * (lo + wp * static_cast<double>(i0)));
      for (int q = 0; q < 16; ++q) node[q][k] = unit_phase(om * node_offset[q]);
    }
    Kahan acc;
    std::int64_t since_refresh = 0;
    for (std::int64_t i = i0; i < i1; ++i) {
      double panel = 0.0;
      for (int q = 0; q < 16; ++q) {
        cplx v{0.0, 0.0};
        const auto& nq = node[q];
        for (std::size_t k = 0; k < n; ++k) v += base[k] * nq[k];
        panel += r.w[q] * std::abs(v);
      }
      acc.add(panel * 0.5 * wp);
      for (std::size_t k = 0; k < n; ++k) base[k] *= step[k];
      if (++since_refresh == 4096 && i + 1 < i1) {
        since_refresh = 0;
        for (std::size_t k = 0; k < n; ++k) {
          const double om = 2.0 * kPi * s.lambdas[k];
          base[k] = s.coeffs[k] * unit_phase(om * (lo + wp * static_cast<double>(i + 1)));
        }
      }
    }
    partial[c] = acc.total();
  });

  Kahan total;
  for (int c = 0; c < chunks; ++c) total.add(partial[c]);
  return total.total();
}

void fft_pow2(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<cplx> tw;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len >> 1;
    const double ang = (inverse ? 2.0 : -2.0) * kPi / static_cast<double>(len);
    tw.resize(half);
    for (std::size_t j = 0; j < half; ++j) tw[j] = unit_phase(ang * static_cast<double>(j));
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const cplx u = a[i + j];
        const cplx v = a[i + j + half] * tw[j];
        a[i + j] = u + v;
        a[i + j + half] = u - v;
      }
    }
  }
}

}  // namespace

cplx eval_sum(const ExponentialSum& s, double t) {
  Kahan re, im;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const cplx term = s.coeffs[k] * unit_phase(2.0 * kPi * s.lambdas[k] * t);
    re.add(term.real());
    im.add(term.imag());
  }
  return {re.total(), im.total()};
}

IntegralResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                  double b, const QuadratureConfig& cfg) {
  if (!(b >= a)) throw std::invalid_argument("integrate_adaptive: b < a");
  if (a == b) return {0.0, true, 0};
  if (!(cfg.panel_width_cap > 0)) throw std::invalid_argument("integrate_adaptive: bad panel cap");

  const auto& r = rule16();
  auto pass = [&](std::int64_t P) {
    const double wp = (b - a) / static_cast<double>(P);
    Kahan acc;
    for (std::int64_t i = 0; i < P; ++i) {
      const double mid = a + wp * (static_cast<double>(i) + 0.5);
      double panel = 0.0;
      for (int q = 0; q < 16; ++q) panel += r.w[q] * f(mid + 0.5 * wp * r.x[q]);
      acc.add(panel * 0.5 * wp);
    }
    return acc.total();
  };

  std::int64_t P = std::max<std::int64_t>(1, static_cast<std::int64_t>(
                                                 std::ceil((b - a) / cfg.panel_width_cap)));
  double prev = pass(P);
  for (int ref = 1; ref <= cfg.max_refinements; ++ref) {
    P *= 2;
    const double cur = pass(P);
    if (std::abs(cur - prev) <= cfg.rel_tol * std::max(std::abs(cur), 1e-300))
      return {cur, true, ref};
    prev = cur;
  }
  return {prev, false, cfg.max_refinements};
}

IntegralResult l1_norm_interval(const ExponentialSum& s, double T,
                                const QuadratureConfig& cfg, double center) {
  if (!(T > 0)) throw std::invalid_argument("l1_norm_interval: T must be positive");
  if (s.size() == 0) return {0.0, true, 0};

  const double span = std::abs(s.lambdas.front()) + std::abs(s.lambdas.back()) + 1.0;
  const double width = std::min(cfg.panel_width_cap, 1.0 / (8.0 * span));
  const double lo = center - 0.5 * T;

  std::int64_t P = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(T / width)));
  double prev = l1_pass(s, lo, T, P);
  for (int ref = 1; ref <= cfg.max_refinements; ++ref) {
    P *= 2;
    const double cur = l1_pass(s, lo, T, P);
    if (std::abs(cur - prev) <= cfg.rel_tol * std::max(std::abs(cur), 1e-300))
      return {cur, true, ref};
    prev = cur;
  }
  return {prev, false, cfg.max_refinements};
}

double l2_norm_sq_interval_exact(const ExponentialSum& s, double T) {
  if (!(T > 0)) throw std::invalid_argument("l2_norm_sq_interval_exact: T must be positive");
  Kahan acc;
  for (std::size_t k = 0; k < s.size(); ++k) acc.add(std::norm(s.coeffs[k]) * T);
  for (std::size_t k = 0; k < s.size(); ++k) {
    for (std::size_t l = k + 1; l < s.size(); ++l) {
      const double mu = s.lambdas[k] - s.lambdas[l];
      const double kernel = T * sinc_pi(mu * T);
      acc.add(2.0 * (s.coeffs[k] * std::conj(s.coeffs[l])).real() * kernel);
    }
  }
  return acc.total();
}

BesicovitchResult besicovitch_l1(const ExponentialSum& s, const BesicovitchConfig& cfg) {
  BesicovitchResult out;
  if (s.size() == 0) {
    out.converged = true;
    out.exact_period = true;
    out.trace.emplace_back(cfg.T0, 0.0);
    return out;
  }

  for (int q = 1; q <= cfg.period_denominator_cap; ++q) {
    bool periodic = true;
    for (const double lam : s.lambdas) {
      const double v = lam * q;
      if (std::abs(v - std::round(v)) > 1e-9 * std::max(1.0, std::abs(v))) {
        periodic = false;
        break;
      }
    }
    if (periodic) {
      const auto mean = l1_norm_interval(s, static_cast<double>(q), cfg.quad);
      out.value = mean.value / q;
      out.converged = mean.converged;
      out.exact_period = true;
      out.trace.emplace_back(static_cast<double>(q), out.value);
      return out;
    }
  }

  double T = cfg.T0;
  bool quad_ok = true;
  for (int i = 0; i <= cfg.max_doublings; ++i) {
    const auto r = l1_norm_interval(s, T, cfg.quad);
    quad_ok = quad_ok && r.converged;
    const double mean = r.value / T;
    out.trace.emplace_back(T, mean);
    if (i > 0) {
      const double prev = out.trace[out.trace.size() - 2].second;
      if (std::abs(mean - prev) <= cfg.rel_tol * std::max(std::abs(mean), 1e-300)) {
        out.value = mean;
        out.converged = quad_ok;
        return out;
      }
    }
    out.value = mean;
    T *= 2.0;
  }
  out.converged = false;
  return out;
}

cplx FourierCoefficients::at(int s) const {
  if (s < -M / 2 || s >= M / 2)
    throw std::out_of_range("FourierCoefficients: frequency " + std::to_string(s) +
                            " outside [-M/2, M/2)");
  return c[static_cast<std::size_t>(s >= 0 ? s : s + M)];
}

FourierCoefficients fourier_coeffs_from_samples(const std::vector<cplx>& samples,
                                                double interval_length) {
  const std::size_t M = samples.size();
  if (M < 256 || !std::has_single_bit(M))
    throw std::invalid_argument("fourier_coeffs: M must be a power of two >= 256");
  if (!(interval_length > 0))
    throw std::invalid_argument("fourier_coeffs: interval length must be positive");

  FourierCoefficients out;
  out.M = static_cast<int>(M);
  out.interval_length = interval_length;
  out.c = samples;
  fft_pow2(out.c, false);
  // Grid starts at -L/2, so bin b picks up the alternating sign (-1)^b.
  const double inv = 1.0 / static_cast<double>(M);
  for (std::size_t b = 0; b < M; ++b) out.c[b] *= (b & 1) ? -inv : inv;

  double total = 0.0, top = 0.0;
  for (std::size_t b = 0; b < M; ++b) {
    const double e = std::norm(out.c[b]);
    total += e;
    const std::int64_t sgn = (b < M / 2) ? static_cast<std::int64_t>(b)
                                         : static_cast<std::int64_t>(b) - static_cast<std::int64_t>(M);
    if (std::abs(sgn) >= static_cast<std::int64_t>(M / 4)) top += e;
  }
  out.aliasing_suspected = total > 0.0 && top > 1e-6 * total;
  return out;
}

FourierCoefficients fourier_coeffs_on_interval(const std::function<cplx(double)>& f,
                                               double interval_length, int M) {
  if (M < 256 || !std::has_single_bit(static_cast<unsigned>(M)))
    throw std::invalid_argument("fourier_coeffs: M must be a power of two >= 256");
  std::vector<cplx> samples(M);
  const double h = interval_length / M;
  for (int m = 0; m < M; ++m) samples[m] = f(-0.5 * interval_length + h * m);
  return fourier_coeffs_from_samples(samples, interval_length);
}

std::vector<cplx> synthesize_on_grid(const std::vector<cplx>& bins, double interval_length) {
  const std::size_t M = bins.size();
  if (M < 256 || !std::has_single_bit(M))
    throw std::invalid_argument("synthesize_on_grid: M must be a power of two >= 256");
  if (!(interval_length > 0))
    throw std::invalid_argument("synthesize_on_grid: interval length must be positive");
  std::vector<cplx> v(M);
  for (std::size_t b = 0; b < M; ++b) v[b] = (b & 1) ? -bins[b] : bins[b];
  fft_pow2(v, true);
  return v;
}

}  // namespace lwl
