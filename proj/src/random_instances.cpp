#include "lwl/random_instances.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lwl {

double Rng::uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::uint64_t Rng::integer(std::uint64_t n) {
  if (n == 0) return 0;
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
  std::uint64_t draw;
  do {
    draw = eng_();
  } while (draw >= limit);
  return draw % n;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = uniform(-1.0, 1.0);
    v = uniform(-1.0, 1.0);
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * scale;
  have_spare_ = true;
  return u * scale;
}

std::vector<double> random_unit_gap_frequencies(Rng& rng, int N) {
  std::vector<double> jitter(N);
  for (double& j : jitter) j = rng.uniform(0.0, 0.25);
  std::sort(jitter.begin(), jitter.end());
  std::vector<double> lambdas(N);
  for (int k = 0; k < N; ++k) lambdas[k] = static_cast<double>(k + 1) + jitter[k];
  return lambdas;
}

ExponentialSum random_instance(Rng& rng, int N, CoeffProfile profile) {
  const std::vector<double> lambdas = random_unit_gap_frequencies(rng, N);
  std::vector<cplx> coeffs(N);
  switch (profile) {
    case CoeffProfile::Gaussian:
      for (cplx& a : coeffs) a = cplx{rng.normal(), rng.normal()};
      break;
    case CoeffProfile::Unimodular:
      for (cplx& a : coeffs) {
        const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
        a = cplx{std::cos(phase), std::sin(phase)};
      }
      break;
    case CoeffProfile::SparseWithZeros: {
      bool any = false;
      for (cplx& a : coeffs) {
        if (rng.uniform() < 0.3) {
          const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
          a = rng.uniform(1.0, 2.0) * cplx{std::cos(phase), std::sin(phase)};
          any = true;
        } else {
          a = cplx{0.0, 0.0};
        }
      }
      if (!any) coeffs[0] = cplx{1.0, 0.0};
      break;
    }
  }
  return ExponentialSum(lambdas, coeffs);
}

std::vector<ExponentialSum> random_suite(std::uint64_t seed, int count, int max_N) {
  Rng rng(seed);
  std::vector<ExponentialSum> suite;
  suite.reserve(count);
  const int lo = std::min(5, max_N);
  for (int i = 0; i < count; ++i) {
    const int N = lo + static_cast<int>(rng.integer(static_cast<std::uint64_t>(max_N - lo + 1)));
    const auto profile = static_cast<CoeffProfile>(i % 3);
    suite.push_back(random_instance(rng, N, profile));
  }
  return suite;
}

}  // namespace lwl
