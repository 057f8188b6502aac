#include "lwl/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lwl {

ExponentialSum::ExponentialSum(std::vector<double> freqs, std::vector<cplx> amps)
    : lambdas(std::move(freqs)), coeffs(std::move(amps)) {
  if (lambdas.size() != coeffs.size())
    throw std::invalid_argument("ExponentialSum: " + std::to_string(lambdas.size()) +
                                " frequencies vs " + std::to_string(coeffs.size()) +
                                " coefficients");
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    if (!std::isfinite(lambdas[k]))
      throw std::invalid_argument("ExponentialSum: lambda[" + std::to_string(k) +
                                  "] is not finite");
    if (!std::isfinite(coeffs[k].real()) || !std::isfinite(coeffs[k].imag()))
      throw std::invalid_argument("ExponentialSum: coeff[" + std::to_string(k) +
                                  "] is not finite");
    if (k > 0 && !(lambdas[k] > lambdas[k - 1]))
      throw std::invalid_argument("ExponentialSum: lambda[" + std::to_string(k) +
                                  "] does not exceed lambda[" + std::to_string(k - 1) + "]");
  }
}

double min_gap(const ExponentialSum& s) {
  if (s.size() < 2) return std::numeric_limits<double>::infinity();
  double g = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < s.size(); ++k)
    g = std::min(g, s.lambdas[k] - s.lambdas[k - 1]);
  return g;
}

bool validate_gap(const ExponentialSum& s, double gamma) {
  return min_gap(s) >= gamma;
}

NormalizedSum normalize_affine(const ExponentialSum& s) {
  if (s.size() < 2) return {s, 1.0, 0.0};
  const double g = min_gap(s);
  const double shift = s.lambdas.front();
  std::vector<double> mapped(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) mapped[k] = (s.lambdas[k] - shift) / g;
  return {ExponentialSum(std::move(mapped), s.coeffs), g, shift};
}

int BlockScheme::level_of(std::int64_t index) const {
  if (index < 1 || index > capacity())
    throw std::out_of_range("BlockScheme: index " + std::to_string(index) +
                            " outside [1, " + std::to_string(capacity()) + "]");
  for (int j = n; j >= 0; --j)
    if (index >= beta[j]) return j;
  throw std::logic_error("BlockScheme: unreachable");
}

BlockScheme build_blocks(int delta, std::int64_t N) {
  if (delta < 2) throw std::invalid_argument("build_blocks: delta must be >= 2");
  if (N < 1) throw std::invalid_argument("build_blocks: N must be >= 1");

  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max() / 4;
  BlockScheme b;
  b.delta = delta;
  b.beta = {1};
  std::int64_t pow = 1;  // delta^j for the block being appended
  for (int j = 0;; ++j) {
    if (b.beta.back() > kMax - pow)
      throw std::invalid_argument("build_blocks: N too large for this delta");
    b.beta.push_back(b.beta.back() + pow);
    const int n = static_cast<int>(b.beta.size()) - 2;
    if (n >= 2 && b.beta.back() - 1 >= N) {
      b.n = n;
      break;
    }
    if (pow > kMax / delta)
      throw std::invalid_argument("build_blocks: N too large for this delta");
    pow *= delta;
  }

  // Closed form beta[j] = 1 + (delta^j - 1)/(delta - 1), kept as a hard check
  // on the recursion.
  std::int64_t geom = 0, q = 1;
  for (std::size_t j = 0; j < b.beta.size(); ++j) {
    if (b.beta[j] != 1 + geom) throw std::logic_error("build_blocks: closed form mismatch");
    geom += q;
    if (q > kMax / delta) break;  // next power would overflow; prefix verified
    q *= delta;
  }
  return b;
}

WeightedSums weighted_sums(const ExponentialSum& s, const BlockScheme& b) {
  if (static_cast<std::int64_t>(s.size()) > b.capacity())
    throw std::invalid_argument("weighted_sums: scheme capacity " +
                                std::to_string(b.capacity()) + " below N = " +
                                std::to_string(s.size()));
  WeightedSums out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const double mag = std::abs(s.coeffs[k]);
    const std::int64_t index = static_cast<std::int64_t>(k) + 1;
    out.block += mag / static_cast<double>(b.block_size(b.level_of(index)));
    out.harmonic += mag / static_cast<double>(index + 1);
  }
  return out;
}

}  // namespace lwl
