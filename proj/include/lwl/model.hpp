#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lwl {

using cplx = std::complex<double>;

// Thrown when an input violates a mathematical hypothesis of a certified
// bound (e.g. frequency gaps below 1), as opposed to a malformed argument.
struct HypothesisViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite sum  t -> sum_k a_k exp(2 i pi lambda_k t)  with real, strictly
// increasing frequencies.  Frequencies and coefficients are validated on
// construction: finite values only, strictly monotone lambdas, equal lengths.
struct ExponentialSum {
  std::vector<double> lambdas;
  std::vector<cplx> coeffs;

  ExponentialSum() = default;
  ExponentialSum(std::vector<double> freqs, std::vector<cplx> amps);

  std::size_t size() const { return lambdas.size(); }
};

// Smallest gap between consecutive frequencies (+inf for size < 2).
double min_gap(const ExponentialSum& s);

// True when all consecutive gaps are >= gamma.
bool validate_gap(const ExponentialSum& s, double gamma);

struct NormalizedSum {
  ExponentialSum sum;
  double scale = 1.0;  // original gap that was mapped to 1
  double shift = 0.0;  // original first frequency
};

// Affine change of variable lambda -> (lambda - lambda_1)/g with g the
// smallest gap, so the result starts at 0 and has min gap exactly 1.
// Single-frequency input is returned unchanged (scale 1, shift 0).
NormalizedSum normalize_affine(const ExponentialSum& s);

/// Geometric block partition of the index range {1, ..., beta[n+1]-1}:
// beta[0] = 1, beta[j+1] = beta[j] + delta^j, block j = [beta[j], beta[j+1])
// of size delta^j.  Indices above N (up to capacity) are padding slots.
struct BlockScheme {
  int delta = 2;
  int n = 2;                        // top block level; blocks are j = 0..n
  std::vector<std::int64_t> beta;   // beta[0..n+1]

  std::int64_t capacity() const { return beta.back() - 1; }
  std::int64_t block_size(int j) const { return beta[j + 1] - beta[j]; }
  // Level j with beta[j] <= index < beta[j+1]; index is 1-based.
  int level_of(std::int64_t index) const;
};

// Smallest scheme (n >= 2) whose capacity beta[n+1]-1 covers N indices.
BlockScheme build_blocks(int delta, std::int64_t N);

struct WeightedSums {
  double block = 0.0;     // sum_j |D_j|^{-1} sum_{k in D_j} |a_k|
  double harmonic = 0.0;  // sum_k |a_k| / (k+1), k = 1-based index
};

WeightedSums weighted_sums(const ExponentialSum& s, const BlockScheme& b);

}  // namespace lwl
