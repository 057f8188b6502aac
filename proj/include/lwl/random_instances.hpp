#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lwl/model.hpp"

namespace lwl {

// Deterministic RNG wrapper.  Raw mt19937_64 draws are mapped to doubles by
// hand ((x >> 11) * 2^-53) so streams are identical across standard library
// implementations -- std::uniform_real_distribution makes no such promise.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform();                        // [0, 1)
  double uniform(double lo, double hi);    // [lo, hi)
  std::uint64_t integer(std::uint64_t n);  // [0, n), unbiased
  double normal();                         // standard normal (Box-Muller)

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

enum class CoeffProfile {
  Gaussian,         // a_k = N(0,1) + i N(0,1)
  Unimodular,       // |a_k| = 1, random phase
  SparseWithZeros,  // ~30% populated, random magnitude in [1, 2), rest zero
};

// Frequencies k + jitter_k with jitter sorted in [0, 0.25], so consecutive
// gaps stay >= 1 by construction.
std::vector<double> random_unit_gap_frequencies(Rng& rng, int N);

ExponentialSum random_instance(Rng& rng, int N, CoeffProfile profile);

// The canonical seeded suite shared by tests and the check subcommand:
// sizes 5..max_N, coefficient profiles cycling through all three.
std::vector<ExponentialSum> random_suite(std::uint64_t seed, int count, int max_N);

}  // namespace lwl
