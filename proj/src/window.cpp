#include "lwl/window.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lwl {

double sinc_pi(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double y = std::numbers::pi * x * std::numbers::pi * x;
    return 1.0 - y / 6.0 + y * y / 120.0 - y * y * y / 5040.0;
  }
  return std::sin(std::numbers::pi * x) / (std::numbers::pi * x);
}

namespace {

// Integrate a polynomial given by coefficients (constant first) from 0 to s.
double poly_integral(const std::vector<double>& c, double s) {
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * s + c[k] / static_cast<double>(k + 1);
  return acc * s;
}

}  // namespace

Window::Window(int p) : p_(p) {
  if (p < 2) throw std::invalid_argument("Window: p must be >= 2");
  if (p > 64) throw std::invalid_argument("Window: p capped at 64");

  // Build B_q piecewise starting from B_1 = indicator of [-1/2, 1/2] using
  // B_{q+1}(t) = int_{t-1/2}^{t+1/2} B_q.  With pieces on a unit lattice and
  // local coordinate s in [0, 1] this is
  //   P_i^{q+1}(s) = I_{i-1} + int_0^s (P_i^q - P_{i-1}^q),
  // where I_m = int_0^1 P_m^q and out-of-range pieces are zero.  All values
  // stay in [0, 1], so the recursion is numerically benign up to p = 64.
  std::vector<std::vector<double>> cur = {{1.0}};
  for (int q = 1; q < p_; ++q) {
    std::vector<double> integral(cur.size() + 1, 0.0);  // I_{-1}, I_0, ..., I_{q-1}
    for (std::size_t m = 0; m < cur.size(); ++m) integral[m + 1] = poly_integral(cur[m], 1.0);

    std::vector<std::vector<double>> next(cur.size() + 1);
    for (std::size_t i = 0; i < next.size(); ++i) {
      std::vector<double> diff(q + 1, 0.0);  // P_i^q - P_{i-1}^q, degree q-1
      if (i < cur.size())
        for (std::size_t k = 0; k < cur[i].size(); ++k) diff[k] += cur[i][k];
      if (i >= 1 && i - 1 < cur.size())
        for (std::size_t k = 0; k < cur[i - 1].size(); ++k) diff[k] -= cur[i - 1][k];
      std::vector<double> piece(q + 1, 0.0);
      piece[0] = integral[i];  // I_{i-1}
      for (int k = 0; k < q; ++k) piece[k + 1] = diff[k] / static_cast<double>(k + 1);
      next[i] = std::move(piece);
    }
    cur = std::move(next);
  }

  poly_ = std::move(cur);
  prefix_.assign(poly_.size() + 1, 0.0);
  for (std::size_t i = 0; i < poly_.size(); ++i)
    prefix_[i + 1] = prefix_[i] + poly_integral(poly_[i], 1.0);
}

double Window::plateau() const {
  const double pp = static_cast<double>(p_) * p_;
  return (pp + p_) / pp;
}

double Window::cumulative(double x) const {
  const double left = -0.5 * p_;
  if (x <= left) return 0.0;
  if (x >= -left) return 1.0;
  const double local = x - left;
  int i = static_cast<int>(std::floor(local));
  if (i >= static_cast<int>(poly_.size())) i = static_cast<int>(poly_.size()) - 1;
  return prefix_[i] + poly_integral(poly_[i], local - i);
}

double Window::value(double t) const {
  const double half_box = 0.5 * static_cast<double>(p_) * p_;
  return plateau() * (cumulative(t + half_box) - cumulative(t - half_box));
}

double Window::transform(double lambda) const {
  const double pp = static_cast<double>(p_) * p_;
  const double s1 = sinc_pi(pp * lambda);
  const double s = sinc_pi(lambda);
  double spow = 1.0;
  for (int k = 0; k < p_; ++k) spow *= s;
  return length() * s1 * spow;
}

int min_admissible_p(int delta) {
  if (delta < 2) throw std::invalid_argument("min_admissible_p: delta must be >= 2");
  const double d = delta;
  const double denom = std::min(1.0, d - 1.0);
  for (int p = 2; p <= 64; ++p) {
    const double lhs = 4.0 * d * (static_cast<double>(p) * p + p) /
                       (denom * std::pow(std::numbers::pi, p));
    if (lhs <= 0.25) return p;
  }
  throw std::domain_error("min_admissible_p: no admissible p <= 64 for delta = " +
                          std::to_string(delta));
}

}  // namespace lwl
