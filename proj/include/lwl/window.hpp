#pragma once

#include <vector>

namespace lwl {

// sin(pi x)/(pi x) with a short even Taylor series below |x| = 1e-4 so the
// removable singularity at 0 costs no accuracy.
double sinc_pi(double x);

// Flat-top window of shape parameter p >= 2:
//
//   phi = ((p^2+p)/p^2) * ( indicator of [-p^2/2, p^2/2]  *  B_p )
//
// where B_p is the p-fold autoconvolution of the indicator of [-1/2, 1/2]
// (the centered cardinal B-spline of order p).  phi is supported on
// [-(p^2+p)/2, (p^2+p)/2], equals (p^2+p)/p^2 on the plateau
// |t| <= (p^2-p)/2, and integrates to p^2+p.  Its Fourier transform is
// nonnegative at 0 and decays like |lambda|^{-p}.
class Window {
 public:
  explicit Window(int p);

  int p() const { return p_; }
  double length() const { return static_cast<double>(p_) * p_ + p_; }  // |I_p|
  double plateau() const;                                              // (p^2+p)/p^2
  double half_support() const { return length() / 2.0; }

  // Pointwise value via the exact piecewise-polynomial cumulative integral of
  // B_p (no quadrature).
  double value(double t) const;

  // Closed-form transform (p^2+p) sinc(p^2 lambda) sinc(lambda)^p where
  // sinc(x) = sin(pi x)/(pi x).
  double transform(double lambda) const;

 private:
  // Cumulative integral C(x) = int_{-p/2}^{x} B_p, stored piecewise: piece i
  // covers x in [i - p/2, i + 1 - p/2]; poly_[i] holds coefficients in the
  // local coordinate s = x - (i - p/2), constant term first; prefix_[i] is
  // C at the left edge of piece i.
  double cumulative(double x) const;

  int p_ = 0;
  std::vector<std::vector<double>> poly_;
  std::vector<double> prefix_;
};

// Smallest p with 4*delta*(p^2+p) / (min(1, delta-1) * pi^p) <= 1/4, the
// shape at which the window's off-frequency leakage budget closes.
int min_admissible_p(int delta);

}  // namespace lwl
