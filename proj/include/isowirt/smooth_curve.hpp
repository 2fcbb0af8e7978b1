#pragma once

#include "isowirt/report.hpp"
#include "isowirt/types.hpp"

#include <map>

namespace isowirt {

// Closed curve z(t) = sum_{|n| <= N} a_n e^{int}, t in [0, 2 pi).
//
// Curves are kept spectrally: derivatives and all L^2 integrals of
// trigonometric polynomials are then exact coefficient sums, and the
// equality classes of the inequalities below (which are spectral) can be
// realized without discretization error.
class FourierCurve {
 public:
  explicit FourierCurve(std::map<long, Complex> coeffs);

  long degree() const { return degree_; }
  Complex coeff(long n) const;
  const std::map<long, Complex>& coeffs() const { return coeffs_; }

  FourierCurve derivative(int order = 1) const;
  Complex evaluate(double t) const;

  // Subtracts a_0.
  FourierCurve recentered() const;

  // max_t ||z'(t)| - mean| / mean on a dense uniform grid; the curve counts
  // as constant-speed when this is <= 1e-8.
  double speed_deviation() const;

 private:
  std::map<long, Complex> coeffs_;
  long degree_ = 0;
};

inline constexpr double kConstantSpeedTol = 1e-8;

// Arc length.  Constant-speed curves use L = sqrt(2 pi Int |z'|^2) which is
// exact spectrally; otherwise Int |z'| dt by the trapezoid rule on at least
// 8N+1 points (spectrally accurate for smooth periodic integrands).
double curve_length(const FourierCurve& c);

// Enclosed algebraic area, F = pi sum_n n |a_n|^2.
double curve_area(const FourierCurve& c);

struct SmoothEvalOptions {
  bool auto_recenter = false;       // subtract a_0 instead of rejecting
  bool auto_reparametrize = false;  // reparametrize by arc length if needed
  long reparam_degree = 0;          // 0 keeps the input truncation degree
  double tolerance = tol::kDefault;
};

// Higher-order Wirtinger inequality for zero-mean 2 pi-periodic functions:
//   0 <= prod_{j=2..m} (1 - j^2) Int (|z'|^2 - |z|^2) dt
//        + sum_{l=1..m-1} s_{m,l} Int |z^(l+1) + z^(l-1)|^2 dt.
// Equality exactly when a_n = 0 for |n| > m.
InequalityReport gen_wirtinger(const FourierCurve& c, int m,
                               const SmoothEvalOptions& opts = {});

// Order-m sharpened isoperimetric inequality for constant-speed, positively
// oriented, zero-mean curves.  The geometric terms (area, length, distance to
// the normal-scaled position, iterated derivatives of z + (L/2pi)^2 kappa)
// are evaluated in the t-domain through the exact substitution identities;
// the reported deficit is normalized to the arc-length measure, so it equals
// (L / 2 pi) times the gen_wirtinger deficit.  Equality iff z(t) = b e^{it}.
InequalityReport smooth_isoperimetric(const FourierCurve& c, int m,
                                      const SmoothEvalOptions& opts = {});

// Resamples the curve at equal arc-length increments and re-expands to the
// target truncation degree.  Requires nonvanishing speed.
FourierCurve reparametrize_by_arclength(const FourierCurve& c, long target_degree);

}  // namespace isowirt
