#pragma once

#include "isowirt/report.hpp"
#include "isowirt/types.hpp"

#include <map>
#include <vector>

namespace isowirt {

// Real 2 pi-periodic function h(theta) = sum_{|n| <= N} a_n e^{in theta} with
// a_{-n} = conj(a_n), stored spectrally.  When h is the support function of a
// convex curve, h + h'' is the radius of curvature; convexity is certified,
// not required: every inequality below holds for any real trigonometric
// polynomial, only the width/area interpretation needs the certificate.
class SupportFunction {
 public:
  explicit SupportFunction(std::map<long, Complex> coeffs);

  static SupportFunction circle(double radius);
  // h = a0 + sum_{n >= 1} 2 Re(upper_n e^{in theta})
  static SupportFunction from_harmonics(double a0,
                                        const std::map<long, Complex>& upper);

  long degree() const { return degree_; }
  Complex coeff(long n) const;
  const std::map<long, Complex>& coeffs() const { return coeffs_; }

  double evaluate(double theta) const;
  SupportFunction derivative(int order = 1) const;

  // rho = h + h'' > 0 on a 4N+1 uniform grid.
  bool convexity_certificate() const;

 private:
  SupportFunction() = default;
  std::map<long, Complex> coeffs_;
  long degree_ = 0;
};

// Coefficient-map helpers (exact operations on trigonometric polynomials).
std::map<long, Complex> fourier_product(const std::map<long, Complex>& a,
                                        const std::map<long, Complex>& b);
std::map<long, Complex> fourier_shift(const std::map<long, Complex>& a, double shift);
// Int_0^upper sum c_q e^{iq theta} d theta (real part; exact closed form).
double fourier_integral(const std::map<long, Complex>& a, double upper);

// Averaged translation operator T_k[h](theta) = (1/k) sum_{m=1..k}
// h(theta + (2m-1) pi / k); diagonal with eigenvalue beta_n below.
SupportFunction apply_T_k(const SupportFunction& h, int k);

// beta_n = (1/k) sum_m cos(n (2m-1) pi / k) = (-1)^{n/k} when k | n, else 0.
double t_k_eigenvalue(int k, long n);

// A[h] = h + h''; diagonal with eigenvalue delta_n = 1 - n^2.
SupportFunction apply_A(const SupportFunction& h);

// Generalized width w_k(theta) = sum_{j=0..k-1} h(theta + 2 j pi / k);
// spectrally k a_n on multiples of k, zero elsewhere.
SupportFunction width_k(const SupportFunction& h, int k);

// Algebraic area of the j-th locus of curvature centers,
// F[gamma_(j)] = 1/2 Int ((h^(j))^2 - (h^(j+1))^2) = pi sum n^{2j} (1-n^2) |a_n|^2.
double locus_area(const SupportFunction& h, int j);

// Symmetric bilinear extension; mixed_area(h, h, j) == locus_area(h, j).
double mixed_area(const SupportFunction& h1, const SupportFunction& h2, int j);

struct ChernoffOptions {
  // Demand the convexity certificate before geometric interpretation.
  bool require_convexity = false;
  double tolerance = tol::kDefault;
};

// Spectral core inequality Int h (T_k - A)^m [h] >= 0 for k >= 2, m >= 1;
// equality exactly when a_n = 0 for |n| >= 2 (the curve is a circle).
InequalityReport chernoff_core(const SupportFunction& h, int k, int m,
                               const ChernoffOptions& opts = {});

// The geometric form of the same inequality: locus areas, mixed areas with
// T_k gamma and T_k^2 gamma, and generalized-width integrals, assembled per
// the parity of m.  The two displayed sides sum to half the core integral,
// so the reported deficit is doubled to coincide with chernoff_core's.
InequalityReport chernoff_theorem(const SupportFunction& h, int k, int m,
                                  const ChernoffOptions& opts = {});

// Both routes of Int h A^m [h] = 2 sum_{r<m} (-1)^r binom(m-1, r) F[gamma_(r)].
std::pair<double, double> binomial_area_identity(const SupportFunction& h, int m);

// gamma_(order) sampled on a uniform grid;
// gamma_(j)(theta) = i^j e^{i theta} (h^(j) + i h^(j+1)).
std::vector<Complex> support_curve_points(const SupportFunction& h, int samples,
                                          int order = 0);

}  // namespace isowirt
