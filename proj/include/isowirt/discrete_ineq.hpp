#pragma once

#include "isowirt/polygon.hpp"
#include "isowirt/report.hpp"

#include <map>
#include <utility>

namespace isowirt {

struct EvalOptions {
  // The discrete theorems hypothesize centroid 0.  Off-centre input is
  // rejected by default so a caller cannot silently verify the wrong
  // statement; set auto_recenter to translate first instead.
  bool auto_recenter = false;
  double tolerance = tol::kDefault;
};

// Higher-order discrete Wirtinger inequality,
//   sum_{j=0..m} c_{m,j} ||z^(j)||^2 >= 0,
// for zero-centroid z and 1 <= m <= floor(k/2).  Equality exactly when
// zeta_nu = 0 for m < nu < k - m.
InequalityReport wirtinger_m(const Polygon& p, int m, const EvalOptions& opts = {});

// Same deficit rearranged through P_m:
//   sum_j lambda_{m,j} (||z^(j+1)||^2 - 4 sin^2(pi/k) ||z^(j)||^2) >= 0.
InequalityReport wirtinger_lambda_form(const Polygon& p, int m,
                                       const EvalOptions& opts = {});

// Same deficit rearranged once more,
//   0 <= S_{m,0} (||zdot||^2 - 4 sin^2(pi/k) ||z||^2)
//        + sum_{l=1..m-1} S_{m,l} ||tau z^(l+1) + 4 sin^2(pi/k) z^(l-1)||^2.
InequalityReport wirtinger_s_form(const Polygon& p, int m,
                                  const EvalOptions& opts = {});

// Stability of the order-m inequality (coefficient form); requires
// 1 <= m <= floor(k/2) - 1.  Equality iff the spectrum lies in 0 < |nu| <= m+1.
InequalityReport stability_c(const Polygon& p, int m, const EvalOptions& opts = {});

// Stability in the S-form; the m = 1 instance bounds the deficit of the
// sharpened isoperimetric inequality.
InequalityReport stability_s(const Polygon& p, int m, const EvalOptions& opts = {});

// S - 4 tan(pi/k) F >= 2 tan^2(pi/k) || z + i e^{-i pi/k} t / (2 sin(pi/k)) ||^2;
// equality on the two-mode family zeta_1 R_1 + zeta_{k-1} R_{k-1}.
InequalityReport chakerian_v1(const Polygon& p, const EvalOptions& opts = {});

// Weaker constant 2 sin^2(pi/k), but rigidity is the positively oriented
// regular k-gon alone.
InequalityReport chakerian_v2(const Polygon& p, const EvalOptions& opts = {});

// Order-m sharpened isoperimetric inequality (tangent + curvature form).
// Odd m lower-bounds the deficit S - 4 tan(pi/k) F, even m upper-bounds it.
InequalityReport isoperimetric_higher(const Polygon& p, int m,
                                      const EvalOptions& opts = {});

// Unconditional identity relating the Wirtinger gap to the isoperimetric
// deficit: returns both sides of
//   ||zdot||^2 - 4 sin^2(pi/k) ||z||^2
//     = 2 cos^2(pi/k) (S - 4 tan(pi/k) F) - ||zdot - 2 i sin(pi/k) e^{i pi/k} z||^2.
std::pair<double, double> chakerian_identity(const Polygon& p);

// L^2 >= 4 k tan(pi/k) |F| for equilateral polygons; equality iff regular.
// Both sides are translation invariant, so the polygon is recentred
// internally and no centroid hypothesis is imposed.
InequalityReport equilateral_bound(const Polygon& p, const EvalOptions& opts = {});

// L^2 variant of the order-m inequality for even m (via kS >= L^2);
// equality iff z is a single mode zeta_nu R_nu with 0 < |nu| <= m.
InequalityReport length_form_even(const Polygon& p, int m,
                                  const EvalOptions& opts = {});

// Correlation test behind the rigidity arguments: c_n = sum_{p-q=n} a_p conj(a_q)
// for n != 0 all vanish only when at most one a_p is nonzero.
struct SparseModeResult {
  bool correlations_vanish = false;
  int nonzero_count = 0;
  double max_correlation = 0.0;
};
SparseModeResult sparse_mode_check(const std::map<long, Complex>& coeffs,
                                   double rel_threshold = 1e-9);

}  // namespace isowirt
