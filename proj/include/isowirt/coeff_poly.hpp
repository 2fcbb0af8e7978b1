#pragma once

#include "isowirt/types.hpp"

namespace isowirt {

// Dense polynomial helpers; coefficients are stored low degree first.
namespace poly {
RVec expand_from_roots(const RVec& roots);
double eval(const RVec& coeffs, double x);
// Quotient of (P(x) - P(a)) / (x - a); degree drops by one.
RVec deflate(const RVec& coeffs, double a);
}  // namespace poly

// Coefficient tables for the discrete (k-dependent) polynomial family
//   Q_m(x) = prod_{j=1..m} (x - 4 sin^2(j pi / k)) = sum_j c_{m,j} x^j
//   P_m(x) = prod_{j=2..m} (x - 4 sin^2(j pi / k)) = sum_j lambda_{m,j} x^j
//   S_m(x) = (P_m(x) - P_m(x_1)) / (x - x_1),  x_1 = 4 sin^2(pi / k),
// with S_{m,0} = P_m(x_1) and S_{m,l} the coefficient of x^{l-1} in S_m.
//
// The linking identities
//   c_{m,j}    = lambda_{m,j-1} - x_1 lambda_{m,j}
//   lambda_{m,l} = S_{m,l} - x_1 S_{m,l+1}
// are checked at construction; a failure throws InternalConsistencyError.
struct CoefficientTable {
  int m = 0;
  Index k = 0;
  RVec c;       // size m+1
  RVec lambda;  // size m (P_1 == 1 gives lambda = (1))
  RVec s_cap;   // size m: S_{m,0}, S_{m,1}, ..., S_{m,m-1}

  double root(int j) const;  // 4 sin^2(j pi / k)
};

// Requires 1 <= m <= floor(k/2); the theorems' hypothesis.
CoefficientTable discrete_table(int m, Index k);

// Smooth family: P_m(t) = prod_{j=2..m} (t - j^2),
// S_m(t) = (P_m(t) - P_m(1)) / (t - 1) = sum_{l=1..m-1} s_{m,l} t^{l-1}.
// The constant in the smooth isoperimetric theorem,
// -(-1)^m (m-1)! (m+1)! / 2, equals P_m(1); both are computed and
// cross-checked so a sign-convention slip cannot pass silently.
struct SmoothTable {
  int m = 0;
  RVec p;                  // coefficients of P_m, size m
  RVec s;                  // s_{m,1}..s_{m,m-1}, size m-1
  double p_at_one = 0.0;   // P_m(1)
  double theorem_constant = 0.0;
};

SmoothTable smooth_table(int m);

// Prop-level recurrences between consecutive orders:
//   c_{m+1,l} = c_{m,l-1} - 4 sin^2((m+1) pi / k) c_{m,l}
//   S_{m+1,l} = S_{m,l-1} - 4 sin^2((m+1) pi / k) S_{m,l}   (l >= 1)
// Requires 1 <= m <= floor(k/2) - 1.
bool stability_recurrences_hold(int m, Index k, double rel_tol = 1e-12);

}  // namespace isowirt
