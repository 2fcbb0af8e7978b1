#include "isowirt/coeff_poly.hpp"

#include <cmath>

namespace isowirt {

namespace poly {

RVec expand_from_roots(const RVec& roots) {
  RVec coeffs = RVec::Zero(roots.size() + 1);
  coeffs[0] = 1.0;
  for (Index i = 0; i < roots.size(); ++i) {
    // multiply by (x - r): shift up, subtract r * current
    for (Index d = i + 1; d >= 1; --d) coeffs[d] = coeffs[d - 1] - roots[i] * coeffs[d];
    coeffs[0] *= -roots[i];
  }
  return coeffs;
}

double eval(const RVec& coeffs, double x) {
  double acc = 0.0;
  for (Index d = coeffs.size() - 1; d >= 0; --d) acc = acc * x + coeffs[d];
  return acc;
}

RVec deflate(const RVec& coeffs, double a) {
  const Index d = coeffs.size() - 1;
  if (d < 1) return RVec::Zero(0);
  RVec q(d);
  q[d - 1] = coeffs[d];
  for (Index i = d - 1; i >= 1; --i) q[i - 1] = coeffs[i] + a * q[i];
  return q;
}

}  // namespace poly

double CoefficientTable::root(int j) const {
  const double s = std::sin(static_cast<double>(j) * kPi / static_cast<double>(k));
  return 4.0 * s * s;
}

namespace {

void check_identity(double lhs, double rhs, const char* what) {
  if (!approx_equal(lhs, rhs, 1e-12, 1e-12))
    throw InternalConsistencyError(std::string("coefficient identity failed: ") + what);
}

}  // namespace

CoefficientTable discrete_table(int m, Index k) {
  if (k < 3) throw ParameterError("discrete_table: k must be >= 3");
  if (m < 1) throw ParameterError("discrete_table: m must be >= 1");
  if (m > static_cast<int>(k / 2))
    throw ParameterError("discrete_table: m exceeds floor(k/2) = " +
                         std::to_string(k / 2));

  CoefficientTable t;
  t.m = m;
  t.k = k;

  RVec q_roots(m), p_roots(std::max(m - 1, 0));
  for (int j = 1; j <= m; ++j) q_roots[j - 1] = t.root(j);
  for (int j = 2; j <= m; ++j) p_roots[j - 2] = t.root(j);

  t.c = poly::expand_from_roots(q_roots);
  t.lambda = poly::expand_from_roots(p_roots);

  const double x1 = t.root(1);
  t.s_cap = RVec(m);
  t.s_cap[0] = poly::eval(t.lambda, x1);  // S_{m,0} = P_m(x_1)
  const RVec quotient = poly::deflate(t.lambda, x1);
  for (int l = 1; l < m; ++l) t.s_cap[l] = quotient[l - 1];

  // Runtime self-checks of the proof identities.
  for (int j = 0; j <= m; ++j) {
    const double lam_prev = (j >= 1 && j - 1 < m) ? t.lambda[j - 1] : 0.0;
    const double lam = (j < m) ? t.lambda[j] : 0.0;
    check_identity(t.c[j], lam_prev - x1 * lam, "c = lambda' - x1 lambda");
  }
  for (int l = 0; l < m; ++l) {
    const double s_next = (l + 1 < m) ? t.s_cap[l + 1] : 0.0;
    check_identity(t.lambda[l], t.s_cap[l] - x1 * s_next, "lambda = S - x1 S'");
  }
  return t;
}

SmoothTable smooth_table(int m) {
  if (m < 1) throw ParameterError("smooth_table: m must be >= 1");

  SmoothTable t;
  t.m = m;
  RVec roots(std::max(m - 1, 0));
  for (int j = 2; j <= m; ++j) roots[j - 2] = static_cast<double>(j) * j;
  t.p = poly::expand_from_roots(roots);
  t.p_at_one = poly::eval(t.p, 1.0);
  t.s = poly::deflate(t.p, 1.0);

  double fact = 1.0;  // (m-1)! (m+1)! / 2
  for (int i = 2; i <= m - 1; ++i) fact *= i;
  for (int i = 2; i <= m + 1; ++i) fact *= i;
  fact /= 2.0;
  t.theorem_constant = (m % 2 == 0 ? -1.0 : 1.0) * fact;

  if (!approx_equal(t.theorem_constant, t.p_at_one, 1e-12, 1e-12))
    throw InternalConsistencyError("smooth_table: P_m(1) disagrees with the factorial constant");
  return t;
}

bool stability_recurrences_hold(int m, Index k, double rel_tol) {
  if (m < 1 || m > static_cast<int>(k / 2) - 1)
    throw ParameterError("stability_recurrences_hold: need 1 <= m <= floor(k/2) - 1");
  const CoefficientTable a = discrete_table(m, k);
  const CoefficientTable b = discrete_table(m + 1, k);
  const double xm1 = a.root(m + 1);

  for (int l = 0; l <= m + 1; ++l) {
    const double c_prev = (l >= 1 && l - 1 <= m) ? a.c[l - 1] : 0.0;
    const double c_cur = (l <= m) ? a.c[l] : 0.0;
    if (!approx_equal(b.c[l], c_prev - xm1 * c_cur, rel_tol, 1e-12)) return false;
  }
  for (int l = 1; l <= m; ++l) {
    const double s_prev = a.s_cap[l - 1];
    const double s_cur = (l < m) ? a.s_cap[l] : 0.0;
    if (!approx_equal(b.s_cap[l], s_prev - xm1 * s_cur, rel_tol, 1e-12)) return false;
  }
  return true;
}

}  // namespace isowirt
