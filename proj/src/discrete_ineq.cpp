#include "isowirt/discrete_ineq.hpp"

#include "isowirt/coeff_poly.hpp"

#include <cmath>
#include <functional>
#include <vector>

namespace isowirt {

namespace {

// Signed-term accumulator: tracks the positive and negative parts of a sum
// plus the total term magnitude that goes into the report's scale.
struct TermAccumulator {
  double pos = 0.0;
  double neg = 0.0;
  double mag = 0.0;

  void add(double t) {
    if (t >= 0.0)
      pos += t;
    else
      neg -= t;
    mag += std::abs(t);
  }
  double sum() const { return pos - neg; }
};

Polygon prepared(const Polygon& p, const EvalOptions& opts) {
  if (has_zero_centroid(p)) return p;
  if (opts.auto_recenter) return recenter(p);
  throw HypothesisError("polygon centroid is not zero (pass auto_recenter to translate)");
}

void check_order(int m, int lo, Index hi, const char* who) {
  if (m < lo)
    throw ParameterError(std::string(who) + ": m must be >= " + std::to_string(lo));
  if (m > static_cast<int>(hi))
    throw ParameterError(std::string(who) + ": m exceeds " + std::to_string(hi));
}

// z, zdot, ..., z^(orders)
std::vector<CVec> derivative_ladder(const CVec& z, int orders) {
  std::vector<CVec> d;
  d.reserve(orders + 1);
  d.push_back(z);
  for (int j = 1; j <= orders; ++j) d.push_back(derivative(d.back(), 1));
  return d;
}

double four_sin_sq(Index k, int j) {
  const double s = std::sin(static_cast<double>(j) * kPi / static_cast<double>(k));
  return 4.0 * s * s;
}

std::vector<long> to_modes(const std::vector<Index>& nu) {
  return std::vector<long>(nu.begin(), nu.end());
}

bool all_modes(const std::vector<Index>& active, const std::function<bool(Index)>& ok) {
  for (Index nu : active)
    if (!ok(nu)) return false;
  return true;
}

// tau z^(l+1) + 4 sin^2(pi/k) z^(l-1), squared norm
double wirtinger_i_term(const std::vector<CVec>& d, Index k, int l) {
  const double x1 = four_sin_sq(k, 1);
  return (cyclic_shift(d[l + 1], 1) + x1 * d[l - 1]).squaredNorm();
}

// Regular-polygon reference tangent factor 2 i sin(pi/k) e^{i pi/k} = omega - 1.
Complex tangent_factor(Index k) { return unit_root(k, 1) - Complex(1.0, 0.0); }

InequalityReport chakerian_common(const Polygon& p, double constant, TheoremId id,
                                  const std::function<bool(Index)>& allowed,
                                  const EvalOptions& opts) {
  const Polygon q = prepared(p, opts);
  const Index k = q.size();
  const CVec& z = q.vertices();
  const CVec t = tangent_vectors(q);

  const double s1 = std::sin(kPi / static_cast<double>(k));
  const double f = signed_area(q);
  const double s = squared_side_sum(q);
  const double lhs = s - 4.0 * std::tan(kPi / static_cast<double>(k)) * f;
  const Complex rot = Complex(0.0, 1.0) * std::polar(1.0, -kPi / static_cast<double>(k));
  const double rhs = constant * (z + rot / (2.0 * s1) * t).squaredNorm();

  const auto active = active_modes(forward_transform(z));
  const double mag =
      s + std::abs(4.0 * std::tan(kPi / static_cast<double>(k)) * f) + rhs;
  InequalityReport r =
      make_report(id, k, 0, lhs, rhs, lhs - rhs, Direction::GreaterEqual, mag,
                  to_modes(active), all_modes(active, allowed), opts.tolerance);
  if (std::abs(f) <= 1e-10 * std::max(s, 1.0)) r.flags.push_back("zero-area");
  return r;
}

}  // namespace

InequalityReport wirtinger_m(const Polygon& p, int m, const EvalOptions& opts) {
  const Polygon q = prepared(p, opts);
  const Index k = q.size();
  check_order(m, 1, k / 2, "wirtinger_m");
  const CoefficientTable t = discrete_table(m, k);
  const auto d = derivative_ladder(q.vertices(), m);

  TermAccumulator acc;
  for (int j = 0; j <= m; ++j) acc.add(t.c[j] * d[j].squaredNorm());

  const auto active = active_modes(forward_transform(q.vertices()));
  const bool ok = all_modes(active, [&](Index nu) { return nu <= m || nu >= k - m; });
  return make_report(TheoremId::WirtingerM, k, m, acc.neg, acc.pos, acc.sum(),
                     Direction::GreaterEqual, acc.mag, to_modes(active), ok,
                     opts.tolerance);
}

InequalityReport wirtinger_lambda_form(const Polygon& p, int m, const EvalOptions& opts) {
  const Polygon q = prepared(p, opts);
  const Index k = q.size();
  check_order(m, 1, k / 2, "wirtinger_lambda_form");
  const CoefficientTable t = discrete_table(m, k);
  const double x1 = four_sin_sq(k, 1);
  const auto d = derivative_ladder(q.vertices(), m);

  std::vector<double> norms(m + 1);
  for (int j = 0; j <= m; ++j) norms[j] = d[j].squaredNorm();

  TermAccumulator acc;
  for (int j = 0; j <= m - 1; ++j) {
    acc.add(t.lambda[j] * (norms[j + 1] - x1 * norms[j]));
    acc.mag += std::abs(t.lambda[j]) * 2.0 * x1 * norms[j];  // cancelled mass inside J_j
  }

  const auto active = active_modes(forward_transform(q.vertices()));
  const bool ok = all_modes(active, [&](Index nu) { return nu <= m || nu >= k - m; });
  return make_report(TheoremId::WirtingerLambda, k, m, acc.neg, acc.pos, acc.sum(),
                     Direction::GreaterEqual, acc.mag, to_modes(active), ok,
                     opts.tolerance);
}

InequalityReport wirtinger_s_form(const Polygon& p, int m, const EvalOptions& opts) {
  const Polygon q = prepared(p, opts);
  const Index k = q.size();
  check_order(m, 1, k / 2, "wirtinger_s_form");
  const CoefficientTable t = discrete_table(m, k);
  const double x1 = four_sin_sq(k, 1);
  const auto d = derivative_ladder(q.vertices(), m);

  TermAccumulator acc;
  const double j0 = d[1].squaredNorm() - x1 * d[0].squaredNorm();
  acc.add(t.s_cap[0] * j0);
  acc.mag += std::abs(t.s_cap[0]) * 2.0 * x1 * d[0].squaredNorm();
  for (int l = 1; l <= m - 1; ++l) acc.add(t.s_cap[l] * wirtinger_i_term(d, k, l));

  const auto active = active_modes(forward_transform(q.vertices()));
  const bool ok = all_modes(active, [&](Index nu) { return nu <= m || nu >= k - m; });
  return make_report(TheoremId::WirtingerS, k, m, acc.neg, acc.pos, acc.sum(),
                     Direction::GreaterEqual, acc.mag, to_modes(active), ok,
                     opts.tolerance);
}

InequalityReport stability_c(const Polygon& p, int m, const EvalOptions& opts) {
  const Polygon q = prepared(p, opts);
  const Index k = q.size();
  check_order(m, 1, k / 2 - 1, "stability_c");
  const CoefficientTable t = discrete_table(m, k);
  const double xm1 = four_sin_sq(k, m + 1);
  const auto d = derivative_ladder(q.vertices(), m + 1);

  double lhs = 0.0, rhs = 0.0, mag = 0.0;
  for (int l = 0; l <= m; ++l) {
    lhs += t.c[l] * d[l].squaredNorm();
    rhs += t.c[l] * d[l + 1].squaredNorm() / xm1;
    mag += std::abs(t.c[l]) * (d[l].squaredNorm() + d[l + 1].squaredNorm() / xm1);
  }

  const auto active = active_modes(forward_transform(q.vertices()));
  const bool ok =
      all_modes(active, [&](Index nu) { return nu <= m + 1 || nu >= k - m - 1; });
  return make_report(TheoremId::StabilityC, k, m, lhs, rhs, rhs - lhs,
                     Direction::LessEqual, mag, to_modes(active), ok, opts.tolerance);
}

InequalityReport stability_s(const Polygon& p, int m, const EvalOptions& opts) {
  const Polygon q = prepared(p, opts);
  const Index k = q.size();
  check_order(m, 1, k / 2 - 1, "stability_s");
  const CoefficientTable t = discrete_table(m, k);
  const double x1 = four_sin_sq(k, 1);
  const double xm1 = four_sin_sq(k, m + 1);
  const auto d = derivative_ladder(q.vertices(), m + 1);

  const double j0 = d[1].squaredNorm() - x1 * d[0].squaredNorm();
  double lhs = t.s_cap[0] * j0;
  double mag = std::abs(t.s_cap[0]) * (d[1].squaredNorm() + x1 * d[0].squaredNorm());
  for (int l = 1; l <= m - 1; ++l) {
    lhs += t.s_cap[l] * wirtinger_i_term(d, k, l);
    mag += std::abs(t.s_cap[l]) * wirtinger_i_term(d, k, l);
  }

  double bracket = x1 * t.s_cap[0] * j0;
  for (int l = 0; l <= m - 1; ++l) {
    const double tail = wirtinger_i_term(d, k, l + 1);
    bracket += t.s_cap[l] * tail;
    mag += std::abs(t.s_cap[l]) * tail / xm1;
  }
  const double rhs = bracket / xm1;

  const auto active = active_modes(forward_transform(q.vertices()));
  const bool ok =
      all_modes(active, [&](Index nu) { return nu <= m + 1 || nu >= k - m - 1; });
  return make_report(TheoremId::StabilityS, k, m, lhs, rhs, rhs - lhs,
                     Direction::LessEqual, mag, to_modes(active), ok, opts.tolerance);
}

InequalityReport chakerian_v1(const Polygon& p, const EvalOptions& opts) {
  const Index k = p.size();
  const double t1 = std::tan(kPi / static_cast<double>(k));
  return chakerian_common(
      p, 2.0 * t1 * t1, TheoremId::ChakerianV1,
      [k](Index nu) { return nu == 1 || nu == k - 1; }, opts);
}

InequalityReport chakerian_v2(const Polygon& p, const EvalOptions& opts) {
  const Index k = p.size();
  const double s1 = std::sin(kPi / static_cast<double>(k));
  return chakerian_common(
      p, 2.0 * s1 * s1, TheoremId::ChakerianV2, [](Index nu) { return nu == 1; }, opts);
}

InequalityReport isoperimetric_higher(const Polygon& p, int m, const EvalOptions& opts) {
  const Polygon q = prepared(p, opts);
  const Index k = q.size();
  check_order(m, 1, k / 2, "isoperimetric_higher");
  const CoefficientTable t = discrete_table(m, k);
  const double x1 = four_sin_sq(k, 1);
  const double c1 = std::cos(kPi / static_cast<double>(k));

  const CVec& z = q.vertices();
  const CVec tv = tangent_vectors(q);
  const double f = signed_area(q);
  const double s = squared_side_sum(q);
  const double iso_deficit = s - 4.0 * std::tan(kPi / static_cast<double>(k)) * f;
  const double reg_dev = (tv - tangent_factor(k) * z).squaredNorm();

  TermAccumulator acc;
  acc.add(2.0 * t.s_cap[0] * c1 * c1 * iso_deficit);
  acc.mag += 2.0 * std::abs(t.s_cap[0]) * c1 * c1 *
             std::abs(4.0 * std::tan(kPi / static_cast<double>(k)) * f);
  acc.add(-t.s_cap[0] * reg_dev);

  CVec w = curvature_vectors(q) + x1 * z;
  for (int l = 1; l <= m - 1; ++l) {
    acc.add(t.s_cap[l] * w.squaredNorm());
    w = derivative(w, 1);
  }

  const auto active = active_modes(forward_transform(z));
  const bool ok = all_modes(active, [&](Index nu) { return nu <= m || nu >= k - m; });
  InequalityReport r = make_report(TheoremId::DiscreteHigher, k, m, acc.neg, acc.pos,
                                   acc.sum(), Direction::GreaterEqual, acc.mag,
                                   to_modes(active), ok, opts.tolerance);
  r.flags.push_back(m % 2 == 1 ? "deficit-lower-bound" : "deficit-upper-bound");
  return r;
}

std::pair<double, double> chakerian_identity(const Polygon& p) {
  const Index k = p.size();
  const CVec& z = p.vertices();
  const CVec t = tangent_vectors(p);
  const double x1 = four_sin_sq(k, 1);
  const double c1 = std::cos(kPi / static_cast<double>(k));

  const double left = t.squaredNorm() - x1 * z.squaredNorm();
  const double right =
      2.0 * c1 * c1 *
          (squared_side_sum(p) -
           4.0 * std::tan(kPi / static_cast<double>(k)) * signed_area(p)) -
      (t - tangent_factor(k) * z).squaredNorm();
  return {left, right};
}

InequalityReport equilateral_bound(const Polygon& p, const EvalOptions& opts) {
  if (!is_equilateral(p))
    throw HypothesisError("equilateral_bound: polygon sides are not of equal length");
  const Polygon q = recenter(p);
  const Index k = q.size();

  const double length = perimeter(q);
  const double lhs = length * length;
  const double rhs = 4.0 * static_cast<double>(k) *
                     std::tan(kPi / static_cast<double>(k)) * std::abs(signed_area(q));

  const auto active = active_modes(forward_transform(q.vertices()));
  const bool single_regular_mode =
      active.size() == 1 && (active[0] == 1 || active[0] == k - 1);
  return make_report(TheoremId::EquilateralBound, k, 0, lhs, rhs, lhs - rhs,
                     Direction::GreaterEqual, lhs + rhs, to_modes(active),
                     single_regular_mode, opts.tolerance);
}

InequalityReport length_form_even(const Polygon& p, int m, const EvalOptions& opts) {
  if (m % 2 != 0) throw ParameterError("length_form_even: m must be even");
  const Polygon q = prepared(p, opts);
  const Index k = q.size();
  check_order(m, 2, k / 2, "length_form_even");
  const CoefficientTable t = discrete_table(m, k);
  const double x1 = four_sin_sq(k, 1);
  const double c1 = std::cos(kPi / static_cast<double>(k));
  const double s_abs = std::abs(t.s_cap[0]);
  const double kd = static_cast<double>(k);

  const CVec& z = q.vertices();
  const double f = signed_area(q);
  const double length = perimeter(q);
  const double lhs =
      2.0 * c1 * c1 * (length * length - 4.0 * kd * std::tan(kPi / kd) * f);

  double rhs = kd * (tangent_vectors(q) - tangent_factor(k) * z).squaredNorm();
  double mag = std::abs(lhs) + 2.0 * c1 * c1 * std::abs(4.0 * kd * std::tan(kPi / kd) * f) +
               rhs;
  CVec w = curvature_vectors(q) + x1 * z;
  for (int l = 1; l <= m - 1; ++l) {
    const double term = kd / s_abs * t.s_cap[l] * w.squaredNorm();
    rhs += term;
    mag += std::abs(term);
    w = derivative(w, 1);
  }

  const auto active = active_modes(forward_transform(z));
  const bool single_low_mode =
      active.size() == 1 && (active[0] <= m || active[0] >= k - m);
  return make_report(TheoremId::LengthFormEven, k, m, lhs, rhs, rhs - lhs,
                     Direction::LessEqual, mag, to_modes(active), single_low_mode,
                     opts.tolerance);
}

SparseModeResult sparse_mode_check(const std::map<long, Complex>& coeffs,
                                   double rel_threshold) {
  double total = 0.0, peak = 0.0;
  for (const auto& [p, a] : coeffs) {
    if (p == 0) throw ParameterError("sparse_mode_check: index 0 is not allowed");
    total += std::norm(a);
    peak = std::max(peak, std::abs(a));
  }

  SparseModeResult res;
  for (const auto& [p, a] : coeffs)
    if (std::abs(a) > tol::kActiveMode * peak) ++res.nonzero_count;

  // Per-lag accumulation; the lags n = p - q are small, a flat map is enough.
  std::map<long, Complex> corr;
  for (const auto& [p, ap] : coeffs)
    for (const auto& [q, aq] : coeffs)
      if (p != q) corr[p - q] += ap * std::conj(aq);
  for (const auto& [n, c] : corr) res.max_correlation = std::max(res.max_correlation, std::abs(c));

  res.correlations_vanish = res.max_correlation <= rel_threshold * std::max(total, 1e-300);
  return res;
}

}  // namespace isowirt
