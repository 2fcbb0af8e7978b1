#include "isowirt/chernoff.hpp"

#include <algorithm>
#include <cmath>

namespace isowirt {

SupportFunction::SupportFunction(std::map<long, Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  double peak = 0.0;
  for (const auto& [n, a] : coeffs_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw ParameterError("SupportFunction: non-finite coefficient");
    peak = std::max(peak, std::abs(a));
  }
  const auto at = [&](long n) {
    const auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Complex(0.0, 0.0) : it->second;
  };
  for (const auto& [n, a] : coeffs_)
    if (std::abs(at(-n) - std::conj(a)) > 1e-14 * std::max(peak, 1.0))
      throw ParameterError("SupportFunction: reality constraint a_{-n} = conj(a_n) violated");
  // Symmetrize exactly, with the n >= 0 entries as the canonical ones.
  std::map<long, Complex> sym;
  for (const auto& [n, a] : coeffs_) {
    if (n >= 0) {
      sym[n] = n == 0 ? Complex(a.real(), 0.0) : a;
      if (n > 0) sym[-n] = std::conj(a);
    } else if (!sym.count(-n) && !coeffs_.count(-n)) {
      sym[n] = a;
      sym[-n] = std::conj(a);
    }
  }
  coeffs_ = std::move(sym);
  degree_ = 0;
  for (const auto& [n, a] : coeffs_) degree_ = std::max(degree_, std::labs(n));
}

SupportFunction SupportFunction::circle(double radius) {
  return SupportFunction({{0, Complex(radius, 0.0)}});
}

SupportFunction SupportFunction::from_harmonics(double a0,
                                                const std::map<long, Complex>& upper) {
  std::map<long, Complex> c;
  c[0] = Complex(a0, 0.0);
  for (const auto& [n, a] : upper) {
    if (n <= 0) throw ParameterError("from_harmonics: indices must be positive");
    c[n] = a;
    c[-n] = std::conj(a);
  }
  return SupportFunction(std::move(c));
}

Complex SupportFunction::coeff(long n) const {
  const auto it = coeffs_.find(n);
  return it == coeffs_.end() ? Complex(0.0, 0.0) : it->second;
}

double SupportFunction::evaluate(double theta) const {
  Complex acc = 0.0;
  for (const auto& [n, a] : coeffs_) acc += a * std::polar(1.0, n * theta);
  return acc.real();
}

SupportFunction SupportFunction::derivative(int order) const {
  if (order < 0) throw ParameterError("SupportFunction::derivative: negative order");
  SupportFunction out;
  for (const auto& [n, a] : coeffs_) {
    Complex c = a;
    for (int j = 0; j < order; ++j) c *= Complex(0.0, static_cast<double>(n));
    if (c != Complex(0.0, 0.0) || n == 0) out.coeffs_[n] = c;
  }
  for (const auto& [n, a] : out.coeffs_) out.degree_ = std::max(out.degree_, std::labs(n));
  return out;
}

bool SupportFunction::convexity_certificate() const {
  const SupportFunction rho = apply_A(*this);
  const long grid = 4 * std::max(degree_, 1L) + 1;
  for (long j = 0; j < grid; ++j)
    if (rho.evaluate(kTwoPi * j / grid) <= 0.0) return false;
  return true;
}

std::map<long, Complex> fourier_product(const std::map<long, Complex>& a,
                                        const std::map<long, Complex>& b) {
  std::map<long, Complex> out;
  for (const auto& [n, an] : a)
    for (const auto& [m, bm] : b) out[n + m] += an * bm;
  return out;
}

std::map<long, Complex> fourier_shift(const std::map<long, Complex>& a, double shift) {
  std::map<long, Complex> out;
  for (const auto& [n, an] : a) out[n] = an * std::polar(1.0, n * shift);
  return out;
}

double fourier_integral(const std::map<long, Complex>& a, double upper) {
  Complex acc = 0.0;
  for (const auto& [n, an] : a) {
    if (n == 0)
      acc += an * upper;
    else
      acc += an * (std::polar(1.0, n * upper) - 1.0) / Complex(0.0, static_cast<double>(n));
  }
  return acc.real();
}

double t_k_eigenvalue(int k, long n) {
  if (k < 2) throw ParameterError("t_k_eigenvalue: k must be >= 2");
  if (n % k != 0) return 0.0;
  return (std::labs(n / k) % 2 == 0) ? 1.0 : -1.0;
}

SupportFunction apply_T_k(const SupportFunction& h, int k) {
  if (k < 2) throw ParameterError("apply_T_k: k must be >= 2");
  std::map<long, Complex> out;
  for (const auto& [n, a] : h.coeffs()) {
    const double beta = t_k_eigenvalue(k, n);
    if (beta != 0.0 || n == 0) out[n] = beta * a;
  }
  if (out.empty()) out[0] = Complex(0.0, 0.0);
  return SupportFunction(std::move(out));
}

SupportFunction apply_A(const SupportFunction& h) {
  std::map<long, Complex> out;
  for (const auto& [n, a] : h.coeffs())
    out[n] = (1.0 - static_cast<double>(n) * n) * a;
  return SupportFunction(std::move(out));
}

SupportFunction width_k(const SupportFunction& h, int k) {
  if (k < 2) throw ParameterError("width_k: k must be >= 2");
  std::map<long, Complex> out;
  out[0] = Complex(0.0, 0.0);
  for (const auto& [n, a] : h.coeffs())
    if (n % k == 0) out[n] = static_cast<double>(k) * a;
  return SupportFunction(std::move(out));
}

double locus_area(const SupportFunction& h, int j) {
  if (j < 0) throw ParameterError("locus_area: order must be >= 0");
  double acc = 0.0;
  for (const auto& [n, a] : h.coeffs()) {
    const double nn = static_cast<double>(n) * n;
    acc += std::pow(nn, j) * (1.0 - nn) * std::norm(a);
  }
  return kPi * acc;
}

double mixed_area(const SupportFunction& h1, const SupportFunction& h2, int j) {
  if (j < 0) throw ParameterError("mixed_area: order must be >= 0");
  Complex acc = 0.0;
  for (const auto& [n, a] : h1.coeffs()) {
    const double nn = static_cast<double>(n) * n;
    acc += std::pow(nn, j) * (1.0 - nn) * a * std::conj(h2.coeff(n));
  }
  return kPi * acc.real();
}

namespace {

std::vector<long> support_active_modes(const SupportFunction& h) {
  double peak = 0.0;
  for (const auto& [n, a] : h.coeffs()) peak = std::max(peak, std::abs(a));
  std::vector<long> out;
  if (peak == 0.0) return out;
  for (const auto& [n, a] : h.coeffs())
    if (std::abs(a) > tol::kActiveMode * peak) out.push_back(n);
  return out;
}

bool circle_modes_only(const std::vector<long>& modes) {
  for (long n : modes)
    if (std::labs(n) >= 2) return false;
  return true;
}

double binom(int n, int r) {
  if (r < 0 || r > n) return 0.0;
  double acc = 1.0;
  for (int i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
  return acc;
}

void check_chernoff_params(int k, int m) {
  if (k < 2) throw ParameterError("chernoff: k must be >= 2");
  if (m < 1) throw ParameterError("chernoff: m must be >= 1");
}

void check_convexity(const SupportFunction& h, const ChernoffOptions& opts,
                     InequalityReport& r, int k) {
  if (!opts.require_convexity) return;
  r.flags.push_back("convexity-certified");
  const SupportFunction tk = apply_T_k(h, k);
  r.flags.push_back(tk.convexity_certificate() ? "tk-image-convexity-certified"
                                               : "tk-image-convexity-failed");
}

}  // namespace

InequalityReport chernoff_core(const SupportFunction& h, int k, int m,
                               const ChernoffOptions& opts) {
  check_chernoff_params(k, m);
  if (opts.require_convexity && !h.convexity_certificate())
    throw HypothesisError("chernoff_core: convexity certificate failed");

  double deficit = 0.0;
  for (const auto& [n, a] : h.coeffs()) {
    const double gap = t_k_eigenvalue(k, n) - (1.0 - static_cast<double>(n) * n);
    deficit += std::pow(gap, m) * std::norm(a);
  }
  deficit *= kTwoPi;

  const auto modes = support_active_modes(h);
  InequalityReport r =
      make_report(TheoremId::ChernoffCore, k, m, deficit, 0.0, deficit,
                  Direction::GreaterEqual, deficit, modes, circle_modes_only(modes),
                  opts.tolerance);
  check_convexity(h, opts, r, k);
  return r;
}

InequalityReport chernoff_theorem(const SupportFunction& h, int k, int m,
                                  const ChernoffOptions& opts) {
  check_chernoff_params(k, m);
  if (opts.require_convexity && !h.convexity_certificate())
    throw HypothesisError("chernoff_theorem: convexity certificate failed");

  const bool odd = (m % 2 == 1);
  const SupportFunction tk_h = apply_T_k(h, k);
  const SupportFunction tk2_h = apply_T_k(tk_h, k);
  const SupportFunction wk = width_k(h, k);

  double plus = 0.0, minus = 0.0, mag = 0.0;
  const auto put = [&](double term, bool on_plus_side) {
    (on_plus_side ? plus : minus) += term;
    mag += std::abs(term);
  };

  // Locus-area group sum_r (-1)^r binom(m-1, r) F[gamma_(r)]:
  // subtracted for odd m, added for even m.
  for (int r = 0; r <= m - 1; ++r)
    put((r % 2 ? -1.0 : 1.0) * binom(m - 1, r) * locus_area(h, r), !odd);

  // Generalized-width term.
  if (odd) {
    const auto prod =
        fourier_product(wk.coeffs(), fourier_shift(wk.coeffs(), kPi / k));
    put(fourier_integral(prod, kPi / k) / k, true);
  } else {
    const auto prod = fourier_product(wk.coeffs(), wk.coeffs());
    put(fourier_integral(prod, kTwoPi / k) / (2.0 * k), true);
  }

  // Mixed-area groups with T_k gamma (odd j) and T_k^2 gamma (even j).
  for (int j = 1; j <= m - 1; ++j) {
    const bool j_odd = (j % 2 == 1);
    const SupportFunction& other = j_odd ? tk_h : tk2_h;
    // odd m: T_k group added, T_k^2 group subtracted; flipped for even m.
    const bool side = odd ? j_odd : !j_odd;
    for (int r = 0; r <= m - 1 - j; ++r)
      put((r % 2 ? -1.0 : 1.0) * binom(m, j) * binom(m - 1 - j, r) *
              mixed_area(h, other, r),
          side);
  }

  const auto modes = support_active_modes(h);
  // The displayed sides sum to half of Int h (T_k - A)^m [h]; double the
  // slack so this report and chernoff_core quantify the same deficit.
  InequalityReport r = make_report(TheoremId::ChernoffTheorem, k, m, minus, plus,
                                   2.0 * (plus - minus), Direction::LessEqual,
                                   2.0 * mag, modes, circle_modes_only(modes),
                                   opts.tolerance);
  r.flags.push_back(odd ? "odd-m-form" : "even-m-form");
  check_convexity(h, opts, r, k);
  return r;
}

std::pair<double, double> binomial_area_identity(const SupportFunction& h, int m) {
  if (m < 1) throw ParameterError("binomial_area_identity: m must be >= 1");
  SupportFunction am = h;
  for (int i = 0; i < m; ++i) am = apply_A(am);
  Complex left = 0.0;
  for (const auto& [n, a] : h.coeffs()) left += a * std::conj(am.coeff(n));
  double right = 0.0;
  for (int r = 0; r <= m - 1; ++r)
    right += (r % 2 ? -2.0 : 2.0) * binom(m - 1, r) * locus_area(h, r);
  return {kTwoPi * left.real(), right};
}

std::vector<Complex> support_curve_points(const SupportFunction& h, int samples,
                                          int order) {
  if (samples < 3) throw ParameterError("support_curve_points: need >= 3 samples");
  if (order < 0) throw ParameterError("support_curve_points: negative order");
  const SupportFunction hj = h.derivative(order);
  const SupportFunction hj1 = h.derivative(order + 1);
  Complex rot(1.0, 0.0);  // i^order, exactly
  for (int j = 0; j < order % 4; ++j) rot *= Complex(0.0, 1.0);
  std::vector<Complex> pts(samples);
  for (int i = 0; i < samples; ++i) {
    const double theta = kTwoPi * i / samples;
    const Complex normal = std::polar(1.0, theta);
    pts[i] = rot * normal *
             Complex(hj.evaluate(theta), hj1.evaluate(theta));
  }
  return pts;
}

}  // namespace isowirt
