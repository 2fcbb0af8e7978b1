#include "isowirt/smooth_curve.hpp"

#include "isowirt/coeff_poly.hpp"
#include "isowirt/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace isowirt {

FourierCurve::FourierCurve(std::map<long, Complex> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (!std::isfinite(it->second.real()) || !std::isfinite(it->second.imag()))
      throw ParameterError("FourierCurve: non-finite coefficient");
    if (it->second == Complex(0.0, 0.0) && it->first != 0)
      it = coeffs_.erase(it);
    else
      ++it;
  }
  for (const auto& [n, a] : coeffs_) degree_ = std::max(degree_, std::labs(n));
  if (degree_ < 1) throw ParameterError("FourierCurve: truncation degree must be >= 1");
}

Complex FourierCurve::coeff(long n) const {
  const auto it = coeffs_.find(n);
  return it == coeffs_.end() ? Complex(0.0, 0.0) : it->second;
}

FourierCurve FourierCurve::derivative(int order) const {
  if (order < 0) throw ParameterError("FourierCurve::derivative: negative order");
  std::map<long, Complex> out;
  for (const auto& [n, a] : coeffs_) {
    Complex c = a;
    for (int j = 0; j < order; ++j) c *= Complex(0.0, static_cast<double>(n));
    out[n] = c;
  }
  return FourierCurve(std::move(out));
}

Complex FourierCurve::evaluate(double t) const {
  Complex acc = 0.0;
  for (const auto& [n, a] : coeffs_) acc += a * std::polar(1.0, n * t);
  return acc;
}

FourierCurve FourierCurve::recentered() const {
  std::map<long, Complex> out = coeffs_;
  out.erase(0);
  return FourierCurve(std::move(out));
}

double FourierCurve::speed_deviation() const {
  const long grid = std::max<long>(8 * degree_ + 1, 257);
  std::vector<double> speed(grid);
  const FourierCurve d = derivative();
  double mean = 0.0;
  for (long j = 0; j < grid; ++j) {
    speed[j] = std::abs(d.evaluate(kTwoPi * j / grid));
    mean += speed[j];
  }
  mean /= static_cast<double>(grid);
  if (mean == 0.0) return 0.0;
  double dev = 0.0;
  for (double s : speed) dev = std::max(dev, std::abs(s - mean));
  return dev / mean;
}

namespace {

double max_coeff_abs(const FourierCurve& c) {
  double peak = 0.0;
  for (const auto& [n, a] : c.coeffs()) peak = std::max(peak, std::abs(a));
  return peak;
}

FourierCurve prepared_zero_mean(const FourierCurve& c, bool auto_recenter) {
  if (std::abs(c.coeff(0)) <= 1e-12 * max_coeff_abs(c)) return c;
  if (auto_recenter) return c.recentered();
  throw HypothesisError("curve mean a_0 is not zero (pass auto_recenter to translate)");
}

std::vector<long> curve_active_modes(const FourierCurve& c) {
  const double peak = max_coeff_abs(c);
  std::vector<long> out;
  if (peak == 0.0) return out;
  for (const auto& [n, a] : c.coeffs())
    if (std::abs(a) > tol::kActiveMode * peak) out.push_back(n);
  return out;
}

// Int |z^(l+1) + z^(l-1)|^2 dt = 2 pi sum_n n^{2(l-1)} (1 - n^2)^2 |a_n|^2
double bracket_integral(const FourierCurve& c, int l) {
  double acc = 0.0;
  for (const auto& [n, a] : c.coeffs()) {
    const double nn = static_cast<double>(n) * n;
    acc += std::pow(nn, l - 1) * (1.0 - nn) * (1.0 - nn) * std::norm(a);
  }
  return kTwoPi * acc;
}

struct SignedSum {
  double pos = 0.0, neg = 0.0, mag = 0.0;
  void add(double t) {
    if (t >= 0.0)
      pos += t;
    else
      neg -= t;
    mag += std::abs(t);
  }
  double sum() const { return pos - neg; }
};

}  // namespace

double curve_length(const FourierCurve& c) {
  if (c.speed_deviation() <= kConstantSpeedTol) {
    double acc = 0.0;  // Int |z'|^2 = 2 pi sum n^2 |a_n|^2
    for (const auto& [n, a] : c.coeffs())
      acc += static_cast<double>(n) * n * std::norm(a);
    return std::sqrt(kTwoPi * kTwoPi * acc);
  }
  const long grid = std::max<long>(8 * c.degree() + 1, 257);
  const FourierCurve d = c.derivative();
  double acc = 0.0;
  for (long j = 0; j < grid; ++j) acc += std::abs(d.evaluate(kTwoPi * j / grid));
  return acc * kTwoPi / static_cast<double>(grid);
}

double curve_area(const FourierCurve& c) {
  double acc = 0.0;
  for (const auto& [n, a] : c.coeffs()) acc += static_cast<double>(n) * std::norm(a);
  return kPi * acc;
}

InequalityReport gen_wirtinger(const FourierCurve& curve, int m,
                               const SmoothEvalOptions& opts) {
  if (m < 1) throw ParameterError("gen_wirtinger: m must be >= 1");
  const FourierCurve c = prepared_zero_mean(curve, opts.auto_recenter);
  const SmoothTable t = smooth_table(m);

  SignedSum acc;
  double wirt = 0.0, wirt_mag = 0.0;  // Int (|z'|^2 - |z|^2)
  for (const auto& [n, a] : c.coeffs()) {
    const double nn = static_cast<double>(n) * n;
    wirt += (nn - 1.0) * std::norm(a);
    wirt_mag += (nn + 1.0) * std::norm(a);
  }
  acc.add(t.p_at_one * kTwoPi * wirt);
  acc.mag += std::abs(t.p_at_one) * kTwoPi * (wirt_mag - std::abs(wirt));
  for (int l = 1; l <= m - 1; ++l) acc.add(t.s[l - 1] * bracket_integral(c, l));

  const auto modes = curve_active_modes(c);
  bool ok = true;
  for (long n : modes)
    if (std::labs(n) > m) ok = false;
  return make_report(TheoremId::GenWirtinger, 0, m, acc.neg, acc.pos, acc.sum(),
                     Direction::GreaterEqual, acc.mag, modes, ok, opts.tolerance);
}

InequalityReport smooth_isoperimetric(const FourierCurve& curve, int m,
                                      const SmoothEvalOptions& opts) {
  if (m < 1) throw ParameterError("smooth_isoperimetric: m must be >= 1");
  FourierCurve c = curve;
  if (c.speed_deviation() > kConstantSpeedTol) {
    if (!opts.auto_reparametrize)
      throw HypothesisError(
          "smooth_isoperimetric: curve is not constant-speed "
          "(pass auto_reparametrize to resample)");
    const long deg = opts.reparam_degree > 0 ? opts.reparam_degree : c.degree();
    c = reparametrize_by_arclength(c, deg);
    if (c.speed_deviation() > kConstantSpeedTol)
      throw HypothesisError(
          "smooth_isoperimetric: reparametrization at degree " + std::to_string(deg) +
          " left residual speed deviation; raise reparam_degree");
  }
  // The centroid hypothesis refers to the arc-length parametrization, so it
  // is enforced after any resampling.
  c = prepared_zero_mean(c, opts.auto_recenter);

  const double area = curve_area(c);
  if (area <= 0.0)
    throw HypothesisError("smooth_isoperimetric: curve is not positively oriented");
  const double len = curve_length(c);
  const SmoothTable t = smooth_table(m);
  const double jac = len / kTwoPi;  // ds = (L / 2 pi) dt

  // (2 pi / L) Int_C |z - (L/2pi) n|^2 ds = Int_0^{2pi} |z + i z'|^2 dt
  double normal_dist = 0.0;
  for (const auto& [n, a] : c.coeffs())
    normal_dist += (1.0 - n) * (1.0 - n) * std::norm(a);
  normal_dist *= kTwoPi;

  SignedSum acc;
  acc.add(jac * t.p_at_one / kPi * len * len);
  acc.add(-jac * t.p_at_one * 4.0 * area);
  acc.add(-jac * t.p_at_one * normal_dist);
  for (int l = 1; l <= m - 1; ++l) acc.add(jac * t.s[l - 1] * bracket_integral(c, l));

  const auto modes = curve_active_modes(c);
  const bool circle = modes.size() == 1 && modes[0] == 1;
  InequalityReport r =
      make_report(TheoremId::SmoothIsoperimetric, 0, m, acc.neg, acc.pos, acc.sum(),
                  Direction::GreaterEqual, acc.mag, modes, circle, opts.tolerance);
  r.flags.push_back("simplicity-unchecked");
  return r;
}

FourierCurve reparametrize_by_arclength(const FourierCurve& c, long target_degree) {
  if (target_degree < 1)
    throw ParameterError("reparametrize_by_arclength: target degree must be >= 1");
  const FourierCurve vel = c.derivative();

  // Dense speed samples; reject curves that come close to stalling.
  const long grid = std::max<long>({16 * target_degree, 16 * c.degree(), 1024});
  CVec speed(grid);
  double peak = 0.0, trough = std::numeric_limits<double>::infinity();
  for (long j = 0; j < grid; ++j) {
    const double s = std::abs(vel.evaluate(kTwoPi * j / grid));
    speed[j] = s;
    peak = std::max(peak, s);
    trough = std::min(trough, s);
  }
  if (trough <= 1e-9 * peak)
    throw DegenerateCurveError("reparametrize_by_arclength: vanishing speed");

  // Spectrally accurate antiderivative of the speed: s(t) = c_0 t +
  // sum_{q != 0} c_q (e^{iqt} - 1) / (iq), from the FFT of the samples.
  const CVec shat = forward_transform(speed).coeffs();
  const double mean_speed = shat[0].real();
  const double total_len = kTwoPi * mean_speed;
  const auto arclen = [&](double t) {
    Complex acc = mean_speed * t;
    for (long q = 1; q < grid; ++q) {
      const long sq = q <= grid / 2 ? q : q - grid;
      const Complex iq(0.0, static_cast<double>(sq));
      acc += shat[q] * (std::polar(1.0, sq * t) - 1.0) / iq;
    }
    return acc.real();
  };

  // Invert s(t) = sigma_i by safeguarded Newton, then resample z.
  const long samples = std::max<long>(16 * target_degree, 64);
  CVec resampled(samples);
  double t = 0.0;
  for (long i = 0; i < samples; ++i) {
    const double target = total_len * static_cast<double>(i) / static_cast<double>(samples);
    for (int it = 0; it < 60; ++it) {
      const double f = arclen(t) - target;
      if (std::abs(f) <= 1e-14 * total_len) break;
      const double dv = std::abs(vel.evaluate(t));
      t -= f / dv;
    }
    resampled[i] = c.evaluate(t);
  }

  const CVec coeffs = forward_transform(resampled).coeffs();
  std::map<long, Complex> out;
  for (long q = 0; q < samples; ++q) {
    const long sq = q <= samples / 2 ? q : q - samples;
    if (std::labs(sq) <= target_degree) out[sq] = coeffs[q];
  }
  return FourierCurve(std::move(out));
}

}  // namespace isowirt
