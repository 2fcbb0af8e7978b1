#include "isowirt/fourier.hpp"

#include <algorithm>
#include <vector>

namespace isowirt {

Complex unit_root(Index k, Index nu) {
  Index r = nu % k;
  if (r < 0) r += k;
  return std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(k));
}

namespace {

Index smallest_prime_factor(Index n) {
  for (Index p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

// Unnormalized X_nu = sum_j x_j e^{sign 2 pi i j nu / n}, sign = +-1.
CVec dft_direct(const CVec& x, int sign) {
  const Index n = x.size();
  std::vector<Complex> roots(n);
  for (Index j = 0; j < n; ++j)
    roots[j] = std::polar(1.0, sign * kTwoPi * static_cast<double>(j) / static_cast<double>(n));
  CVec out(n);
  for (Index nu = 0; nu < n; ++nu) {
    Complex acc = 0.0;
    for (Index j = 0; j < n; ++j) acc += x[j] * roots[(j * nu) % n];
    out[nu] = acc;
  }
  return out;
}

// Mixed-radix Cooley-Tukey; prime sizes fall back to the direct sum.
CVec dft_recursive(const CVec& x, int sign) {
  const Index n = x.size();
  if (n < kFastTransformThreshold) return dft_direct(x, sign);
  const Index p = smallest_prime_factor(n);
  if (p == n) return dft_direct(x, sign);
  const Index m = n / p;

  std::vector<CVec> sub(p);
  for (Index a = 0; a < p; ++a) {
    CVec slice(m);
    for (Index b = 0; b < m; ++b) slice[b] = x[a + p * b];
    sub[a] = dft_recursive(slice, sign);
  }

  CVec out(n);
  for (Index nu = 0; nu < n; ++nu) {
    Complex acc = 0.0;
    for (Index a = 0; a < p; ++a) {
      const Complex tw = std::polar(
          1.0, sign * kTwoPi * static_cast<double>((a * nu) % n) / static_cast<double>(n));
      acc += tw * sub[a][nu % m];
    }
    out[nu] = acc;
  }
  return out;
}

}  // namespace

Spectrum forward_transform(const CVec& z) {
  if (z.size() < 1) throw ParameterError("forward_transform: empty sequence");
  CVec c = dft_recursive(z, -1);
  c /= static_cast<double>(z.size());
  return Spectrum(std::move(c));
}

CVec inverse_transform(const Spectrum& s) {
  if (s.size() < 1) throw ParameterError("inverse_transform: empty spectrum");
  return dft_recursive(s.coeffs(), +1);
}

CVec cyclic_shift(const CVec& z, Index n) {
  const Index k = z.size();
  Index r = n % k;
  if (r < 0) r += k;
  CVec out(k);
  for (Index j = 0; j < k; ++j) out[(j + r) % k] = z[j];
  return out;
}

CVec derivative(const CVec& z, int order) {
  if (order < 0) throw ParameterError("derivative: negative order");
  CVec d = z;
  for (int j = 0; j < order; ++j) d = CVec(cyclic_shift(d, -1) - d);
  return d;
}

Complex inner_product(const CVec& z, const CVec& w) {
  if (z.size() != w.size())
    throw DimensionError("inner_product: incompatible polygon sizes " +
                         std::to_string(z.size()) + " vs " + std::to_string(w.size()));
  return (z.array() * w.array().conjugate()).sum();
}

double parseval_norm(const CVec& z, int order) {
  if (order < 0) throw ParameterError("parseval_norm: negative order");
  const Index k = z.size();
  const Spectrum s = forward_transform(z);
  double acc = 0.0;
  for (Index nu = 0; nu < k; ++nu) {
    const double snu = std::sin(kPi * static_cast<double>(nu) / static_cast<double>(k));
    acc += std::pow(4.0 * snu * snu, order) * std::norm(s.coeffs()[nu]);
  }
  return static_cast<double>(k) * acc;
}

std::vector<Index> active_modes(const Spectrum& s, double rel_threshold) {
  double peak = 0.0;
  for (Index nu = 0; nu < s.size(); ++nu) peak = std::max(peak, std::abs(s.coeffs()[nu]));
  std::vector<Index> out;
  if (peak == 0.0) return out;
  for (Index nu = 0; nu < s.size(); ++nu)
    if (std::abs(s.coeffs()[nu]) > rel_threshold * peak) out.push_back(nu);
  return out;
}

}  // namespace isowirt
