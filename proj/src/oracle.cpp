#include "isowirt/oracle.hpp"

#include <cmath>

namespace isowirt::oracle {

Spectrum direct_dft(const CVec& z) {
  const Index k = z.size();
  CVec out(k);
  for (Index nu = 0; nu < k; ++nu) {
    Complex acc = 0.0;
    for (Index j = 0; j < k; ++j)
      acc += z[j] * std::polar(1.0, -kTwoPi * static_cast<double>(j) *
                                        static_cast<double>(nu) / static_cast<double>(k));
    out[nu] = acc / static_cast<double>(k);
  }
  return Spectrum(std::move(out));
}

PolygonForms direct_forms(const Polygon& p) {
  const CVec& z = p.vertices();
  const Index k = z.size();
  PolygonForms f;
  for (Index j = 0; j < k; ++j) {
    const Complex zj = z[j];
    const Complex zj1 = z[(j + 1) % k];
    f.area += (zj1 * std::conj(zj) - zj * std::conj(zj1)).imag();  // = -2i * term
    f.side_sq += std::norm(zj1 - zj);
    f.perimeter += std::abs(zj1 - zj);
  }
  // (1/4i) sum (z_{j+1} conj z_j - z_j conj z_{j+1}); the summand is purely
  // imaginary, so dividing by 4i is taking imag()/4.
  f.area /= 4.0;
  return f;
}

CVec direct_difference(const CVec& z, int order) {
  CVec d = z;
  const Index k = z.size();
  for (int step = 0; step < order; ++step) {
    CVec next(k);
    for (Index j = 0; j < k; ++j) next[j] = d[(j + 1) % k] - d[j];
    d = next;
  }
  return d;
}

Complex direct_inner_product(const CVec& z, const CVec& w) {
  Complex acc = 0.0;
  for (Index j = 0; j < z.size(); ++j) acc += z[j] * std::conj(w[j]);
  return acc;
}

double direct_norm_sq(const CVec& z, int order) {
  const CVec d = direct_difference(z, order);
  double acc = 0.0;
  for (Index j = 0; j < d.size(); ++j) acc += std::norm(d[j]);
  return acc;
}

double quadrature(const std::vector<double>& samples, double period) {
  if (samples.size() < 3) throw ParameterError("quadrature: need at least 3 samples");
  double acc = 0.0;
  for (double s : samples) acc += s;
  return acc * period / static_cast<double>(samples.size());
}

std::vector<double> pointwise_operator(const SupportFunction& h, PointwiseOp op,
                                       int k, int grid) {
  std::vector<double> out(grid);
  for (int j = 0; j < grid; ++j) {
    const double theta = kTwoPi * j / grid;
    switch (op) {
      case PointwiseOp::TK: {
        double acc = 0.0;
        for (int m = 1; m <= k; ++m)
          acc += h.evaluate(theta + (2.0 * m - 1.0) * kPi / k);
        out[j] = acc / k;
        break;
      }
      case PointwiseOp::A:
        out[j] = h.evaluate(theta) + h.derivative(2).evaluate(theta);
        break;
      case PointwiseOp::WidthK: {
        double acc = 0.0;
        for (int m = 0; m < k; ++m) acc += h.evaluate(theta + 2.0 * m * kPi / k);
        out[j] = acc;
        break;
      }
    }
  }
  return out;
}

}  // namespace isowirt::oracle
