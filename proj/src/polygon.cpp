#include "isowirt/polygon.hpp"

namespace isowirt {

Polygon::Polygon(CVec vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3)
    throw ParameterError("Polygon: need at least 3 vertices, got " +
                         std::to_string(vertices_.size()));
  if (!vertices_.allFinite()) throw ParameterError("Polygon: non-finite vertex");
}

double signed_area(const Polygon& p) {
  return -0.5 * inner_product(p.vertices(), tangent_vectors(p)).imag();
}

double squared_side_sum(const Polygon& p) { return tangent_vectors(p).squaredNorm(); }

double perimeter(const Polygon& p) {
  return tangent_vectors(p).cwiseAbs().sum();
}

CVec tangent_vectors(const Polygon& p) { return derivative(p.vertices(), 1); }

CVec curvature_vectors(const Polygon& p) {
  return cyclic_shift(derivative(p.vertices(), 2), 1);
}

Complex centroid(const Polygon& p) {
  return p.vertices().sum() / static_cast<double>(p.size());
}

Polygon recenter(const Polygon& p) {
  const Complex c = centroid(p);
  return Polygon(CVec(p.vertices().array() - c));
}

bool has_zero_centroid(const Polygon& p, double rel_tol) {
  const double peak = p.vertices().cwiseAbs().maxCoeff();
  return std::abs(centroid(p)) <= rel_tol * peak;
}

bool is_equilateral(const Polygon& p, double rel_tol) {
  const RVec sides = tangent_vectors(p).cwiseAbs();
  const double mean = sides.mean();
  if (mean == 0.0) return true;
  return (sides.array() - mean).abs().maxCoeff() <= rel_tol * mean;
}

Polygon make_regular(Index n, Index k, Complex scale) {
  if (k < 3) throw ParameterError("make_regular: k must be >= 3");
  CVec z(k);
  for (Index nu = 0; nu < k; ++nu) z[nu] = scale * unit_root(k, n * nu);
  return Polygon(std::move(z));
}

Polygon random_polygon(Index k, Index mode_bound, std::uint64_t seed) {
  if (k < 3) throw ParameterError("random_polygon: k must be >= 3");
  if (mode_bound < 1 || mode_bound > k - 1)
    throw ParameterError("random_polygon: mode_bound must lie in [1, k-1]");
  RandomSource rng(seed);
  CVec coeffs = CVec::Zero(k);
  for (Index nu = 1; nu < k; ++nu) {
    // Draw every mode so the consumed stream does not depend on mode_bound.
    const Complex c = rng.unit_disc();
    if (nu <= mode_bound || nu >= k - mode_bound) coeffs[nu] = c;
  }
  return Polygon(inverse_transform(Spectrum(std::move(coeffs))));
}

Spectrum polygon_spectrum(const Polygon& p) { return forward_transform(p.vertices()); }

}  // namespace isowirt
