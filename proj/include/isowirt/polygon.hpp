#pragma once

#include "isowirt/fourier.hpp"
#include "isowirt/types.hpp"

namespace isowirt {

// A k-gon is an ordered k-tuple of complex vertices, k >= 3.  Polygons may be
// non-simple and non-convex; the signed area below is the algebraic area of
// the associated Hermitian (polygonal) form, so no simplicity check is made.
class Polygon {
 public:
  explicit Polygon(CVec vertices);

  Index size() const { return vertices_.size(); }
  const CVec& vertices() const { return vertices_; }

 private:
  CVec vertices_;
};

// F(P) = (1/4i) sum (z_{j+1} conj(z_j) - z_j conj(z_{j+1})) = -1/2 Im<z, zdot>
double signed_area(const Polygon& p);

// S(P) = ||zdot||^2, the sum of squared side lengths.
double squared_side_sum(const Polygon& p);

// L(P) = sum |z_{j+1} - z_j|
double perimeter(const Polygon& p);

// t = zdot, the tangent vector attached to each vertex.
CVec tangent_vectors(const Polygon& p);

// kappa = tau zddot; entry nu is the turn of the tangent across vertex nu,
// (z_{nu+1} - z_nu) - (z_nu - z_{nu-1}).
CVec curvature_vectors(const Polygon& p);

Complex centroid(const Polygon& p);
Polygon recenter(const Polygon& p);

// |centroid| <= tol * max |z_nu| (an all-equal polygon recentres to zero).
bool has_zero_centroid(const Polygon& p, double rel_tol = tol::kCentroid);

// All side lengths within rel_tol of their mean.
bool is_equilateral(const Polygon& p, double rel_tol = 1e-9);

// R_n scaled: vertex nu = scale * e^{2 pi i n nu / k}
Polygon make_regular(Index n, Index k, Complex scale = Complex(1.0, 0.0));

// Zero-centroid polygon with spectrum drawn uniformly from the unit disc on
// the modes nu with |nu| <= mode_bound (i.e. nu <= mode_bound or
// nu >= k - mode_bound); mode_bound = k - 1 gives full support.
// Deterministic in `seed`.
Polygon random_polygon(Index k, Index mode_bound, std::uint64_t seed);

// Convenience: spectrum of the vertex vector.
Spectrum polygon_spectrum(const Polygon& p);

}  // namespace isowirt
