#pragma once

#include "isowirt/chernoff.hpp"
#include "isowirt/fourier.hpp"
#include "isowirt/polygon.hpp"

#include <vector>

namespace isowirt::oracle {

// Brute-force reference implementations used to cross-validate the fast
// paths.  These transcribe the defining sums index-for-index and share no
// code with the implementations they check.  Slow on purpose.

Spectrum direct_dft(const CVec& z);

struct PolygonForms {
  double area = 0.0;       // F
  double side_sq = 0.0;    // S
  double perimeter = 0.0;  // L
};
PolygonForms direct_forms(const Polygon& p);

CVec direct_difference(const CVec& z, int order);
Complex direct_inner_product(const CVec& z, const CVec& w);
double direct_norm_sq(const CVec& z, int order);

// Trapezoid rule for samples of a periodic function on a uniform grid
// covering one period (the right endpoint is not included).
double quadrature(const std::vector<double>& samples, double period);

enum class PointwiseOp { TK, A, WidthK };

// Applies the operator by its definition (angle shifts / derivatives at the
// sample point), not through its spectrum.
std::vector<double> pointwise_operator(const SupportFunction& h, PointwiseOp op,
                                       int k, int grid);

}  // namespace isowirt::oracle
