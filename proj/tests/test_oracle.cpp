#include "doctest.h"

#include "isowirt/oracle.hpp"
#include "test_support.hpp"

#include <vector>

using namespace isowirt;

TEST_CASE("direct_dft basics") {
  CVec coeffs = CVec::Zero(6);
  coeffs[2] = 1.0;
  const CVec r2 = inverse_transform(Spectrum(coeffs));
  const Spectrum s = oracle::direct_dft(r2);
  for (Index nu = 0; nu < 6; ++nu)
    CHECK(std::abs(s.coeffs()[nu] - (nu == 2 ? 1.0 : 0.0)) < 1e-13);

  CHECK(oracle::direct_dft(CVec::Zero(5)).coeffs().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("direct_forms") {
  // right triangle recentred: F = 1/2 regardless of translation
  CVec tri(3);
  tri << Complex(0, 0), Complex(1, 0), Complex(0, 1);
  const Polygon p = recenter(Polygon(tri));
  CHECK(oracle::direct_forms(p).area == doctest::Approx(0.5).epsilon(1e-14));

  const Polygon r1 = make_regular(1, 3);
  CHECK(oracle::direct_forms(r1).side_sq == doctest::Approx(9.0).epsilon(1e-13));

  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Polygon q(isowirt::testing::random_sequence(5 + seed % 9, seed));
    const auto f = oracle::direct_forms(q);
    CHECK(signed_area(q) == doctest::Approx(f.area).epsilon(1e-12));
    CHECK(squared_side_sum(q) == doctest::Approx(f.side_sq).epsilon(1e-12));
    CHECK(perimeter(q) == doctest::Approx(f.perimeter).epsilon(1e-12));
  }
}

TEST_CASE("trapezoid quadrature is exact for resolved trigonometric polynomials") {
  std::vector<double> cos2(8);
  for (int j = 0; j < 8; ++j) cos2[j] = std::pow(std::cos(kTwoPi * j / 8.0), 2);
  CHECK(oracle::quadrature(cos2, kTwoPi) == doctest::Approx(kPi).epsilon(1e-13));

  CHECK(oracle::quadrature(std::vector<double>(5, 1.0), kTwoPi) ==
        doctest::Approx(kTwoPi).epsilon(1e-15));

  auto smooth = [](double t) { return std::exp(std::cos(t)) * std::sin(2.0 * t + 0.3); };
  std::vector<double> a(257), b(513);
  for (int j = 0; j < 257; ++j) a[j] = smooth(kTwoPi * j / 257.0);
  for (int j = 0; j < 513; ++j) b[j] = smooth(kTwoPi * j / 513.0);
  CHECK(std::abs(oracle::quadrature(a, kTwoPi) - oracle::quadrature(b, kTwoPi)) < 1e-12);

  CHECK_THROWS_AS(oracle::quadrature(std::vector<double>(2, 1.0), 1.0), ParameterError);
}

TEST_CASE("pointwise operator spot values") {
  const SupportFunction cos2 = SupportFunction::from_harmonics(0.0, {{2, Complex(0.5, 0)}});
  const auto a = oracle::pointwise_operator(cos2, oracle::PointwiseOp::A, 2, 4);
  CHECK(a[0] == doctest::Approx(-3.0).epsilon(1e-13));

  const auto w2 = oracle::pointwise_operator(SupportFunction::circle(1.0),
                                             oracle::PointwiseOp::WidthK, 2, 7);
  for (double v : w2) CHECK(v == doctest::Approx(2.0).epsilon(1e-14));
}
