#include "doctest.h"

#include "isowirt/oracle.hpp"
#include "isowirt/polygon.hpp"
#include "test_support.hpp"

using namespace isowirt;
using isowirt::testing::random_sequence;

namespace {

Polygon random_poly(Index k, std::uint64_t seed) { return Polygon(random_sequence(k, seed)); }

}  // namespace

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(Polygon(random_sequence(2, 1)), ParameterError);
  CVec bad(3);
  bad << Complex(0, 0), Complex(1, 0), Complex(std::nan(""), 0);
  CHECK_THROWS_AS(Polygon{bad}, ParameterError);
}

TEST_CASE("signed area of the square and of regular polygons") {
  CHECK(signed_area(make_regular(1, 4)) == doctest::Approx(2.0).epsilon(1e-13));

  for (Index k = 3; k <= 32; ++k)
    for (Index nu = 0; nu < k; ++nu) {
      const double expected = static_cast<double>(k) *
                              std::sin(nu * kPi / static_cast<double>(k)) *
                              std::cos(nu * kPi / static_cast<double>(k));
      CHECK(isowirt::testing::close(signed_area(make_regular(nu, k)), expected, 1e-12,
                                    std::max(std::abs(expected), 1.0) + k));
    }

  CHECK(signed_area(Polygon(CVec::Constant(5, Complex(2, 3)))) == doctest::Approx(0.0));
}

TEST_CASE("squared side sums") {
  for (Index k = 3; k <= 32; ++k)
    for (Index nu = 0; nu < k; ++nu) {
      const double s = std::sin(nu * kPi / static_cast<double>(k));
      const double expected = 4.0 * static_cast<double>(k) * s * s;
      CHECK(isowirt::testing::close(squared_side_sum(make_regular(nu, k)), expected,
                                    1e-12, std::max(expected, 1.0)));
    }

  CHECK(squared_side_sum(make_regular(1, 4)) == doctest::Approx(8.0));

  const Polygon p = random_poly(9, 2);
  const Polygon q(CVec(p.vertices().array() + Complex(5, -3)));
  CHECK(squared_side_sum(q) ==
        doctest::Approx(squared_side_sum(p)).epsilon(1e-12));
}

TEST_CASE("perimeter") {
  CHECK(perimeter(make_regular(1, 4)) == doctest::Approx(4.0 * std::sqrt(2.0)));
  CHECK(perimeter(Polygon(CVec::Constant(4, Complex(1, 1)))) == 0.0);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Polygon p = random_poly(8, seed);
    const double l = perimeter(p);
    CHECK(l * l <= 8.0 * squared_side_sum(p) * (1.0 + 1e-12));
  }
}

TEST_CASE("tangent vectors") {
  const Index k = 7;
  const Polygon r1 = make_regular(1, k, Complex(0.3, 1.1));
  const Complex factor = 2.0 * Complex(0, 1) * std::polar(1.0, kPi / k) * std::sin(kPi / k);
  CHECK((tangent_vectors(r1) - factor * r1.vertices()).cwiseAbs().maxCoeff() < 1e-14);

  CHECK(tangent_vectors(Polygon(CVec::Constant(5, Complex(2, 2)))).cwiseAbs().maxCoeff() ==
        0.0);
  CHECK(std::abs(tangent_vectors(random_poly(12, 3)).sum()) < 1e-13);
}

TEST_CASE("curvature vectors") {
  const Index k = 9;
  const Polygon r1 = make_regular(1, k);
  const double s1 = std::sin(kPi / k);
  CHECK((curvature_vectors(r1) + 4.0 * s1 * s1 * r1.vertices()).cwiseAbs().maxCoeff() <
        1e-14);

  // collinear equally spaced points: interior second differences vanish
  CVec line(5);
  for (Index j = 0; j < 5; ++j) line[j] = Complex(static_cast<double>(j), 0.0);
  const CVec kappa = curvature_vectors(Polygon(line));
  for (Index j = 1; j + 1 < 5; ++j) CHECK(std::abs(kappa[j]) < 1e-15);

  CHECK(std::abs(curvature_vectors(random_poly(10, 4)).sum()) < 1e-13);
}

TEST_CASE("centroid and recenter") {
  const Polygon r1 = make_regular(1, 6);
  const Polygon shifted(CVec(r1.vertices().array() + Complex(5.0, 0.0)));
  CHECK((recenter(shifted).vertices() - r1.vertices()).cwiseAbs().maxCoeff() < 1e-13);

  for (Index nu = 1; nu < 6; ++nu)
    CHECK(std::abs(centroid(make_regular(nu, 6))) < 1e-14);

  const Polygon p = random_poly(11, 5);
  const Spectrum s = polygon_spectrum(recenter(p));
  CHECK(std::abs(s.coeffs()[0]) <= 1e-14 * p.vertices().cwiseAbs().maxCoeff());
}

TEST_CASE("make_regular symmetries") {
  const Index k = 8;
  const Polygon a = make_regular(1, k);
  const Polygon b = make_regular(k - 1, k);
  CHECK((b.vertices() - a.vertices().conjugate()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(signed_area(b) == doctest::Approx(-signed_area(a)).epsilon(1e-13));

  const Polygon tri = make_regular(1, 3);
  for (Index j = 0; j < 3; ++j) CHECK(std::abs(std::abs(tri.vertices()[j]) - 1.0) < 1e-15);
}

TEST_CASE("random_polygon: determinism, zero mean, mode truncation") {
  const Polygon a = random_polygon(8, 3, 99);
  const Polygon b = random_polygon(8, 3, 99);
  CHECK((a.vertices() - b.vertices()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(has_zero_centroid(a));

  const Spectrum s = polygon_spectrum(random_polygon(10, 1, 5));
  for (Index nu = 2; nu <= 8; ++nu) CHECK(std::abs(s.coeffs()[nu]) < 1e-13);

  CHECK_THROWS_AS(random_polygon(8, 0, 1), ParameterError);
  CHECK_THROWS_AS(random_polygon(8, 8, 1), ParameterError);
}

TEST_CASE("polygonal forms evaluate spectrally") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Index k = 5 + static_cast<Index>(seed % 9);
    const Polygon p = random_poly(k, 60 + seed);
    const Spectrum s = polygon_spectrum(p);
    double f = 0.0, ss = 0.0;
    for (Index nu = 0; nu < k; ++nu) {
      const double w = std::norm(s.coeffs()[nu]);
      const double sn = std::sin(nu * kPi / static_cast<double>(k));
      const double cn = std::cos(nu * kPi / static_cast<double>(k));
      f += w * static_cast<double>(k) * sn * cn;
      ss += w * 4.0 * static_cast<double>(k) * sn * sn;
    }
    CHECK(isowirt::testing::close(signed_area(p), f, 1e-12, squared_side_sum(p) + 1.0));
    CHECK(isowirt::testing::close(squared_side_sum(p), ss, 1e-12, ss + 1.0));
  }
}

TEST_CASE("invariance of the polygonal forms") {
  const Polygon p = random_poly(10, 8);
  const Polygon shifted(cyclic_shift(p.vertices(), 3));
  CHECK(signed_area(shifted) == doctest::Approx(signed_area(p)).epsilon(1e-12));
  CHECK(squared_side_sum(shifted) ==
        doctest::Approx(squared_side_sum(p)).epsilon(1e-12));

  const Polygon rotated(CVec(std::polar(1.0, 0.73) * p.vertices()));
  CHECK(signed_area(rotated) == doctest::Approx(signed_area(p)).epsilon(1e-12));
  CHECK(squared_side_sum(rotated) ==
        doctest::Approx(squared_side_sum(p)).epsilon(1e-12));

  const Polygon conj(p.vertices().conjugate());
  CHECK(signed_area(conj) == doctest::Approx(-signed_area(p)).epsilon(1e-12));
}
