#include "doctest.h"

#include "isowirt/fourier.hpp"
#include "isowirt/oracle.hpp"
#include "test_support.hpp"

using namespace isowirt;
using isowirt::testing::random_sequence;

namespace {

double max_abs_diff(const CVec& a, const CVec& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("forward transform of basis vectors") {
  // R_1 for k=4 is (1, i, -1, -i): only zeta_1 = 1
  CVec z(4);
  z << Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1);
  const Spectrum s = forward_transform(z);
  CHECK(std::abs(s.coeffs()[0]) < 1e-15);
  CHECK(std::abs(s.coeffs()[1] - 1.0) < 1e-15);
  CHECK(std::abs(s.coeffs()[2]) < 1e-15);
  CHECK(std::abs(s.coeffs()[3]) < 1e-15);
}

TEST_CASE("constant sequence transforms to the mean mode") {
  const Complex c(0.7, -2.0);
  CVec z = CVec::Constant(6, c);
  const Spectrum s = forward_transform(z);
  CHECK(std::abs(s.coeffs()[0] - c) < 1e-15);
  for (Index nu = 1; nu < 6; ++nu) CHECK(std::abs(s.coeffs()[nu]) < 1e-15);
}

TEST_CASE("forward transform matches the direct double-loop sum") {
  for (Index k : {3, 5, 8, 16, 17, 24, 31, 36, 64}) {
    const CVec z = random_sequence(k, 100 + static_cast<std::uint64_t>(k));
    const Spectrum fast = forward_transform(z);
    const Spectrum slow = oracle::direct_dft(z);
    const double scale = z.cwiseAbs().maxCoeff();
    CHECK(max_abs_diff(fast.coeffs(), slow.coeffs()) < 1e-12 * scale);
  }
}

TEST_CASE("inverse transform reproduces regular polygons from unit spectra") {
  CVec coeffs = CVec::Zero(5);
  coeffs[1] = 1.0;
  const CVec z = inverse_transform(Spectrum(coeffs));
  for (Index nu = 0; nu < 5; ++nu)
    CHECK(std::abs(z[nu] - unit_root(5, nu)) < 1e-14);

  CHECK(inverse_transform(Spectrum(CVec::Zero(7))).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("round trip is the identity") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Index k = 3 + static_cast<Index>(seed * 3 % 62);
    const CVec z = random_sequence(k, seed);
    const CVec back = inverse_transform(forward_transform(z));
    CHECK(max_abs_diff(z, back) <= 1e-12 * z.cwiseAbs().maxCoeff());

    // other composition order, on a random spectrum
    const Spectrum s(random_sequence(k, seed + 777));
    const Spectrum s2 = forward_transform(inverse_transform(s));
    CHECK(max_abs_diff(s.coeffs(), s2.coeffs()) <=
          1e-12 * s.coeffs().cwiseAbs().maxCoeff());
  }
}

TEST_CASE("spectrum honors the cyclic index identification") {
  const Spectrum s = forward_transform(random_sequence(7, 4));
  for (Index l = 1; l < 7; ++l) {
    CHECK(s.coeff(-l) == s.coeff(7 - l));
    CHECK(s.coeff(l + 7) == s.coeff(l));
  }
}

TEST_CASE("cyclic shift matches the explicit example and inverts") {
  CVec z(3);
  z << Complex(1, 1), Complex(2, 0), Complex(0, 3);
  const CVec shifted = cyclic_shift(z, 1);
  CHECK(shifted[0] == z[2]);
  CHECK(shifted[1] == z[0]);
  CHECK(shifted[2] == z[1]);

  const CVec w = random_sequence(9, 7);
  CHECK(max_abs_diff(cyclic_shift(w, 9), w) == 0.0);
  CHECK(max_abs_diff(cyclic_shift(cyclic_shift(w, 1), -1), w) == 0.0);
  // spectrum picks up omega_nu^{-1} per right shift
  const Spectrum s = forward_transform(w);
  const Spectrum st = forward_transform(cyclic_shift(w, 1));
  for (Index nu = 0; nu < 9; ++nu)
    CHECK(std::abs(st.coeffs()[nu] - s.coeffs()[nu] / unit_root(9, nu)) < 1e-13);
}

TEST_CASE("derivative of a basis polygon scales by omega_nu - 1") {
  const Index k = 6, nu = 2;
  CVec coeffs = CVec::Zero(k);
  coeffs[nu] = 1.0;
  const CVec r = inverse_transform(Spectrum(coeffs));
  const CVec expected = (unit_root(k, nu) - Complex(1.0, 0.0)) * r;
  CHECK(max_abs_diff(derivative(r, 1), expected) < 1e-13);
}

TEST_CASE("derivative basics") {
  CHECK(derivative(CVec::Constant(5, Complex(3, 4)), 1).cwiseAbs().maxCoeff() < 1e-15);
  const CVec z = random_sequence(11, 3);
  CHECK(max_abs_diff(derivative(z, 0), z) == 0.0);
  CHECK(std::abs(derivative(z, 1).sum()) < 1e-13);  // telescoping
  CHECK_THROWS_AS(derivative(z, -1), ParameterError);
}

TEST_CASE("spectral differentiation equals direct differencing") {
  const Index k = 16;
  const CVec z = random_sequence(k, 42);
  const Spectrum s = forward_transform(z);
  for (int order : {1, 2, 3}) {
    CVec scaled(k);
    for (Index nu = 0; nu < k; ++nu) {
      Complex f = 1.0;
      for (int j = 0; j < order; ++j) f *= unit_root(k, nu) - Complex(1.0, 0.0);
      scaled[nu] = s.coeffs()[nu] * f;
    }
    const CVec via_spectrum = inverse_transform(Spectrum(scaled));
    const CVec via_difference = oracle::direct_difference(z, order);
    CHECK(max_abs_diff(via_spectrum, via_difference) <
          1e-12 * via_difference.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("inner product: orthogonality and oracle agreement") {
  const Index k = 8;
  CVec c1 = CVec::Zero(k), c2 = CVec::Zero(k);
  c1[1] = 1.0;
  c2[2] = 1.0;
  const CVec r1 = inverse_transform(Spectrum(c1));
  const CVec r2 = inverse_transform(Spectrum(c2));
  CHECK(std::abs(inner_product(r1, r1) - Complex(8, 0)) < 1e-13);
  CHECK(std::abs(inner_product(r1, r2)) < 1e-13);

  const CVec z = random_sequence(k, 1), w = random_sequence(k, 2);
  CHECK(std::abs(inner_product(z, w) - oracle::direct_inner_product(z, w)) < 1e-13);
  CHECK(std::abs(inner_product(z, w) - std::conj(inner_product(w, z))) < 1e-13);
  CHECK(inner_product(z, z).imag() == 0.0);

  CHECK_THROWS_AS(inner_product(z, random_sequence(k + 1, 3)), DimensionError);
}

TEST_CASE("parseval norms match direct differencing at all orders") {
  CVec c1 = CVec::Zero(9);
  c1[1] = 1.0;
  const CVec r1 = inverse_transform(Spectrum(c1));
  CHECK(parseval_norm(r1, 0) == doctest::Approx(9.0).epsilon(1e-12));
  const double s1 = std::sin(kPi / 9.0);
  CHECK(parseval_norm(r1, 1) == doctest::Approx(4.0 * 9.0 * s1 * s1).epsilon(1e-12));

  for (Index k : {4, 9, 12}) {
    const CVec z = random_sequence(k, 5 + static_cast<std::uint64_t>(k));
    for (int order = 0; order <= static_cast<int>(k); ++order) {
      const double direct = oracle::direct_norm_sq(z, order);
      CHECK(isowirt::testing::close(parseval_norm(z, order), direct, 1e-12,
                                    std::max(direct, 1.0)));
    }
  }
}

TEST_CASE("derivative commutes with the cyclic shift") {
  const CVec z = random_sequence(10, 11);
  CHECK(max_abs_diff(derivative(cyclic_shift(z, 1), 1),
                     cyclic_shift(derivative(z, 1), 1)) < 1e-14);
}

TEST_CASE("summation by parts: <wdot, wdot> = -<tau wddot, w>") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CVec w = random_sequence(7 + static_cast<Index>(seed), seed);
    const Complex lhs = inner_product(derivative(w, 1), derivative(w, 1));
    const Complex rhs = -inner_product(cyclic_shift(derivative(w, 2), 1), w);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
  }
}
