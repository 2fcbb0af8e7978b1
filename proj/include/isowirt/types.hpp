#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace isowirt {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Invalid arguments: order out of range, bad sizes, malformed input.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Sequences of incompatible length were combined.
class DimensionError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

// Input violates a theorem hypothesis (nonzero centroid, orientation, ...).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Curve with (numerically) vanishing speed; not an immersion.
class DegenerateCurveError : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

// A construction-time self-check failed.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace tol {
// Default verification tolerance (CLI: overridable via ISO_WIRTINGER_TOLERANCE).
inline constexpr double kDefault = 1e-9;
// |deficit| <= kEquality * scale is required for the equality flag.
inline constexpr double kEquality = 1e-10;
// A Fourier mode counts as active when above kActiveMode * max coefficient.
inline constexpr double kActiveMode = 1e-9;
// Absolute floor for relative comparisons near zero.
inline constexpr double kAbsFloor = 1e-14;
// Centroid is "zero" when |mean| <= kCentroid * max |vertex|.
inline constexpr double kCentroid = 1e-12;
}  // namespace tol

// |a - b| <= rel * max(|a|, |b|) with an absolute floor for near-zero pairs.
inline bool approx_equal(double a, double b, double rel,
                         double abs_floor = tol::kAbsFloor) {
  const double diff = std::abs(a - b);
  return diff <= rel * std::max(std::abs(a), std::abs(b)) || diff <= abs_floor;
}

// Deterministic uniform source; avoids the implementation-defined
// std::uniform_real_distribution so seeds reproduce across toolchains.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  // splitmix64 step
  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform on the closed unit disc.
  Complex unit_disc() {
    const double r = std::sqrt(uniform());
    const double phi = kTwoPi * uniform();
    return {r * std::cos(phi), r * std::sin(phi)};
  }

 private:
  std::uint64_t state_;
};

}  // namespace isowirt
