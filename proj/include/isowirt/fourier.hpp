#pragma once

#include "isowirt/types.hpp"

#include <vector>

namespace isowirt {

// Finite Fourier analysis on C^k.
//
// Conventions (fixed once, everything downstream depends on them):
//  * forward transform divides by k:  zeta_nu = (1/k) <z, R_nu>, so the
//    inverse is the plain evaluation z_j = sum_nu zeta_nu omega_j^nu
//    (many transform libraries put the 1/k on the inverse instead);
//  * cyclic_shift moves entries one place to the right for n = +1, i.e.
//    tau(z_0,...,z_{k-1}) = (z_{k-1}, z_0, ..., z_{k-2});
//  * derivative is the forward difference zdot_j = z_{j+1} - z_j, whose
//    spectrum multiplies by (omega_nu - 1).

// omega_nu = e^{2 pi i nu / k}
Complex unit_root(Index k, Index nu);

// Fourier coefficients zeta_0..zeta_{k-1} of a length-k sequence, with the
// cyclic identification zeta_{k-l} = zeta_{-l}.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(CVec coeffs) : coeffs_(std::move(coeffs)) {}

  Index size() const { return coeffs_.size(); }
  const CVec& coeffs() const { return coeffs_; }

  // Cyclic access: coeff(-l) == coeff(k-l).
  Complex coeff(Index nu) const {
    const Index k = coeffs_.size();
    Index r = nu % k;
    if (r < 0) r += k;
    return coeffs_[r];
  }

 private:
  CVec coeffs_;
};

// zeta_nu = (1/k) sum_j z_j conj(omega_nu)^j.  Direct summation for small k,
// a mixed-radix fast transform above kFastTransformThreshold; the two paths
// agree to machine precision (see tests against oracle::direct_dft).
inline constexpr Index kFastTransformThreshold = 16;
Spectrum forward_transform(const CVec& z);

// z_j = sum_nu zeta_nu omega_j^nu
CVec inverse_transform(const Spectrum& s);

// tau^n; n is reduced mod k, negative n shifts left.
CVec cyclic_shift(const CVec& z, Index n);

// Forward difference iterated `order` times; order 0 is the identity.
CVec derivative(const CVec& z, int order = 1);

// <z, w> = sum_j z_j conj(w_j).  Throws DimensionError on length mismatch.
Complex inner_product(const CVec& z, const CVec& w);

// ||z^(order)||^2 evaluated spectrally via the Parseval identity
// ||z^(j)||^2 = k sum_nu (4 sin^2(nu pi / k))^j |zeta_nu|^2.
double parseval_norm(const CVec& z, int order);

// Unsigned modes nu in [0, k) with |zeta_nu| > tol::kActiveMode * max |zeta|.
std::vector<Index> active_modes(const Spectrum& s,
                                double rel_threshold = tol::kActiveMode);

}  // namespace isowirt
