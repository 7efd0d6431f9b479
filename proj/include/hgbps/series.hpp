#pragma once

#include "hgbps/bps.hpp"

namespace hgbps {

// Truncated Laurent series in hbar with complex coefficients.
class FormalSeries {
 public:
  FormalSeries() = default;
  FormalSeries(int lo, std::vector<cplx> c) : lo_(lo), c_(std::move(c)) {}

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  cplx coeff(int k) const {
    int i = k - lo_;
    return (i >= 0 && i < (int)c_.size()) ? c_[i] : cplx(0);
  }

  cplx eval(cplx hbar) const;
  FormalSeries truncated(int k_max) const;
  FormalSeries derivative_hbar() const;

  friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b);
  friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b);
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
  friend FormalSeries operator*(cplx s, const FormalSeries& a);

  // exp of a series with lo >= 0, truncated at k_max.
  FormalSeries exp_series(int k_max) const;

 private:
  int lo_ = 0;
  std::vector<cplx> c_;
};

// Deterministic non-BPS half-plane angle for a curve.
double pick_half_plane(const BpsStructure& s);

// V_gamma = Z(gamma)/hbar - pi i nu(gamma); orders -1 and 0.
FormalSeries voros_cycle(const SpectralCurve& curve, const LatticeElement& gamma);

// Coefficient of hbar^k (k >= 1) in V_beta via the BPS-spectrum sum over the
// half-plane {arg in (theta, theta+pi)}.
cplx voros_path_coeff(const SpectralCurve& curve, const LatticeElement& beta, int k, double theta);
cplx voros_path_coeff(const SpectralCurve& curve, const LatticeElement& beta, int k);

// Genus-g free energy, g >= 2 (scalar).
cplx free_energy(const SpectralCurve& curve, int g, double theta);
cplx free_energy(const SpectralCurve& curve, int g);
// Normalized g = 0, 1 values (F_0 up to quadratic polynomials; F_1 with the
// hbar-dependent normalization).
cplx free_energy_zero(const SpectralCurve& curve, double theta);
cplx free_energy_one(const SpectralCurve& curve, double theta, cplx hbar);

// Voros potential coefficient phi_k, k >= 1.
cplx voros_potential_coeff(const SpectralCurve& curve, int k, double theta);

// hbar^k coefficient (k >= 1) of the Weber free-energy difference value
//   F(m - nu h/2 + h/2, h) - F(m - nu h/2 - h/2, h) - (1/h) dF0/dm + (1/2) d2F0/dm2
// with F_0 = m^2 log(m)/2 and F_1 = -log(m)/12.
cplx weber_difference_oracle(int k, cplx m_inf, cplx nu_inf);

// B-spectrum weight: B_k((1+nu)/2) for Omega != -1, else the half-sum split.
cplx spectrum_bernoulli_weight(int k, cplx nu_gamma, int omega);

}  // namespace hgbps
