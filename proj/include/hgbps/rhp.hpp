#pragma once

#include "hgbps/borel.hpp"

namespace hgbps {

// Special quantization values nu_* with xi(gamma_BPS) = 1 for all BPS classes.
// For HG/dHG one second-order pole receives nu = 1 (default: lexicographically
// first); the rest vanish.
NuParams nu_star(CurveLabel label, const std::string& chosen_pole = "");
std::string default_chosen_pole(CurveLabel label);

// xi_{D,nu}(mu) = sigma(mu) e^{pi i nu(mu)}, as a twisted value.
TwistedValue xi_from_nu(const BpsStructure& s);

class RhpSolution {
 public:
  enum class Kind { Vor, Min, Hol };

  static RhpSolution voros(const SpectralCurve& curve);
  static RhpSolution minimal(const SpectralCurve& curve, const TwistedValue& xi);
  static RhpSolution holomorphic(const SpectralCurve& curve, const std::string& chosen_pole = "");

  Kind kind() const { return kind_; }
  const BpsStructure& structure() const { return s_; }
  const TwistedValue& constant_term() const { return xi_; }

  // log X_{l,mu}(hbar) for the ray at angle theta; RayIsBps / PoleHit errors.
  cplx log_eval(const LatticeElement& mu, double theta, cplx hbar) const;
  cplx eval(const LatticeElement& mu, double theta, cplx hbar) const;

  // |X e^{Z(mu)/hbar} / xi(mu) - 1|, the RH2 ratio deviation.
  double rh2_deviation(const LatticeElement& mu, double theta, cplx hbar) const;

 private:
  RhpSolution(Kind k, BpsStructure s, TwistedValue xi)
      : kind_(k), s_(std::move(s)), xi_(std::move(xi)) {}
  cplx lambda_sum(const LatticeElement& mu, double theta, cplx hbar) const;
  Kind kind_;
  BpsStructure s_;
  TwistedValue xi_;
};

// RH1 residual across the sector (theta_lo, theta_hi):
//   | X_{lo,mu} / ( X_{hi,mu} prod (1 - X_{hi,gamma'})^{Omega <gamma',mu>} ) - 1 |.
double jump_check(const RhpSolution& sol, const LatticeElement& mu, double theta_hi,
                  double theta_lo, cplx hbar);

struct ComparisonFactors {
  cplx rho{1.0};       // X^Vor = rho . X^min (nu inside the strips)
  cplx varrho{1.0};    // X^Vor|_{nu*} = varrho . X^hol
  cplx kappa{1.0};     // tau^Vor = kappa . tau^min (nu inside the strips)
  cplx varkappa{1.0};  // tau^Vor|_{nu*} = varkappa . tau^hol
  bool strip_valid = false;  // rho/kappa preconditions held
  bool star_valid = false;   // nu equals nu_* (varrho/varkappa meaningful)
};

// rho/kappa are computed when nu lies inside the comparison strips for every
// class in i H_l; varrho/varkappa when nu = nu_*. If neither regime applies,
// throws NuOutOfStrip.
ComparisonFactors comparison_factors(const SpectralCurve& curve, const LatticeElement& beta,
                                     double theta, cplx hbar);

enum class TauKind { Min, Hol, Vor };

// log of the BPS tau-function as an Upsilon-product over classes in i H_l.
cplx log_tau(TauKind kind, const SpectralCurve& curve, double theta, cplx hbar,
             const TwistedValue* xi = nullptr, const std::string& chosen_pole = "");

// log c_l = sum (1/2) B_2-weight(gamma) Omega(gamma) log hbar (rescaling factor).
cplx log_c_ell(const SpectralCurve& curve, double theta, cplx hbar);

// Partial sum of log(c_l) - d/dhbar phi up to phi_K; asymptotic route to tau^Vor.
cplx log_tau_vor_series(const SpectralCurve& curve, double theta, cplx hbar, int order);

// |log tau^hol - sum_{g=1}^{G} hbar^{2g-2} F_g| with the hbar-normalized F_1.
double tau_tr_check(const SpectralCurve& curve, double theta, cplx hbar, int genus_max);

}  // namespace hgbps
