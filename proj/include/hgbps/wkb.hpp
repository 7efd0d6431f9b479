#pragma once

#include "hgbps/jet.hpp"
#include "hgbps/lattice.hpp"

namespace hgbps {

// Rational function with a factored denominator over a fixed per-curve basis
// (the poles the Riccati coefficients can have). Keeping exponents explicit
// lets common factors be cancelled exactly after each operation.
struct FRat {
  Poly num;
  std::vector<int> e;  // exponent of each basis factor in the denominator
};

// Element a(x) + b(x) y of the function field of the curve (y^2 = Q).
struct CurveFieldElem {
  FRat a, b;
};

struct OddForm {
  int k;   // order in hbar
  FRat b;  // dS^odd_k = b(x) y dx, pulled back along the parametrization
};

// Riccati/WKB recursion on the quantum curves of the oracle set {HG, Web, Bes}.
class WkbSystem {
 public:
  WkbSystem(const SpectralCurve& curve, int order_max);

  int order_max() const { return order_max_; }
  const Parametrization& param() const { return par_; }

  // Odd form at order k in [-1, order_max].
  const OddForm& odd_form(int k) const;

  // Value of dS^odd_k / dz at a z-point. Evaluated by running the Riccati
  // recursion in truncated Taylor jets anchored at x(z): the rational-function
  // representation is kept for structure but its monomial coefficients cancel
  // catastrophically at high order, while the local jets stay conditioned.
  cplx form_value(int k, cplx z) const;

  // All odd-form values (orders -1..order_max) at once; cheaper for contours.
  std::vector<cplx> form_values(cplx z) const;

  // Same value through the rational-function representation; only accurate at
  // low order (monomial coefficients cancel badly as k grows).
  cplx form_value_rational(int k, cplx z) const;

  // Numeric residues of the odd forms (orders -1..order_max) at a labeled
  // puncture ("0+", ...).
  std::vector<cplx> residues_at(const std::string& point_key) const;
  cplx residue_at(const std::string& point_key, int k) const;

  // Term-wise path integrals over beta_pole (from p_- to p_+), all orders at
  // once; detour_side flips which side arcs pass around poles.
  std::vector<cplx> path_voros_all(const std::string& pole, int detour_side = +1) const;
  cplx path_voros(const std::string& pole, int k, int detour_side = +1) const;

  // | h^2 (S'' + S'^2) + q h S' + r | with partial sums to order K, at x(z).
  cplx riccati_residual(cplx z, cplx hbar, int K) const;

 private:
  SpectralCurve curve_;
  Parametrization par_;
  int order_max_;
  std::vector<Poly> factors_;
  std::vector<OddForm> odd_;
  std::vector<CurveFieldElem> s_;  // s_[i] = coefficient of hbar^{i-1}
  FRat q1_, r1_, r2_, q_rat_;
  FRat half_dlogq_;

  friend struct WkbTestAccess;
  cplx frat_eval(const FRat& f, cplx x) const;
  PolyFrac to_polyfrac(const FRat& f) const;
};

// Oracle entry point: numeric path integral of the order-k odd form.
cplx path_voros_numeric(const SpectralCurve& curve, const LatticeElement& beta, int k);

}  // namespace hgbps
