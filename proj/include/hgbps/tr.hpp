#pragma once

#include <map>

#include "hgbps/jet.hpp"

namespace hgbps {
struct SpectralCurve;
struct Parametrization;
}

#include "hgbps/curves.hpp"

namespace hgbps {

// One factor 1/(z_var - ram[pole])^ord of a principal-part term.
struct PPFactor {
  int var, pole, ord;
  auto operator<=>(const PPFactor&) const = default;
};

// Multivariate principal parts: sum of c * prod 1/(z_v - r_p)^o. Every
// correlator W_{g,n} with 2g-2+n >= 1 has this shape, with poles only at the
// ramification points and decay at infinity in each slot.
class MultiPP {
 public:
  using Key = std::vector<PPFactor>;
  std::map<Key, cplx> terms;

  static MultiPP scalar(cplx v) {
    MultiPP r;
    if (v != cplx(0)) r.terms[{}] = v;
    return r;
  }
  void add_term(Key k, cplx v);
  MultiPP& operator+=(const MultiPP& o);
  MultiPP& operator*=(cplx s);
  friend MultiPP tensor(const MultiPP& a, const MultiPP& b);  // disjoint variables

  cplx eval(const std::vector<cplx>& z, const std::vector<cplx>& ram) const;
  int max_order(int var) const;
  bool empty() const { return terms.empty(); }
  // drops coefficients below rel_tol times the largest magnitude
  void prune(double rel_tol);
};

// Jet with MultiPP coefficients (spectator variables symbolic).
struct JetPP {
  int lo = 0, hi = -1;
  std::vector<MultiPP> c;
  static JetPP zero_window(int lo, int hi);
  const MultiPP& coeff(int k) const;
  MultiPP& at(int k) { return c[k - lo]; }
};

JetPP jetpp_add(const JetPP& a, const JetPP& b);
JetPP jetpp_mul_scalar_jet(const JetPP& a, const JetC& s);
JetPP jetpp_mul(const JetPP& a, const JetPP& b);
JetPP jetpp_from_scalar(const JetC& a);

// Eynard-Orantin recursion engine on a rational spectral curve. Correlators
// are memoized per session; sessions are independent.
class TrSession {
 public:
  explicit TrSession(const SpectralCurve& curve, int jet_margin = 28);

  const Parametrization& param() const { return par_; }
  const std::vector<cplx>& ram() const { return par_.ramification; }

  // W_{g,n} as a multivariate principal-part tensor over vars {0..n-1}.
  const MultiPP& correlator(int g, int n);

  // Numeric function value of W_{g,n} (the dz-coefficients) at given points.
  cplx correlator_value(int g, const std::vector<cplx>& z);

  // F_g via residues of a primitive of y dx against W_{g,1}; g in {2,3}.
  cplx free_energy(int g, cplx phi_shift = 0.0);

 private:
  int wide() const;                     // window for the exact foundational jets
  JetC ident_jet(int ri) const;         // z = r + u
  JetC sigma_jet(int ri) const;         // sigma(z) at r, as a jet with constant term r
  JetC sigma_tilde(int ri) const;       // sigma(z) - r (valuation 1)
  JetC sub_jet(int ri, bool sigma_side, int pole, int ord);  // 1/(slot - r_pole)^ord
  JetPP eval_at(const MultiPP& w, int ri, const std::vector<int>& slot_kind,
                const std::vector<int>& spectator_ids, int cap);
  JetPP bracket(int g, int n, int ri, int cap);
  void build(int g, int n);

  SpectralCurve curve_;
  Parametrization par_;
  int margin_;
  std::map<std::pair<int, int>, MultiPP> memo_;
  std::map<std::tuple<int, int, int, int>, JetC> sub_cache_;
};

// Closed-form vs recursion comparison record.
struct TrComparison {
  cplx f_oracle, f_closed;
  double abs_diff;
};

TrComparison tr_free_energy_check(const SpectralCurve& curve, int g);

}  // namespace hgbps
