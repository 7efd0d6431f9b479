#pragma once

#include <string>
#include <vector>

#include "hgbps/curves.hpp"

namespace hgbps {

// Integer lattice spanned by the residue cycles gamma_{s,+-} around the even
// poles (modulo the single relation of the punctured sphere) and the paths
// beta_s. Basis ordered lexicographically by pole label, then sign, with
// gamma_{last,-} eliminated by the relation.
class Lattice {
 public:
  explicit Lattice(CurveLabel label) : poles_(even_poles(label)) {}
  explicit Lattice(const SpectralCurve& c) : Lattice(c.label) {}

  int n_poles() const { return static_cast<int>(poles_.size()); }
  const std::vector<std::string>& poles() const { return poles_; }
  int pole_index(const std::string& s) const;

  // Reduced-basis size: 2n-1 cycle generators (n>0) plus n paths.
  int cycle_basis_size() const { return n_poles() == 0 ? 0 : 2 * n_poles() - 1; }
  int basis_size() const { return cycle_basis_size() + n_poles(); }

 private:
  std::vector<std::string> poles_;
};

struct LatticeElement {
  // Raw coefficients over (gamma_{s+}, gamma_{s-}) pairs, then paths beta_s.
  std::vector<int> cyc;   // size 2n, slots (2i, 2i+1) = (s_i+, s_i-)
  std::vector<int> path;  // size n

  static LatticeElement zero(const Lattice& lat);
  static LatticeElement cycle(const Lattice& lat, const std::string& pole, int sign, int coeff = 1);
  static LatticeElement beta(const Lattice& lat, const std::string& pole, int coeff = 1);

  LatticeElement& operator+=(const LatticeElement& o);
  LatticeElement& operator-=(const LatticeElement& o);
  friend LatticeElement operator+(LatticeElement a, const LatticeElement& b) { return a += b; }
  friend LatticeElement operator-(LatticeElement a, const LatticeElement& b) { return a -= b; }
  friend LatticeElement operator*(int k, LatticeElement a) {
    for (auto& v : a.cyc) v *= k;
    for (auto& v : a.path) v *= k;
    return a;
  }
  LatticeElement operator-() const { return -1 * (*this); }

  bool has_path_part() const;
  bool is_zero_reduced() const;
};

// Canonical form: coefficient of gamma_{last,-} removed via the relation
// sum_s (gamma_{s+} + gamma_{s-}) = 0.
LatticeElement reduce(const Lattice& lat, LatticeElement e);

bool equal_mod_relation(const Lattice& lat, const LatticeElement& a, const LatticeElement& b);

// Image under the covering involution: swaps s+ <-> s-, negates paths.
LatticeElement involution(const LatticeElement& e);

// Membership in Gamma (anti-invariant cycles).
bool in_gamma(const Lattice& lat, const LatticeElement& e);

// Antisymmetric pairing on the almost-doubled lattice:
//   <gamma_{s,eps}, beta_{s'}> = -eps delta_{s,s'},  cycles pair to zero.
long long pairing(const Lattice& lat, const LatticeElement& a, const LatticeElement& b);

// Z(gamma) = sum eps * coeff * 2 pi i m_s; requires zero path part.
cplx central_charge(const SpectralCurve& curve, const LatticeElement& e);

// Z extended to the almost-doubled lattice with Z^vee = 0.
cplx central_charge_doubled(const SpectralCurve& curve, const LatticeElement& e);

// nu(gamma_{s,eps}) = eps nu_s, extended by nu(beta) = 0.
cplx nu_functional(const SpectralCurve& curve, const LatticeElement& e);

// A twisted homomorphism Gamma_D -> C^*, stored by its values on the reduced
// ordered basis and extended by
//   xi(sum n_i e_i) = prod xi(e_i)^{n_i} (-1)^{sum_{i<j} n_i n_j <e_i,e_j>}.
class TwistedValue {
 public:
  TwistedValue(const Lattice& lat, std::vector<cplx> basis_values);
  cplx eval(const LatticeElement& e) const;
  const std::vector<cplx>& basis_values() const { return vals_; }
  const Lattice& lattice() const { return lat_; }

 private:
  Lattice lat_;
  std::vector<cplx> vals_;
};

inline cplx twisted_eval(const TwistedValue& xi, const LatticeElement& e) { return xi.eval(e); }

// Sign assignment sigma with sigma(gamma_BPS) = -1 iff Omega != -1 and
// sigma(beta) = +1, extended as a twisted homomorphism.
struct QuadraticRefinement {
  TwistedValue xi;
  cplx operator()(const LatticeElement& e) const { return xi.eval(e); }
};

// Solves for basis signs satisfying the constraints; `active` lists the BPS
// classes with their indices. Throws Inconsistent when no assignment exists.
QuadraticRefinement make_refinement(const Lattice& lat,
                                    const std::vector<std::pair<LatticeElement, int>>& active);

std::string element_to_json(const Lattice& lat, const LatticeElement& e);
LatticeElement element_from_json(const Lattice& lat, const std::string& text);

}  // namespace hgbps
