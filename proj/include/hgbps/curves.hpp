#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgbps/poly.hpp"

namespace hgbps {

enum class CurveLabel { HG, dHG, Kum, Leg, Bes, Whi, Web, dBes, Ai, Deg3_14, Deg3_23 };

const char* label_name(CurveLabel l);
std::optional<CurveLabel> parse_label(const std::string& s);
bool is_experimental(CurveLabel l);

// Ordered labels of the even-order poles of Q dx^2 ("0", "1", "inf").
const std::vector<std::string>& even_poles(CurveLabel l);

using MassParams = std::map<std::string, cplx>;
using NuParams = std::map<std::string, cplx>;

struct SpectralCurve {
  CurveLabel label;
  MassParams m;
  NuParams nu;

  cplx mass(const std::string& pole) const { return m.at(pole); }
  cplx nu_of(const std::string& pole) const { return nu.at(pole); }
  const std::vector<std::string>& poles() const { return even_poles(label); }

  // Q(x) from the curve table; unavailable for the experimental labels.
  PolyFrac q_rational() const;
  cplx q_eval(cplx x) const { return q_rational().eval(x); }

  std::string turning_points_description() const;
};

// Validates membership in M_label and parameter dimensions.
SpectralCurve get_curve(CurveLabel label, const MassParams& m, const NuParams& nu);

// A point on the z-sphere (possibly infinity).
struct ZPoint {
  bool at_inf = false;
  cplx z{0.0};
  static ZPoint infinity() { return {true, 0.0}; }
  static ZPoint at(cplx z) { return {false, z}; }
};

struct Parametrization {
  PolyFrac x, y;           // rational in z
  PolyFrac dx;             // x'(z)
  Mobius conj;             // covering involution z -> zbar
  std::vector<cplx> ramification;       // simple zeros of dx (all finite)
  std::map<std::string, ZPoint> pole_points;  // keys "0+","0-","inf+","inf-", odd poles "odd:inf"

  cplx y_dx(cplx z) const { return y.eval(z) * dx.eval(z); }
};

// Genus-zero rational parametrization with the residue labeling
// Res_{p_{s,+-}} y dx = +- m_s. Unsupported for the experimental labels.
Parametrization build_parametrization(const SpectralCurve& curve);

// Numeric residue of f dz at a finite point or at infinity (trapezoid circle rule).
cplx residue(const PolyFrac& f, const ZPoint& p, double radius);

struct QuantumOdeCoeffs {
  PolyFrac q0, q1, r0, r1, r2;                 // hbar^2 psi'' + (q0+h q1) h psi' + (r0+h r1+h^2 r2) psi = 0
  std::map<std::string, cplx> nu_split;        // quantization parameter per puncture of the parametrization
};

// Quantum curves for the WKB oracle set {HG, Web, Bes}.
QuantumOdeCoeffs quantum_ode(const SpectralCurve& curve);

std::string curve_to_json(const SpectralCurve& c);
SpectralCurve curve_from_json(const std::string& text);

}  // namespace hgbps
