#pragma once

#include <functional>

#include "hgbps/lattice.hpp"

namespace hgbps {

struct BpsStructure {
  SpectralCurve curve;
  Lattice lat;
  // Active classes with BPS indices, both orientations listed.
  std::vector<std::pair<LatticeElement, int>> active;

  cplx charge(const LatticeElement& e) const { return central_charge(curve, e); }

  // Indices of active classes with Z in the open half-plane {arg in (theta, theta+pi)};
  // throws RayIsBps when some Z lies on the boundary within kTolAngle.
  std::vector<size_t> in_half_plane_strict(double theta) const;
};

// Table-3 spectrum for any catalog label (empty for Ai/dBes/Deg3_23).
BpsStructure bps_spectrum(const SpectralCurve& curve);

struct Ray {
  double angle;
  bool is_bps;
  std::vector<size_t> classes;  // indices into BpsStructure::active
};

Ray classify_ray(const BpsStructure& s, double theta);

// All BPS ray angles in [0, 2 pi), deduplicated, with supporting classes.
std::vector<Ray> bps_rays(const BpsStructure& s);

struct GenericityReport {
  bool generic;
  double margin;  // min |arg(Z(g)/Z(g'))| over distinct pairs; 0 when exactly aligned
  std::string witness;
};

GenericityReport is_generic(const SpectralCurve& curve);

// Support property constant: min |Z(gamma)| / ||gamma||_2 over active classes.
double support_constant(const BpsStructure& s);

struct BpsTransform {
  double theta_lo, theta_hi;
  std::vector<std::pair<LatticeElement, int>> crossed;  // active classes inside the sector
};

// S(Delta) for the sector (theta_lo, theta_hi); boundaries must be non-BPS.
BpsTransform bps_automorphism(const BpsStructure& s, double theta_lo, double theta_hi);

// Pullback action on a twisted-torus valued map evaluated at mu:
//   S(Delta)* X(mu) = X(mu) * prod (1 - X(gamma))^{Omega <gamma, mu>}.
cplx apply_transform(const BpsStructure& s, const BpsTransform& t,
                     const std::function<cplx(const LatticeElement&)>& X, const LatticeElement& mu);

// The quadratic refinement solved from the spectrum constraints.
QuadraticRefinement spectrum_refinement(const BpsStructure& s);

std::string spectrum_to_json(const BpsStructure& s);

}  // namespace hgbps
