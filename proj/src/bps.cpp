#include "hgbps/bps.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>

#include "hgbps/errors.hpp"

namespace hgbps {

std::vector<size_t> BpsStructure::in_half_plane_strict(double theta) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < active.size(); ++i) {
    double margin = 0;
    bool in = in_half_plane(charge(active[i].first), theta, &margin);
    if (margin < kTolAngle)
      fail(ErrorCode::RayIsBps, "half-plane boundary within tolerance of a BPS ray");
    if (in) out.push_back(i);
  }
  return out;
}

BpsStructure bps_spectrum(const SpectralCurve& curve) {
  BpsStructure s{curve, Lattice(curve), {}};
  const Lattice& lat = s.lat;
  auto add_pm = [&](const LatticeElement& e, int omega) {
    s.active.emplace_back(e, omega);
    s.active.emplace_back(-e, omega);
  };
  auto loop = [&](const std::string& pole) {
    return LatticeElement::cycle(lat, pole, +1) - LatticeElement::cycle(lat, pole, -1);
  };
  switch (curve.label) {
    case CurveLabel::HG: {
      for (int e1 : {+1, -1})
        for (int e2 : {+1, -1})
          add_pm(LatticeElement::cycle(lat, "0", +1) + LatticeElement::cycle(lat, "1", e1) +
                     LatticeElement::cycle(lat, "inf", e2),
                 1);
      for (const char* p : {"0", "1", "inf"}) add_pm(loop(p), -1);
      break;
    }
    case CurveLabel::dHG: {
      for (int e : {+1, -1})
        add_pm(LatticeElement::cycle(lat, "1", +1) + LatticeElement::cycle(lat, "inf", e), 2);
      for (const char* p : {"1", "inf"}) add_pm(loop(p), -1);
      break;
    }
    case CurveLabel::Kum: {
      for (int e : {+1, -1})
        add_pm(LatticeElement::cycle(lat, "0", +1) + LatticeElement::cycle(lat, "inf", e), 1);
      add_pm(loop("0"), -1);
      break;
    }
    case CurveLabel::Leg:
      add_pm(LatticeElement::cycle(lat, "inf", +1), 4);
      add_pm(loop("inf"), -1);
      break;
    case CurveLabel::Bes: add_pm(loop("0"), -1); break;
    case CurveLabel::Whi: add_pm(LatticeElement::cycle(lat, "inf", +1), 2); break;
    case CurveLabel::Web: add_pm(LatticeElement::cycle(lat, "inf", +1), 1); break;
    case CurveLabel::Deg3_14: add_pm(LatticeElement::cycle(lat, "inf", +1), 1); break;
    case CurveLabel::dBes:
    case CurveLabel::Ai:
    case CurveLabel::Deg3_23: break;
  }
  return s;
}

Ray classify_ray(const BpsStructure& s, double theta) {
  Ray r{wrap_angle_02pi(theta), false, {}};
  for (size_t i = 0; i < s.active.size(); ++i) {
    double d = std::abs(angle_diff(std::arg(s.charge(s.active[i].first)), theta));
    if (d < kTolAngle) {
      r.is_bps = true;
      r.classes.push_back(i);
    }
  }
  return r;
}

std::vector<Ray> bps_rays(const BpsStructure& s) {
  std::vector<Ray> rays;
  for (size_t i = 0; i < s.active.size(); ++i) {
    double a = wrap_angle_02pi(std::arg(s.charge(s.active[i].first)));
    bool found = false;
    for (auto& r : rays)
      if (std::abs(angle_diff(r.angle, a)) < kTolAngle) {
        r.classes.push_back(i);
        found = true;
        break;
      }
    if (!found) rays.push_back(Ray{a, true, {i}});
  }
  std::sort(rays.begin(), rays.end(), [](const Ray& a, const Ray& b) { return a.angle < b.angle; });
  return rays;
}

GenericityReport is_generic(const SpectralCurve& curve) {
  if (curve.label == CurveLabel::Leg) return {true, kPi, "W_Leg is empty by definition"};
  BpsStructure s = bps_spectrum(curve);
  double margin = kPi;
  std::string witness;
  for (size_t i = 0; i < s.active.size(); ++i)
    for (size_t j = 0; j < s.active.size(); ++j) {
      if (i == j) continue;
      LatticeElement diff = reduce(s.lat, s.active[i].first - s.active[j].first);
      if (diff.is_zero_reduced()) continue;  // same class
      double a = std::abs(std::arg(s.charge(s.active[i].first) / s.charge(s.active[j].first)));
      if (a < margin) {
        margin = a;
        witness = element_to_json(s.lat, s.active[i].first) + " vs " +
                  element_to_json(s.lat, s.active[j].first);
      }
    }
  return {margin >= kTolAngle, margin, witness};
}

double support_constant(const BpsStructure& s) {
  double c = std::numeric_limits<double>::infinity();
  for (const auto& [g, omega] : s.active) {
    LatticeElement r = reduce(s.lat, g);
    double norm2 = 0;
    for (int v : r.cyc) norm2 += double(v) * v;
    for (int v : r.path) norm2 += double(v) * v;
    c = std::min(c, std::abs(s.charge(g)) / std::sqrt(norm2));
  }
  return c;
}

BpsTransform bps_automorphism(const BpsStructure& s, double theta_lo, double theta_hi) {
  double width = wrap_angle_02pi(theta_hi - theta_lo);
  if (width <= 0 || width >= kPi)
    fail(ErrorCode::ConfigError, "sector must be acute and positively oriented");
  for (double th : {theta_lo, theta_hi})
    if (classify_ray(s, th).is_bps) fail(ErrorCode::BoundaryIsBps, "sector boundary is a BPS ray");
  BpsTransform t{theta_lo, theta_hi, {}};
  for (const auto& [g, omega] : s.active) {
    double d = wrap_angle_02pi(std::arg(s.charge(g)) - theta_lo);
    if (d > 0 && d < width) t.crossed.emplace_back(g, omega);
  }
  return t;
}

cplx apply_transform(const BpsStructure& s, const BpsTransform& t,
                     const std::function<cplx(const LatticeElement&)>& X,
                     const LatticeElement& mu) {
  cplx r = X(mu);
  for (const auto& [g, omega] : t.crossed) {
    long long e = omega * pairing(s.lat, g, mu);
    if (e) r *= pow_int(1.0 - X(g), e);
  }
  return r;
}

QuadraticRefinement spectrum_refinement(const BpsStructure& s) {
  return make_refinement(s.lat, s.active);
}

std::string spectrum_to_json(const BpsStructure& s) {
  nlohmann::json j;
  j["curve"] = nlohmann::json::parse(curve_to_json(s.curve));
  j["active"] = nlohmann::json::array();
  for (const auto& [g, omega] : s.active) {
    nlohmann::json row;
    row["class"] = nlohmann::json::parse(element_to_json(s.lat, g));
    cplx z = s.charge(g);
    cplx z2pii = z / kTwoPiI;
    row["omega"] = omega;
    row["Z"] = {{"re", z.real()}, {"im", z.imag()}};
    row["Z_over_2pii"] = {{"re", z2pii.real()}, {"im", z2pii.imag()}};
    row["ray_angle"] = wrap_angle_02pi(std::arg(z));
    j["active"].push_back(row);
  }
  j["rays"] = nlohmann::json::array();
  for (const auto& r : bps_rays(s)) {
    nlohmann::json row;
    row["angle"] = r.angle;
    row["classes"] = r.classes;
    j["rays"].push_back(row);
  }
  auto gen = is_generic(s.curve);
  j["generic"] = gen.generic;
  j["genericity_margin"] = gen.margin;
  j["support_constant"] = s.active.empty() ? 0.0 : support_constant(s);
  return j.dump(2);
}

}  // namespace hgbps
