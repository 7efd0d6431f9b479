#include "hgbps/rhp.hpp"

#include "hgbps/errors.hpp"
#include "hgbps/special.hpp"

namespace hgbps {

namespace {

void require_in_sector(cplx hbar, double theta) {
  if (std::abs(angle_diff(std::arg(hbar), theta)) >= kPi / 2.0 - 1e-12)
    fail(ErrorCode::Unsupported, "hbar outside the half-plane of the ray");
}

// log xi(-gamma) with the branch Im log in [0, 2 pi).
cplx branch_reduced_eta(const TwistedValue& xi, const LatticeElement& gamma) {
  cplx v = xi.eval(-gamma);
  double a = wrap_angle_02pi(std::arg(v));
  cplx lg = cplx(std::log(std::abs(v)), a);
  return lg / kTwoPiI;
}

void check_even_loop_pairing(const Lattice& lat, const LatticeElement& mu,
                             const LatticeElement& gamma, long long p) {
  (void)lat;
  (void)mu;
  (void)gamma;
  if (p % 2 != 0)
    fail(ErrorCode::Inconsistent, "pairing with an Omega=-1 class must be even");
}

}  // namespace

std::string default_chosen_pole(CurveLabel label) {
  const auto& p = even_poles(label);
  if (p.empty()) return "";
  return p.front();
}

NuParams nu_star(CurveLabel label, const std::string& chosen_pole) {
  NuParams nu;
  for (const auto& p : even_poles(label)) nu[p] = 0.0;
  switch (label) {
    case CurveLabel::Web:
    case CurveLabel::Whi:
    case CurveLabel::Leg: nu["inf"] = 1.0; break;
    case CurveLabel::Bes: break;  // nu_0 = 0
    case CurveLabel::Kum: nu["inf"] = 1.0; break;
    case CurveLabel::HG:
    case CurveLabel::dHG: {
      std::string pole = chosen_pole.empty() ? default_chosen_pole(label) : chosen_pole;
      if (!nu.count(pole)) fail(ErrorCode::ConfigError, "chosen pole " + pole + " not on curve");
      nu[pole] = 1.0;
      break;
    }
    case CurveLabel::dBes:
    case CurveLabel::Ai: break;
    default: fail(ErrorCode::Unsupported, "nu_* not defined for experimental labels");
  }
  return nu;
}

TwistedValue xi_from_nu(const BpsStructure& s) {
  QuadraticRefinement sigma = spectrum_refinement(s);
  const Lattice& lat = s.lat;
  std::vector<cplx> vals = sigma.xi.basis_values();
  int cb = lat.cycle_basis_size();
  int idx = 0;
  for (int i = 0; i < 2 * lat.n_poles(); ++i) {
    if (i == 2 * lat.n_poles() - 1) continue;  // eliminated basis element
    int pole = i / 2, sign = (i % 2 == 0) ? +1 : -1;
    cplx nu_e = double(sign) * s.curve.nu_of(lat.poles()[pole]);
    vals[idx] *= std::exp(kPi * kI * nu_e);
    ++idx;
  }
  (void)cb;
  return TwistedValue(lat, std::move(vals));
}

RhpSolution RhpSolution::voros(const SpectralCurve& curve) {
  if (is_experimental(curve.label))
    fail(ErrorCode::Unsupported, "no RHP machinery for experimental labels");
  BpsStructure s = bps_spectrum(curve);
  TwistedValue xi = xi_from_nu(s);
  return RhpSolution(Kind::Vor, std::move(s), std::move(xi));
}

RhpSolution RhpSolution::minimal(const SpectralCurve& curve, const TwistedValue& xi) {
  if (is_experimental(curve.label))
    fail(ErrorCode::Unsupported, "no RHP machinery for experimental labels");
  return RhpSolution(Kind::Min, bps_spectrum(curve), xi);
}

RhpSolution RhpSolution::holomorphic(const SpectralCurve& curve, const std::string& chosen_pole) {
  SpectralCurve star = curve;
  star.nu = nu_star(curve.label, chosen_pole);
  BpsStructure s = bps_spectrum(star);
  TwistedValue xi = xi_from_nu(s);
  return RhpSolution(Kind::Hol, std::move(s), std::move(xi));
}

cplx RhpSolution::lambda_sum(const LatticeElement& mu, double theta, cplx hbar) const {
  require_in_sector(hbar, theta);
  const SpectralCurve& curve = s_.curve;
  cplx logx = 0;
  for (size_t i : s_.in_half_plane_strict(theta)) {
    const auto& [g, omega] = s_.active[i];
    long long p = pairing(s_.lat, mu, g);
    if (!p) continue;
    cplx w = s_.charge(g) / (kTwoPiI * hbar);
    if (kind_ == Kind::Vor) {
      cplx nu = nu_functional(curve, g);
      if (omega != -1) {
        logx += double(omega * p) * log_lambda(w, (1.0 - nu) / 2.0);
      } else {
        check_even_loop_pairing(s_.lat, mu, g, p);
        logx += double(omega * p) / 2.0 *
                (log_lambda(w, 1.0 - nu / 2.0) + log_lambda(w, -nu / 2.0));
      }
    } else {
      logx += double(omega * p) * log_lambda(w, branch_reduced_eta(xi_, g));
    }
  }
  return logx;
}

cplx RhpSolution::log_eval(const LatticeElement& mu, double theta, cplx hbar) const {
  return -central_charge_doubled(s_.curve, mu) / hbar + std::log(xi_.eval(mu)) +
         lambda_sum(mu, theta, hbar);
}

cplx RhpSolution::eval(const LatticeElement& mu, double theta, cplx hbar) const {
  return std::exp(log_eval(mu, theta, hbar));
}

double RhpSolution::rh2_deviation(const LatticeElement& mu, double theta, cplx hbar) const {
  // X e^{Z/h} / xi equals the exponentiated Lambda-product exactly
  return std::abs(std::exp(lambda_sum(mu, theta, hbar)) - 1.0);
}

double jump_check(const RhpSolution& sol, const LatticeElement& mu, double theta_hi,
                  double theta_lo, cplx hbar) {
  const BpsStructure& s = sol.structure();
  BpsTransform t = bps_automorphism(s, theta_lo, theta_hi);
  require_in_sector(hbar, theta_lo);
  require_in_sector(hbar, theta_hi);
  cplx log_ratio = sol.log_eval(mu, theta_lo, hbar) - sol.log_eval(mu, theta_hi, hbar);
  for (const auto& [g, omega] : t.crossed) {
    long long p = pairing(s.lat, g, mu);
    if (!p) continue;
    cplx xg = sol.eval(g, theta_hi, hbar);
    log_ratio -= double(omega * p) * std::log(1.0 - xg);
  }
  return std::abs(std::exp(log_ratio) - 1.0);
}

namespace {

bool strips_hold(const BpsStructure& s, const std::vector<size_t>& idx) {
  for (size_t i : idx) {
    const auto& [g, omega] = s.active[i];
    double re = nu_functional(s.curve, g).real();
    bool ok = (omega != -1) ? (re > -1.0 && re <= 1.0) : (re > -2.0 && re <= 0.0);
    if (!ok) return false;
  }
  return true;
}

bool nu_is_star(const SpectralCurve& curve, std::string* chosen_out) {
  if (is_experimental(curve.label)) return false;
  for (const auto& p : even_poles(curve.label)) {
    // try each admissible chosen pole for HG/dHG; fixed table otherwise
    NuParams star;
    try {
      star = nu_star(curve.label, p);
    } catch (const Error&) {
      return false;
    }
    bool match = true;
    for (const auto& [k, v] : star)
      if (std::abs(curve.nu_of(k) - v) > 1e-12) match = false;
    if (match) {
      *chosen_out = p;
      return true;
    }
  }
  return false;
}

}  // namespace

ComparisonFactors comparison_factors(const SpectralCurve& curve, const LatticeElement& beta,
                                     double theta, cplx hbar) {
  BpsStructure s = bps_spectrum(curve);
  Lattice lat(curve);
  auto idx = s.in_half_plane_strict(theta);
  ComparisonFactors out;

  out.strip_valid = strips_hold(s, idx);
  if (out.strip_valid) {
    for (size_t i : idx) {
      const auto& [g, omega] = s.active[i];
      if (omega != -1) continue;
      cplx nu = nu_functional(curve, g);
      cplx z = s.charge(g);
      long long p = pairing(lat, beta, g);
      if (p % 2 != 0) fail(ErrorCode::Inconsistent, "odd pairing with a loop class");
      cplx w = z / (kTwoPiI * hbar);
      // rho factor (1 - pi i nu hbar / Z)^{Omega <beta,gamma>/2}
      out.rho *= pow_int(1.0 - nu / (2.0 * w), omega * p / 2);
      // kappa factor (w - nu/2)^{nu Omega / 4}
      out.kappa *= std::exp(nu * double(omega) / 4.0 * std::log(w - nu / 2.0));
    }
  }

  std::string chosen;
  out.star_valid = nu_is_star(curve, &chosen);
  if (!out.strip_valid && !out.star_valid)
    fail(ErrorCode::NuOutOfStrip, "nu neither inside the comparison strips nor equal to nu_*");
  if (out.star_valid) {
    for (size_t i : idx) {
      const auto& [g, omega] = s.active[i];
      if (omega != -1) continue;
      cplx nu = nu_functional(curve, g);
      if (std::abs(nu) < 1e-12) continue;  // nu(gamma) = 0 loops contribute 1
      double half = nu.real() / 2.0;       // +-1 at nu = nu_*
      long long p = pairing(lat, beta, g);
      cplx w = s.charge(g) / (kTwoPiI * hbar);
      long long e = std::llround(-half) * omega * p / 2;
      out.varrho *= pow_int(1.0 - nu / (2.0 * w), e);
      out.varkappa *= std::exp(0.5 * std::log(w - nu / 2.0));
    }
  }
  return out;
}

cplx log_tau(TauKind kind, const SpectralCurve& curve, double theta, cplx hbar,
             const TwistedValue* xi, const std::string& chosen_pole) {
  if (is_experimental(curve.label))
    fail(ErrorCode::Unsupported, "no tau-function for experimental labels");
  require_in_sector(hbar, theta);
  SpectralCurve work = curve;
  if (kind == TauKind::Hol) work.nu = nu_star(curve.label, chosen_pole);
  BpsStructure s = bps_spectrum(work);
  if (s.active.empty()) return 0.0;

  TwistedValue xi_local = (kind == TauKind::Min && xi) ? *xi : xi_from_nu(s);
  cplx total = 0;
  for (size_t i : s.in_half_plane_strict(theta)) {
    const auto& [g, omega] = s.active[i];
    cplx w = s.charge(g) / (kTwoPiI * hbar);
    switch (kind) {
      case TauKind::Vor: {
        cplx nu = nu_functional(work, g);
        if (omega != -1)
          total += double(omega) * log_upsilon(w, (1.0 - nu) / 2.0);
        else
          total += double(omega) / 2.0 *
                   (log_upsilon(w, 1.0 - nu / 2.0) + log_upsilon(w, -nu / 2.0));
        break;
      }
      case TauKind::Min:
      case TauKind::Hol:
        total += double(omega) * log_upsilon(w, branch_reduced_eta(xi_local, g));
        break;
    }
  }
  return total;
}

cplx log_c_ell(const SpectralCurve& curve, double theta, cplx hbar) {
  BpsStructure s = bps_spectrum(curve);
  cplx total = 0;
  if (s.active.empty()) return total;
  for (size_t i : s.in_half_plane_strict(theta)) {
    const auto& [g, omega] = s.active[i];
    cplx nu = nu_functional(curve, g);
    total += 0.5 * spectrum_bernoulli_weight(2, nu, omega) * double(omega);
  }
  return total * std::log(hbar);
}

cplx log_tau_vor_series(const SpectralCurve& curve, double theta, cplx hbar, int order) {
  cplx total = log_c_ell(curve, theta, hbar);
  for (int k = 1; k <= order; ++k)
    total -= double(k) * voros_potential_coeff(curve, k, theta) * pow_int(hbar, k - 1);
  return total;
}

double tau_tr_check(const SpectralCurve& curve, double theta, cplx hbar, int genus_max) {
  cplx lt = log_tau(TauKind::Hol, curve, theta, hbar);
  cplx series = free_energy_one(curve, theta, hbar);
  for (int g = 2; g <= genus_max; ++g)
    series += pow_int(hbar, 2 * g - 2) * free_energy(curve, g, theta);
  return std::abs(lt - series);
}

}  // namespace hgbps
