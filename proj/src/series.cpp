#include "hgbps/series.hpp"

#include "hgbps/errors.hpp"
#include "hgbps/special.hpp"

namespace hgbps {

cplx FormalSeries::eval(cplx hbar) const {
  cplx r = 0;
  for (int k = hi(); k >= lo_; --k) r = r * hbar + coeff(k);
  return r * pow_int(hbar, lo_);
}

FormalSeries FormalSeries::truncated(int k_max) const {
  if (k_max >= hi()) return *this;
  int len = k_max - lo_ + 1;
  if (len <= 0) return FormalSeries();
  return FormalSeries(lo_, std::vector<cplx>(c_.begin(), c_.begin() + len));
}

FormalSeries FormalSeries::derivative_hbar() const {
  if (c_.empty()) return FormalSeries();
  std::vector<cplx> d(c_.size());
  for (int i = 0; i < (int)c_.size(); ++i) d[i] = c_[i] * double(lo_ + i);
  return FormalSeries(lo_ - 1, std::move(d));
}

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
  if (a.c_.empty()) return b;
  if (b.c_.empty()) return a;
  int lo = std::min(a.lo_, b.lo_), hi = std::max(a.hi(), b.hi());
  std::vector<cplx> c(hi - lo + 1, cplx(0));
  for (int k = lo; k <= hi; ++k) c[k - lo] = a.coeff(k) + b.coeff(k);
  return FormalSeries(lo, std::move(c));
}

FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
  return a + cplx(-1.0) * b;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  if (a.c_.empty() || b.c_.empty()) return FormalSeries();
  std::vector<cplx> c(a.c_.size() + b.c_.size() - 1, cplx(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return FormalSeries(a.lo_ + b.lo_, std::move(c));
}

FormalSeries operator*(cplx s, const FormalSeries& a) {
  std::vector<cplx> c = a.c_;
  for (auto& v : c) v *= s;
  return FormalSeries(a.lo_, std::move(c));
}

FormalSeries FormalSeries::exp_series(int k_max) const {
  if (lo_ < 0 && !c_.empty())
    fail(ErrorCode::Unsupported, "exp of a series with negative orders");
  std::vector<cplx> f(k_max + 1, cplx(0));
  for (int k = std::max(lo_, 0); k <= std::min(hi(), k_max); ++k) f[k] = coeff(k);
  std::vector<cplx> g(k_max + 1, cplx(0));
  g[0] = std::exp(f[0]);
  for (int n = 1; n <= k_max; ++n) {
    cplx s = 0;
    for (int k = 1; k <= n; ++k) s += double(k) * f[k] * g[n - k];
    g[n] = s / double(n);
  }
  return FormalSeries(0, std::move(g));
}

double pick_half_plane(const BpsStructure& s) {
  double theta = 0.3731;
  for (int tries = 0; tries < 64; ++tries) {
    bool ok = true;
    for (const auto& [g, omega] : s.active) {
      double margin = 0;
      in_half_plane(s.charge(g), theta, &margin);
      if (margin < 1e-4) {
        ok = false;
        break;
      }
    }
    if (ok) return theta;
    theta = wrap_angle_02pi(theta + 0.171);
  }
  fail(ErrorCode::RayIsBps, "could not find a non-BPS half-plane");
}

FormalSeries voros_cycle(const SpectralCurve& curve, const LatticeElement& gamma) {
  if (gamma.has_path_part())
    fail(ErrorCode::UnsupportedClass, "cycle Voros coefficient needs a cycle-only class");
  cplx z = central_charge(curve, gamma);
  cplx nu = nu_functional(curve, gamma);
  return FormalSeries(-1, {z, -kPi * kI * nu});
}

cplx spectrum_bernoulli_weight(int k, cplx nu_gamma, int omega) {
  if (omega != -1) return bernoulli_poly(k, (1.0 + nu_gamma) / 2.0);
  return 0.5 * (bernoulli_poly(k, nu_gamma / 2.0) + bernoulli_poly(k, 1.0 + nu_gamma / 2.0));
}

namespace {

void check_path_only(const Lattice& lat, const LatticeElement& beta) {
  LatticeElement r = reduce(lat, beta);
  for (int v : r.cyc)
    if (v) fail(ErrorCode::UnsupportedClass, "expected a path-only class");
}

}  // namespace

cplx voros_path_coeff(const SpectralCurve& curve, const LatticeElement& beta, int k, double theta) {
  if (k < 1) fail(ErrorCode::Unsupported, "path Voros coefficients start at order 1");
  if (curve.label == CurveLabel::Ai || curve.label == CurveLabel::dBes)
    fail(ErrorCode::Unsupported, "Voros coefficients are not defined for Ai/dBes");
  Lattice lat(curve);
  check_path_only(lat, beta);
  if (curve.label == CurveLabel::Deg3_23) return 0.0;
  if (curve.label == CurveLabel::Deg3_14) {
    cplx m = curve.mass("inf"), nu = curve.nu_of("inf");
    return double(beta.path[0]) * bernoulli_poly(k + 1, nu) / double(k * (k + 1)) /
           pow_int(m, k);
  }
  BpsStructure s = bps_spectrum(curve);
  cplx total = 0;
  for (size_t i : s.in_half_plane_strict(theta)) {
    const auto& [g, omega] = s.active[i];
    long long pair_bg = pairing(lat, beta, g);
    if (!pair_bg) continue;
    cplx z = s.charge(g);
    cplx nu = nu_functional(curve, g);
    total += double(omega) * double(pair_bg) * spectrum_bernoulli_weight(k + 1, nu, omega) /
             double(k * (k + 1)) * pow_int(kTwoPiI / z, k);
  }
  return total;
}

cplx voros_path_coeff(const SpectralCurve& curve, const LatticeElement& beta, int k) {
  if (is_experimental(curve.label) || curve.label == CurveLabel::Ai ||
      curve.label == CurveLabel::dBes)
    return voros_path_coeff(curve, beta, k, 0.0);
  return voros_path_coeff(curve, beta, k, pick_half_plane(bps_spectrum(curve)));
}

cplx free_energy(const SpectralCurve& curve, int g, double theta) {
  if (g < 2) fail(ErrorCode::Unsupported, "use free_energy_zero / free_energy_one for g < 2");
  BpsStructure s = bps_spectrum(curve);
  if (s.active.empty()) return 0.0;
  cplx total = 0;
  for (size_t i : s.in_half_plane_strict(theta)) {
    const auto& [gamma, omega] = s.active[i];
    total += double(omega) * pow_int(kTwoPiI / s.charge(gamma), 2 * g - 2);
  }
  return bernoulli_number(2 * g) / double(2 * g * (2 * g - 2)) * total;
}

cplx free_energy(const SpectralCurve& curve, int g) {
  BpsStructure s = bps_spectrum(curve);
  if (s.active.empty()) return free_energy(curve, g, 0.0);
  return free_energy(curve, g, pick_half_plane(s));
}

cplx free_energy_zero(const SpectralCurve& curve, double theta) {
  BpsStructure s = bps_spectrum(curve);
  cplx total = 0;
  if (s.active.empty()) return total;
  for (size_t i : s.in_half_plane_strict(theta)) {
    const auto& [gamma, omega] = s.active[i];
    cplx w = s.charge(gamma) / kTwoPiI;
    total += double(omega) * 0.5 * w * w * std::log(w);
  }
  return total;
}

cplx free_energy_one(const SpectralCurve& curve, double theta, cplx hbar) {
  BpsStructure s = bps_spectrum(curve);
  cplx total = 0;
  if (s.active.empty()) return total;
  for (size_t i : s.in_half_plane_strict(theta)) {
    const auto& [gamma, omega] = s.active[i];
    total += double(omega) * std::log(s.charge(gamma) / (kTwoPiI * hbar));
  }
  return -total / 12.0;
}

cplx voros_potential_coeff(const SpectralCurve& curve, int k, double theta) {
  if (k < 1) fail(ErrorCode::Unsupported, "Voros potential starts at order 1");
  BpsStructure s = bps_spectrum(curve);
  if (s.active.empty()) return 0.0;
  cplx total = 0;
  for (size_t i : s.in_half_plane_strict(theta)) {
    const auto& [gamma, omega] = s.active[i];
    cplx z = s.charge(gamma);
    cplx nu = nu_functional(curve, gamma);
    if (k == 1) {
      total += 0.5 * spectrum_bernoulli_weight(2, nu, omega) * double(omega) *
               std::log(z / kTwoPiI);
    } else {
      total += -1.0 / double((k - 1) * k * (k + 1)) * spectrum_bernoulli_weight(k + 1, nu, omega) *
               double(omega) * pow_int(kTwoPiI / z, k - 1);
    }
  }
  return total;
}

namespace {

// j-th derivative of the normalized Weber free energies.
cplx f0_deriv(cplx m, int j) {
  cplx L = std::log(m);
  switch (j) {
    case 0: return 0.5 * m * m * L;
    case 1: return m * L + 0.5 * m;
    case 2: return L + 1.5;
    default: {
      double sign = ((j - 3) % 2 == 0) ? 1.0 : -1.0;
      double fact = 1.0;
      for (int t = 2; t <= j - 3; ++t) fact *= t;
      return sign * fact * pow_int(m, 2 - j);
    }
  }
}

cplx f1_deriv(cplx m, int j) {
  if (j == 0) return -std::log(m) / 12.0;
  double sign = (j % 2 == 0) ? -1.0 : 1.0;  // (-1)^(j-1)
  double fact = 1.0;
  for (int t = 2; t <= j - 1; ++t) fact *= t;
  return -sign * fact / 12.0 * pow_int(m, -j);
}

cplx fg_deriv(cplx m, int g, int j) {
  cplx c = bernoulli_number(2 * g) / double(2 * g * (2 * g - 2));
  for (int t = 0; t < j; ++t) c *= double(2 - 2 * g - t);
  return c * pow_int(m, 2 - 2 * g - j);
}

}  // namespace

cplx weber_difference_oracle(int k, cplx m_inf, cplx nu_inf) {
  if (k < 1) fail(ErrorCode::Unsupported, "difference oracle defined for k >= 1");
  cplx a = -nu_inf / 2.0;
  auto bracket = [&](int j) { return pow_int(a + 0.5, j) - pow_int(a - 0.5, j); };
  cplx total = 0;
  for (int g = 0; 2 * g - 2 <= k; ++g) {
    int j = k + 2 - 2 * g;
    if (j < 0) continue;
    cplx fj;
    if (g == 0)
      fj = f0_deriv(m_inf, j);
    else if (g == 1)
      fj = f1_deriv(m_inf, j);
    else
      fj = fg_deriv(m_inf, g, j);
    double jfact = 1.0;
    for (int t = 2; t <= j; ++t) jfact *= t;
    total += fj / jfact * bracket(j);
  }
  return total;
}

}  // namespace hgbps
