#include "hgbps/borel.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hgbps/errors.hpp"
#include "hgbps/special.hpp"

namespace hgbps {

BorelContext BorelContext::make(const SpectralCurve& curve, double theta) {
  BpsStructure s = bps_spectrum(curve);
  if (classify_ray(s, theta).is_bps) fail(ErrorCode::RayIsBps, "Borel ray is a BPS ray");
  return BorelContext{std::move(s), theta};
}

cplx log_borel_sum_path_symbol(const BorelContext& ctx, const LatticeElement& beta, cplx hbar) {
  const SpectralCurve& curve = ctx.structure.curve;
  if (is_experimental(curve.label))
    fail(ErrorCode::Unsupported, "no Borel machinery for experimental labels");
  Lattice lat(curve);
  LatticeElement red = reduce(lat, beta);
  for (int v : red.cyc)
    if (v) fail(ErrorCode::UnsupportedClass, "Borel sum defined for path classes");
  if (std::abs(angle_diff(std::arg(hbar), ctx.theta)) >= kPi / 2.0 - 1e-12)
    fail(ErrorCode::Unsupported, "hbar outside the half-plane of the ray");
  cplx total = 0;
  for (size_t i : ctx.structure.in_half_plane_strict(ctx.theta)) {
    const auto& [g, omega] = ctx.structure.active[i];
    long long pair_bg = pairing(lat, beta, g);
    if (!pair_bg) continue;
    cplx w = ctx.structure.charge(g) / (kTwoPiI * hbar);
    cplx nu = nu_functional(curve, g);
    if (omega != -1) {
      total += double(omega * pair_bg) * log_lambda(w, (1.0 - nu) / 2.0);
    } else {
      // exponent Omega <beta,gamma> / 2 on each factor of the two-Lambda split
      double e = double(omega * pair_bg) / 2.0;
      total += e * (log_lambda(w, 1.0 - nu / 2.0) + log_lambda(w, -nu / 2.0));
    }
  }
  return total;
}

cplx borel_sum_path_symbol(const BorelContext& ctx, const LatticeElement& beta, cplx hbar) {
  return std::exp(log_borel_sum_path_symbol(ctx, beta, hbar));
}

namespace {

// G_t(w) = e^{t w}/(e^w - 1) - 1/w - t + 1/2 = sum_{k >= 2} B_k(t) w^{k-1}/k!,
// the regularized Bernoulli generating kernel.
cplx bernoulli_kernel(cplx t, cplx w) {
  if (std::abs(w) < 0.5) {
    cplx sum = 0, p = w;  // p = w^{k-1}
    double fact = 2.0;    // k!
    for (int k = 2; k <= 26; ++k) {
      sum += bernoulli_poly(k, t) * p / fact;
      p *= w;
      fact *= (k + 1);
    }
    return sum;
  }
  cplx em1 = std::exp(w) - 1.0;
  if (std::abs(em1) < 1e-12) fail(ErrorCode::PoleHit, "Borel transform pole");
  return std::exp(t * w) / em1 - 1.0 / w - t + 0.5;
}

}  // namespace

cplx borel_transform(const SpectralCurve& curve, const LatticeElement& beta, cplx zeta) {
  Lattice lat(curve);
  LatticeElement red = reduce(lat, beta);
  for (int v : red.cyc)
    if (v) fail(ErrorCode::UnsupportedClass, "Borel transform defined for path classes");
  double c = red.path[0];
  switch (curve.label) {
    case CurveLabel::Web: {
      cplx m = curve.mass("inf"), nu = curve.nu_of("inf");
      cplx t = (1.0 + nu) / 2.0;
      if (std::abs(zeta) < 1e-12) {
        // zeta -> 0 limit: B_2(t) / (2m) = V_{beta,1}
        return c * bernoulli_poly(2, t) / (2.0 * m);
      }
      return c * bernoulli_kernel(t, zeta / m) / zeta;
    }
    case CurveLabel::Bes: {
      cplx m = curve.mass("0"), nu = curve.nu_of("0");
      if (std::abs(zeta) < 1e-12)
        return -c * (bernoulli_poly(2, nu) + bernoulli_poly(2, 1.0 + nu)) / (4.0 * m);
      cplx w = zeta / (2.0 * m);
      return -c * (bernoulli_kernel(nu, w) + bernoulli_kernel(1.0 + nu, w)) / zeta;
    }
    default:
      fail(ErrorCode::Unsupported, "printed Borel transforms exist for Web and Bes only");
  }
}

QuadratureResult laplace_quadrature(const std::function<cplx(cplx)>& transform, double theta,
                                    cplx hbar, double abs_tol) {
  cplx dir = std::polar(1.0, theta);
  double decay = (dir / hbar).real();
  if (decay <= 0) fail(ErrorCode::Unsupported, "hbar outside the half-plane of the ray");
  double t_max = 42.0 / decay;  // damping below 1e-18 past t_max
  using gk = boost::math::quadrature::gauss_kronrod<double, 15>;
  auto integrate_piece = [&](double a, double b, double* err) {
    auto f_re = [&](double t) {
      cplx z = transform(t * dir) * std::exp(-t * dir / hbar);
      return z.real();
    };
    auto f_im = [&](double t) {
      cplx z = transform(t * dir) * std::exp(-t * dir / hbar);
      return z.imag();
    };
    double e1 = 0, e2 = 0;
    double re = gk::integrate(f_re, a, b, 15, abs_tol / 8.0, &e1);
    double im = gk::integrate(f_im, a, b, 15, abs_tol / 8.0, &e2);
    *err = e1 + e2;
    return cplx(re, im) * dir;
  };
  // Panels doubling away from t = 0 where the transform is merely continuous.
  QuadratureResult res{0.0, 0.0};
  double a = 0.0, width = std::min(t_max / 64.0, 0.25 * std::abs(hbar) / std::abs(dir / hbar));
  if (width <= 0 || !std::isfinite(width)) width = t_max / 64.0;
  while (a < t_max) {
    double b = std::min(a + width, t_max);
    double err = 0;
    res.value += integrate_piece(a, b, &err);
    res.error_estimate += err;
    a = b;
    width *= 2.0;
  }
  if (!(res.error_estimate < 1e3 * abs_tol) || !std::isfinite(std::abs(res.value)))
    fail(ErrorCode::QuadratureFail, "Laplace quadrature tolerance not reached");
  return res;
}

QuadratureResult borel_sum_quadrature(const BorelContext& ctx, const LatticeElement& beta,
                                      cplx hbar) {
  if (classify_ray(ctx.structure, ctx.theta).is_bps)
    fail(ErrorCode::RayIsBps, "Laplace ray is a BPS ray");
  const SpectralCurve& curve = ctx.structure.curve;
  auto f = [&](cplx zeta) { return borel_transform(curve, beta, zeta); };
  return laplace_quadrature(f, ctx.theta, hbar);
}

}  // namespace hgbps
