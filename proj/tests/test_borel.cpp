#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hgbps/borel.hpp"
#include "hgbps/errors.hpp"
#include "hgbps/special.hpp"

using namespace hgbps;

namespace {

SpectralCurve web(cplx m = 1.0, cplx nu = 0.0) {
  return get_curve(CurveLabel::Web, {{"inf", m}}, {{"inf", nu}});
}
SpectralCurve bes(cplx m = 1.0, cplx nu = 0.0) {
  return get_curve(CurveLabel::Bes, {{"0", m}}, {{"0", nu}});
}

LatticeElement beta_of(const SpectralCurve& c, const std::string& p) {
  return LatticeElement::beta(Lattice(c), p);
}

}  // namespace

TEST_CASE("closed-form Borel sums match the printed sector formulas") {
  cplx m(1.0, 0.0), nu(0.3, 0.1);
  SpectralCurve c = web(m, nu);
  auto beta = beta_of(c, "inf");
  double arg_ray = std::arg(kTwoPiI * m);  // BPS ray angle
  cplx hbar(0.21, 0.02);

  // just below: S_l e^V = Lambda(m/h, (1-nu)/2)
  BorelContext below = BorelContext::make(c, arg_ray - 0.4);
  cplx got = log_borel_sum_path_symbol(below, beta, hbar);
  CHECK(std::abs(got - log_lambda(m / hbar, (1.0 - nu) / 2.0)) < 1e-13);

  // just above: Lambda(-m/h, (1+nu)/2)^{-1}
  BorelContext above = BorelContext::make(c, arg_ray + 0.4);
  cplx hbar2(0.05, 0.15);
  cplx got2 = log_borel_sum_path_symbol(above, beta, hbar2);
  CHECK(std::abs(got2 + log_lambda(-m / hbar2, (1.0 + nu) / 2.0)) < 1e-13);

  // Bessel lower sector: Lambda(2m/h, 1-nu)^{-1} Lambda(2m/h, -nu)^{-1}
  cplx mb(0.9, -0.1), nub(0.2, 0.05);
  SpectralCurve cb = bes(mb, nub);
  auto beta0 = beta_of(cb, "0");
  double ray_b = std::arg(kTwoPiI * mb);
  BorelContext below_b = BorelContext::make(cb, ray_b - 0.5);
  cplx hb(0.18, -0.03);
  cplx got3 = log_borel_sum_path_symbol(below_b, beta0, hb);
  cplx want3 = -log_lambda(2.0 * mb / hb, 1.0 - nub) - log_lambda(2.0 * mb / hb, -nub);
  CHECK(std::abs(got3 - want3) < 1e-13);
  // upper sector: Lambda(-2m/h, nu) Lambda(-2m/h, 1+nu)
  BorelContext above_b = BorelContext::make(cb, ray_b + 0.5);
  cplx hb2 = hb * std::polar(1.0, 0.9);
  cplx got4 = log_borel_sum_path_symbol(above_b, beta0, hb2);
  cplx want4 = log_lambda(-2.0 * mb / hb2, nub) + log_lambda(-2.0 * mb / hb2, 1.0 + nub);
  CHECK(std::abs(got4 - want4) < 1e-13);
}

TEST_CASE("borel transform: limit, poles, taylor match") {
  cplx m(1.0), nu(0.0);
  SpectralCurve c = web(m, nu);
  auto beta = beta_of(c, "inf");
  // zeta -> 0 limit equals V_{beta,1} = -1/24
  CHECK(std::abs(borel_transform(c, beta, cplx(0.0)) - cplx(-1.0 / 24.0)) < 1e-14);
  CHECK(std::abs(borel_transform(c, beta, cplx(1e-13)) - cplx(-1.0 / 24.0)) < 1e-10);
  // pole at 2 pi i m
  CHECK_THROWS_AS((void)borel_transform(c, beta, kTwoPiI * m), Error);
  // first 8 Taylor coefficients at 0 equal V_{beta,k+1} / k!  (via probe circle)
  cplx mc(1.1, 0.3), nc(0.25, -0.1);
  for (SpectralCurve cc : {web(mc, nc), bes(mc, nc)}) {
    auto b = beta_of(cc, cc.poles()[0]);
    const int n = 256;
    const double r = 0.7;
    for (int k = 0; k < 8; ++k) {
      cplx acc = 0;
      for (int j = 0; j < n; ++j) {
        cplx zeta = std::polar(r, 2.0 * kPi * j / n);
        acc += borel_transform(cc, b, zeta) / pow_int(zeta, k);
      }
      acc /= double(n);
      double fact = 1;
      for (int t = 2; t <= k; ++t) fact *= t;
      cplx want = voros_path_coeff(cc, b, k + 1) / fact;
      CHECK(rel_err(acc, want) < 1e-9);
    }
  }
}

TEST_CASE("laplace quadrature equals the closed form") {
  // Web, theta = 0, h = 0.1, m = 1, nu = 0 -> log Lambda(10, 1/2) to 1e-8
  SpectralCurve c = web();
  auto beta = beta_of(c, "inf");
  BorelContext ctx = BorelContext::make(c, 0.0);
  QuadratureResult q = borel_sum_quadrature(ctx, beta, cplx(0.1));
  CHECK(std::abs(q.value - log_lambda(cplx(10.0), cplx(0.5))) < 1e-8);

  // zero transform -> zero
  auto zero = [](cplx) { return cplx(0.0); };
  CHECK(std::abs(laplace_quadrature(zero, 0.2, cplx(0.1, 0.02)).value) < 1e-14);

  // Watson: result - h V_{beta,1} = O(h^2)
  cplx v1 = voros_path_coeff(c, beta, 1);
  double prev = 1e9;
  for (double h : {0.2, 0.1, 0.05, 0.025}) {
    double d = std::abs(borel_sum_quadrature(ctx, beta, cplx(h)).value - h * v1);
    CHECK(d < 0.3 * h * h);
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("quadrature vs closed form on a sector grid (Web and Bes)") {
  Rng rng(71);
  for (int which = 0; which < 2; ++which) {
    cplx m = rng.box(0.7, 1.3, -0.2, 0.2);
    cplx nu = rng.box(-0.4, 0.4, -0.2, 0.2);
    SpectralCurve c = which == 0 ? web(m, nu) : bes(m, nu);
    auto beta = beta_of(c, c.poles()[0]);
    double ray = std::arg(kTwoPiI * m);
    for (int sector = -1; sector <= 1; sector += 2) {
      for (int i = 0; i < 5; ++i) {
        double theta = ray + sector * (0.25 + 0.5 * i / 4.0);
        BorelContext ctx = BorelContext::make(c, theta);
        for (int j = 0; j < 5; ++j) {
          cplx hbar = std::polar(0.08 + 0.05 * j, theta + 0.2 * (j - 2) / 2.0);
          cplx closed = log_borel_sum_path_symbol(ctx, beta, hbar);
          QuadratureResult q = borel_sum_quadrature(ctx, beta, hbar);
          CHECK(std::abs(q.value - closed) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("sector independence inside a chamber") {
  cplx m(1.0, 0.2), nu(0.15, 0.0);
  SpectralCurve c = web(m, nu);
  auto beta = beta_of(c, "inf");
  double ray = std::arg(kTwoPiI * m);
  cplx hbar = std::polar(0.12, ray - 0.7);
  BorelContext a = BorelContext::make(c, ray - 0.5);
  BorelContext b = BorelContext::make(c, ray - 0.9);
  CHECK(std::abs(log_borel_sum_path_symbol(a, beta, hbar) -
                 log_borel_sum_path_symbol(b, beta, hbar)) < 1e-12);
  // quadrature route agrees between the two rays as well
  CHECK(std::abs(borel_sum_quadrature(a, beta, hbar).value -
                 borel_sum_quadrature(b, beta, hbar).value) < 1e-9);
}

TEST_CASE("asymptoticity of the Borel sum") {
  cplx m(1.0), nu(0.2);
  SpectralCurve c = web(m, nu);
  auto beta = beta_of(c, "inf");
  BorelContext ctx = BorelContext::make(c, 0.0);
  const int K = 6;
  double prev_ratio = 0;
  for (double h : {0.2, 0.1, 0.05, 0.025, 0.0125}) {
    cplx partial = 0;
    for (int k = 1; k <= K; ++k) partial += voros_path_coeff(c, beta, k) * pow_int(cplx(h), k);
    double diff = std::abs(log_borel_sum_path_symbol(ctx, beta, cplx(h)) - partial);
    double bound = std::pow(h, K + 1);
    CHECK(diff < 50.0 * bound);  // empirical constant C
    (void)prev_ratio;
  }
}

TEST_CASE("error paths") {
  SpectralCurve c = web();
  auto beta = beta_of(c, "inf");
  CHECK_THROWS_AS((void)BorelContext::make(c, kPi / 2.0), Error);  // BPS ray
  BorelContext ctx = BorelContext::make(c, 0.0);
  CHECK_THROWS_AS((void)log_borel_sum_path_symbol(ctx, beta, cplx(-0.1, 0.0)), Error);
  Lattice lat(c);
  CHECK_THROWS_AS(
      (void)log_borel_sum_path_symbol(ctx, LatticeElement::cycle(lat, "inf", +1), cplx(0.1)),
      Error);
  SpectralCurve leg = get_curve(CurveLabel::Leg, {{"inf", 1.0}}, {{"inf", 0.0}});
  CHECK_THROWS_AS((void)borel_transform(leg, beta_of(leg, "inf"), cplx(0.1)), Error);
}
