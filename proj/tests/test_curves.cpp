#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hgbps/curves.hpp"
#include "hgbps/errors.hpp"

using namespace hgbps;

namespace {

// Reproducible valid parameter draws with margins away from the excluded sets.
MassParams random_masses(CurveLabel l, Rng& rng) {
  for (int tries = 0; tries < 200; ++tries) {
    MassParams m;
    for (const auto& p : even_poles(l)) m[p] = rng.box(-1.5, 1.5, -1.5, 1.5);
    bool ok = true;
    auto far = [&](cplx v) { return std::abs(v) > 0.15; };
    for (const auto& [k, v] : m) ok = ok && far(v);
    if (l == CurveLabel::HG) {
      cplx a = m["0"], b = m["1"], c = m["inf"];
      ok = ok && far(a + b + c) && far(a + b - c) && far(a - b + c) && far(a - b - c);
    }
    if (l == CurveLabel::dHG) ok = ok && far(m["1"] + m["inf"]) && far(m["1"] - m["inf"]);
    if (l == CurveLabel::Kum) ok = ok && far(m["0"] + m["inf"]) && far(m["0"] - m["inf"]);
    if (ok) return m;
  }
  FAIL("no valid mass draw");
  return {};
}

NuParams zero_nu(CurveLabel l) {
  NuParams nu;
  for (const auto& p : even_poles(l)) nu[p] = 0.0;
  return nu;
}

const std::vector<CurveLabel> kParametrized = {
    CurveLabel::HG,  CurveLabel::dHG, CurveLabel::Kum,  CurveLabel::Leg, CurveLabel::Bes,
    CurveLabel::Whi, CurveLabel::Web, CurveLabel::dBes, CurveLabel::Ai};

}  // namespace

TEST_CASE("mass validation from the curve table") {
  // (Web, m_inf = 1) -> Q = x^2/4 - 1
  SpectralCurve web = get_curve(CurveLabel::Web, {{"inf", 1.0}}, {{"inf", 0.0}});
  CHECK(std::abs(web.q_eval(2.0) - cplx(0.0)) < 1e-15);
  CHECK(std::abs(web.q_eval(4.0) - cplx(3.0)) < 1e-15);

  // (HG, m = (1,1,1)) is valid: all factors of Delta_HG nonzero
  CHECK_NOTHROW((void)get_curve(CurveLabel::HG, {{"0", 1.0}, {"1", 1.0}, {"inf", 1.0}},
                                zero_nu(CurveLabel::HG)));
  // (HG, m = (1,1,2)): m_0 + m_1 - m_inf = 0
  CHECK_THROWS_AS((void)get_curve(CurveLabel::HG, {{"0", 1.0}, {"1", 1.0}, {"inf", 2.0}},
                                  zero_nu(CurveLabel::HG)),
                  Error);
  CHECK_THROWS_AS((void)get_curve(CurveLabel::Web, {{"inf", 0.0}}, {{"inf", 0.0}}), Error);
  CHECK_THROWS_AS((void)get_curve(CurveLabel::Web, {{"0", 1.0}}, {{"inf", 0.0}}), Error);
}

TEST_CASE("parametrization identity and residue convention") {
  Rng rng(101);
  for (CurveLabel l : kParametrized) {
    int draws = (l == CurveLabel::dBes || l == CurveLabel::Ai) ? 1 : 100;
    for (int d = 0; d < draws; ++d) {
      SpectralCurve c = get_curve(l, random_masses(l, rng), zero_nu(l));
      Parametrization par = build_parametrization(c);
      // identity y(z)^2 = Q(x(z)) at random sample points
      for (int j = 0; j < 20; ++j) {
        cplx z = rng.box(-2.0, 2.0, -2.0, 2.0);
        if (std::abs(par.x.den.eval(z)) < 1e-3 || std::abs(par.y.den.eval(z)) < 1e-3) continue;
        cplx y = par.y.eval(z);
        cplx q = c.q_eval(par.x.eval(z));
        if (std::abs(q) > 1e3) continue;  // evaluation ill-conditioned next to a pole
        CHECK(std::abs(y * y - q) <= 1e-12 * std::max(1.0, std::abs(q)));
      }
      // involution: x(s(z)) = x(z), y(s(z)) = -y(z)
      for (int j = 0; j < 5; ++j) {
        cplx z = rng.box(-2.0, 2.0, -2.0, 2.0);
        cplx zb = par.conj.apply(z);
        if (std::abs(par.x.den.eval(z)) < 1e-3 || std::abs(par.x.den.eval(zb)) < 1e-3) continue;
        if (std::abs(par.y.den.eval(z)) < 1e-3 || std::abs(par.y.den.eval(zb)) < 1e-3) continue;
        CHECK(std::abs(par.x.eval(zb) - par.x.eval(z)) < 1e-9 * std::max(1.0, std::abs(par.x.eval(z))));
        CHECK(std::abs(par.y.eval(zb) + par.y.eval(z)) < 1e-9 * std::max(1.0, std::abs(par.y.eval(z))));
      }
      // residues: Res_{p_{s+-}} y dx = +- m_s (the constructor verifies "+";
      // check the minus label too)
      PolyFrac ydx{par.y.num * par.dx.num, par.y.den * par.dx.den};
      auto safe_radius = [&](const ZPoint& q) {
        if (q.at_inf) {
          double dmax = 1.0;
          for (const auto& [k, o] : par.pole_points)
            if (!o.at_inf) dmax = std::max(dmax, std::abs(o.z));
          for (cplx r : par.ramification) dmax = std::max(dmax, std::abs(r));
          return 0.25 / dmax;
        }
        double d = 1.0;
        for (const auto& [k, o] : par.pole_points)
          if (!o.at_inf && std::abs(o.z - q.z) > 1e-12) d = std::min(d, std::abs(o.z - q.z));
        for (cplx r : par.ramification) d = std::min(d, std::abs(r - q.z));
        return 0.25 * d;
      };
      for (const auto& s : c.poles()) {
        const ZPoint& pm = par.pole_points.at(s + "-");
        cplx res = residue(ydx, pm, safe_radius(pm));
        CHECK(std::abs(res + c.mass(s)) < 1e-6 * std::max(1.0, std::abs(c.mass(s))));
      }
      // ramification points are simple: dx has a simple zero, dy nonzero there
      for (cplx r : par.ramification) {
        CHECK(std::abs(par.dx.eval(r)) < 1e-8);
        cplx d2 = par.dx.derivative().eval(r);
        CHECK(std::abs(d2) > 1e-8);
        PolyFrac dy = par.y.derivative();
        bool dy_nonzero = std::abs(dy.den.eval(r)) < 1e-12 || std::abs(dy.eval(r)) > 1e-10;
        CHECK(dy_nonzero);
        CHECK(par.conj.is_involution_fixed(r));
      }
    }
  }
}

TEST_CASE("airy parametrization is the direct substitution") {
  SpectralCurve ai = get_curve(CurveLabel::Ai, {}, {});
  Parametrization par = build_parametrization(ai);
  cplx z(0.7, 0.3);
  CHECK(std::abs(par.x.eval(z) - z * z) < 1e-15);
  CHECK(std::abs(par.y.eval(z) - z) < 1e-15);
}

TEST_CASE("weber parametrization shape") {
  SpectralCurve web = get_curve(CurveLabel::Web, {{"inf", 1.0}}, {{"inf", 0.0}});
  Parametrization par = build_parametrization(web);
  CHECK(par.ramification.size() == 2);
  PolyFrac ydx{par.y.num * par.dx.num, par.y.den * par.dx.den};
  cplx res = residue(ydx, par.pole_points.at("inf+"), 0.1);
  CHECK(std::abs(res - cplx(1.0)) < 1e-9);
}

TEST_CASE("quantum ODE coefficients") {
  Rng rng(55);
  SUBCASE("HG matches the printed theorem form") {
    MassParams m = {{"0", cplx(0.8, 0.1)}, {"1", cplx(1.1, -0.2)}, {"inf", cplx(1.7, 0.3)}};
    NuParams nu = {{"0", cplx(0.3)}, {"1", cplx(-0.4, 0.1)}, {"inf", cplx(0.2)}};
    SpectralCurve c = get_curve(CurveLabel::HG, m, nu);
    QuantumOdeCoeffs ode = quantum_ode(c);
    // q1 = (1 - nu_{0+} - nu_{0-})/x + (1 - nu_{1+} - nu_{1-})/(x-1) with the
    // canonical split nu_{s+-} = +-nu_s/2 (and (1 +- nu_inf)/2 at infinity)
    cplx x(1.7, 0.8);
    cplx q1_expect = (1.0 - ode.nu_split.at("0+") - ode.nu_split.at("0-")) / x +
                     (1.0 - ode.nu_split.at("1+") - ode.nu_split.at("1-")) / (x - 1.0);
    CHECK(std::abs(ode.q1.eval(x) - q1_expect) < 1e-12);
    CHECK(std::abs(ode.nu_split.at("inf+") + ode.nu_split.at("inf-") - 1.0) < 1e-15);
    CHECK(std::abs(ode.nu_split.at("inf+") - ode.nu_split.at("inf-") - nu.at("inf")) < 1e-15);
    // r0 = -Q, r1 and r2 as printed
    CHECK(std::abs(ode.r0.eval(x) + c.q_eval(x)) < 1e-12);
    cplx n0 = nu.at("0"), n1 = nu.at("1"), ni = nu.at("inf");
    cplx m0 = m.at("0"), m1 = m.at("1"), mi = m.at("inf");
    cplx r1_expect = -n0 * m0 / (x * x * (x - 1.0)) + n1 * m1 / (x * (x - 1.0) * (x - 1.0)) +
                     ni * mi / (x * (x - 1.0));
    CHECK(std::abs(ode.r1.eval(x) - r1_expect) < 1e-12);
    cplx r2_expect = -ode.nu_split.at("0+") * ode.nu_split.at("0-") / (x * x * (x - 1.0)) +
                     ode.nu_split.at("1+") * ode.nu_split.at("1-") / (x * (x - 1.0) * (x - 1.0)) +
                     ode.nu_split.at("inf+") * ode.nu_split.at("inf-") / (x * (x - 1.0));
    CHECK(std::abs(ode.r2.eval(x) - r2_expect) < 1e-12);
  }
  SUBCASE("classical limits for Web and Bes") {
    for (CurveLabel l : {CurveLabel::Web, CurveLabel::Bes}) {
      MassParams m = random_masses(l, rng);
      NuParams nu = zero_nu(l);
      nu[even_poles(l)[0]] = cplx(0.4, -0.1);
      SpectralCurve c = get_curve(l, m, nu);
      QuantumOdeCoeffs ode = quantum_ode(c);
      for (int j = 0; j < 10; ++j) {
        cplx x = rng.box(0.3, 3.0, 0.2, 2.0);
        CHECK(std::abs(ode.r0.eval(x) + c.q_eval(x)) < 1e-11 * std::max(1.0, std::abs(c.q_eval(x))));
      }
    }
  }
  SUBCASE("unsupported labels") {
    SpectralCurve leg = get_curve(CurveLabel::Leg, {{"inf", 1.0}}, {{"inf", 0.0}});
    CHECK_THROWS_AS((void)quantum_ode(leg), Error);
  }
}

TEST_CASE("curve JSON round trip") {
  SpectralCurve c = get_curve(CurveLabel::Kum, {{"0", cplx(1.0, 0.5)}, {"inf", cplx(0.25, -0.3)}},
                              {{"0", cplx(0.1)}, {"inf", cplx(0.0, 0.2)}});
  SpectralCurve back = curve_from_json(curve_to_json(c));
  CHECK(back.label == c.label);
  for (const auto& [k, v] : c.m) CHECK(std::abs(back.m.at(k) - v) < 1e-15);
  for (const auto& [k, v] : c.nu) CHECK(std::abs(back.nu.at(k) - v) < 1e-15);
}

TEST_CASE("experimental labels carry data but no parametrization") {
  SpectralCurve d14 = get_curve(CurveLabel::Deg3_14, {{"inf", 1.0}}, {{"inf", 0.3}});
  CHECK_THROWS_AS((void)build_parametrization(d14), Error);
  CHECK_THROWS_AS((void)d14.q_rational(), Error);
}
