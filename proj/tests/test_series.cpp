#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hgbps/errors.hpp"
#include "hgbps/series.hpp"
#include "hgbps/special.hpp"

using namespace hgbps;

namespace {

cplx B(int k, cplx t) { return bernoulli_poly(k, t); }

// Printed closed forms for the path Voros coefficients, used verbatim as the
// test oracle against the spectrum-sum implementation.
cplx printed_voros(CurveLabel l, const std::string& s, int k, const MassParams& m,
                   const NuParams& nu) {
  double kk = double(k) * double(k + 1);
  switch (l) {
    case CurveLabel::HG: {
      cplx m0 = m.at("0"), m1 = m.at("1"), mi = m.at("inf");
      cplx n0 = nu.at("0"), n1 = nu.at("1"), ni = nu.at("inf");
      auto term = [&](int e1, int e2) {
        return B(k + 1, (1.0 + n0 + double(e1) * n1 + double(e2) * ni) / 2.0) /
               pow_int(m0 + double(e1) * m1 + double(e2) * mi, k);
      };
      auto loop = [&](cplx nn, cplx mm) {
        return (B(k + 1, nn) + B(k + 1, 1.0 + nn)) / pow_int(2.0 * mm, k);
      };
      if (s == "0")
        return (term(1, 1) + term(-1, 1) + term(1, -1) + term(-1, -1) - loop(n0, m0)) / kk;
      if (s == "1") {
        // permutation (m0, m1, nu0, nu1) swapped in the printed formula
        auto term1 = [&](int e1, int e2) {
          return B(k + 1, (1.0 + n1 + double(e1) * n0 + double(e2) * ni) / 2.0) /
                 pow_int(m1 + double(e1) * m0 + double(e2) * mi, k);
        };
        return (term1(1, 1) + term1(-1, 1) + term1(1, -1) + term1(-1, -1) - loop(n1, m1)) / kk;
      }
      // s == "inf": permutation (m0 <-> minf, nu0 <-> nuinf)
      auto termi = [&](int e1, int e2) {
        return B(k + 1, (1.0 + ni + double(e1) * n1 + double(e2) * n0) / 2.0) /
               pow_int(mi + double(e1) * m1 + double(e2) * m0, k);
      };
      return (termi(1, 1) + termi(-1, 1) + termi(1, -1) + termi(-1, -1) - loop(ni, mi)) / kk;
    }
    case CurveLabel::dHG: {
      cplx m1 = m.at("1"), mi = m.at("inf");
      cplx n1 = nu.at("1"), ni = nu.at("inf");
      auto loop = [&](cplx nn, cplx mm) {
        return (B(k + 1, nn) + B(k + 1, 1.0 + nn)) / pow_int(2.0 * mm, k);
      };
      if (s == "1")
        return (2.0 * B(k + 1, (1.0 + n1 + ni) / 2.0) / pow_int(m1 + mi, k) +
                2.0 * B(k + 1, (1.0 + n1 - ni) / 2.0) / pow_int(m1 - mi, k) - loop(n1, m1)) /
               kk;
      return (2.0 * B(k + 1, (1.0 + n1 + ni) / 2.0) / pow_int(m1 + mi, k) -
              2.0 * B(k + 1, (1.0 + n1 - ni) / 2.0) / pow_int(m1 - mi, k) - loop(ni, mi)) /
             kk;
    }
    case CurveLabel::Kum: {
      cplx m0 = m.at("0"), mi = m.at("inf");
      cplx n0 = nu.at("0"), ni = nu.at("inf");
      cplx a = B(k + 1, (1.0 + n0 + ni) / 2.0) / pow_int(m0 + mi, k);
      cplx b = B(k + 1, (1.0 + n0 - ni) / 2.0) / pow_int(m0 - mi, k);
      if (s == "0")
        return (a + b - (B(k + 1, n0) + B(k + 1, 1.0 + n0)) / pow_int(2.0 * m0, k)) / kk;
      return (a - b) / kk;
    }
    case CurveLabel::Leg: {
      cplx mi = m.at("inf"), ni = nu.at("inf");
      return (4.0 * B(k + 1, (1.0 + ni) / 2.0) / pow_int(mi, k) -
              (B(k + 1, ni) + B(k + 1, 1.0 + ni)) / pow_int(2.0 * mi, k)) /
             kk;
    }
    case CurveLabel::Bes: {
      cplx m0 = m.at("0"), n0 = nu.at("0");
      return -(B(k + 1, n0) + B(k + 1, 1.0 + n0)) / (kk * pow_int(2.0 * m0, k));
    }
    case CurveLabel::Whi: {
      cplx mi = m.at("inf"), ni = nu.at("inf");
      return 2.0 * B(k + 1, (1.0 + ni) / 2.0) / (kk * pow_int(mi, k));
    }
    case CurveLabel::Web: {
      cplx mi = m.at("inf"), ni = nu.at("inf");
      return B(k + 1, (1.0 + ni) / 2.0) / (kk * pow_int(mi, k));
    }
    default: return 0.0;
  }
}

SpectralCurve random_curve(CurveLabel l, Rng& rng, double nu_span = 0.7) {
  for (int tries = 0; tries < 300; ++tries) {
    MassParams m;
    NuParams nu;
    for (const auto& p : even_poles(l)) {
      m[p] = rng.box(-1.4, 1.4, -1.4, 1.4);
      nu[p] = rng.box(-nu_span, nu_span, -0.4, 0.4);
    }
    try {
      SpectralCurve c = get_curve(l, m, nu);
      auto far = [&](cplx v) { return std::abs(v) > 0.35; };
      bool ok = true;
      for (const auto& [key, v] : m) ok = ok && far(v);
      if (l == CurveLabel::HG)
        ok = ok && far(m["0"] + m["1"] + m["inf"]) && far(m["0"] + m["1"] - m["inf"]) &&
             far(m["0"] - m["1"] + m["inf"]) && far(m["0"] - m["1"] - m["inf"]);
      if (l == CurveLabel::dHG) ok = ok && far(m["1"] + m["inf"]) && far(m["1"] - m["inf"]);
      if (l == CurveLabel::Kum) ok = ok && far(m["0"] + m["inf"]) && far(m["0"] - m["inf"]);
      if (ok) return c;
    } catch (const Error&) {
    }
  }
  FAIL("no curve draw");
  return get_curve(CurveLabel::Web, {{"inf", 1.0}}, {{"inf", 0.0}});
}

const std::vector<CurveLabel> kVorosCurves = {CurveLabel::HG,  CurveLabel::dHG, CurveLabel::Kum,
                                              CurveLabel::Leg, CurveLabel::Bes, CurveLabel::Whi,
                                              CurveLabel::Web};

}  // namespace

TEST_CASE("formal series arithmetic") {
  FormalSeries a(-1, {cplx(2.0), cplx(0.0), cplx(1.0)});  // 2/h + h
  FormalSeries b(0, {cplx(1.0), cplx(3.0)});              // 1 + 3h
  FormalSeries p = a * b;
  CHECK(p.coeff(-1) == cplx(2.0));
  CHECK(p.coeff(0) == cplx(6.0));
  CHECK(p.coeff(1) == cplx(1.0));
  CHECK(p.coeff(2) == cplx(3.0));
  FormalSeries d = a.derivative_hbar();
  CHECK(d.coeff(-2) == cplx(-2.0));
  CHECK(d.coeff(0) == cplx(1.0));
  // exp: e^{c h} coefficients
  FormalSeries lin(1, {cplx(0.5)});
  FormalSeries e = lin.exp_series(4);
  CHECK(std::abs(e.coeff(2) - cplx(0.125)) < 1e-15);
  CHECK(std::abs(e.eval(cplx(0.3)) - std::exp(0.15)) < 1e-6);
  CHECK_THROWS_AS((void)a.exp_series(3), Error);
}

TEST_CASE("cycle Voros coefficients") {
  SpectralCurve web = get_curve(CurveLabel::Web, {{"inf", 1.0}}, {{"inf", 0.0}});
  Lattice lat(web);
  FormalSeries v = voros_cycle(web, LatticeElement::cycle(lat, "inf", +1));
  CHECK(std::abs(v.coeff(-1) - kTwoPiI) < 1e-14);
  CHECK(std::abs(v.coeff(0)) < 1e-14);
  FormalSeries z = voros_cycle(web, LatticeElement::zero(lat));
  CHECK(std::abs(z.coeff(-1)) < 1e-15);
  // Bes, gamma_{0+}-gamma_{0-}, m_0 = 1, nu_0 = 1 -> 4 pi i / h - 2 pi i
  SpectralCurve bes = get_curve(CurveLabel::Bes, {{"0", 1.0}}, {{"0", 1.0}});
  Lattice lb(bes);
  FormalSeries vb = voros_cycle(bes, LatticeElement::cycle(lb, "0", +1) -
                                         LatticeElement::cycle(lb, "0", -1));
  CHECK(std::abs(vb.coeff(-1) - 2.0 * kTwoPiI) < 1e-14);
  CHECK(std::abs(vb.coeff(0) + kTwoPiI) < 1e-14);
  CHECK_THROWS_AS((void)voros_cycle(web, LatticeElement::beta(lat, "inf")), Error);
}

TEST_CASE("pinned path Voros values") {
  SpectralCurve web = get_curve(CurveLabel::Web, {{"inf", 1.0}}, {{"inf", 0.0}});
  Lattice lat(web);
  auto beta = LatticeElement::beta(lat, "inf");
  CHECK(std::abs(voros_path_coeff(web, beta, 1) - cplx(-1.0 / 24.0)) < 1e-15);
  CHECK(std::abs(voros_path_coeff(web, beta, 2)) < 1e-15);
  SpectralCurve bes = get_curve(CurveLabel::Bes, {{"0", 1.0}}, {{"0", 0.0}});
  Lattice lb(bes);
  CHECK(std::abs(voros_path_coeff(bes, LatticeElement::beta(lb, "0"), 1) - cplx(-1.0 / 12.0)) <
        1e-15);
  CHECK_THROWS_AS((void)voros_path_coeff(get_curve(CurveLabel::Ai, {}, {}),
                                         LatticeElement::zero(Lattice(CurveLabel::Ai)), 1),
                  Error);
}

TEST_CASE("appendix equality: spectrum sum reproduces the printed formulas") {
  Rng rng(401);
  for (CurveLabel l : kVorosCurves) {
    for (int draw = 0; draw < 20; ++draw) {
      SpectralCurve c = random_curve(l, rng);
      Lattice lat(c);
      for (const auto& s : even_poles(l)) {
        auto beta = LatticeElement::beta(lat, s);
        for (int k = 1; k <= 12; ++k) {
          cplx got = voros_path_coeff(c, beta, k);
          cplx want = printed_voros(l, s, k, c.m, c.nu);
          CHECK(rel_err(got, want) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("appendix permutation symmetries hold exactly") {
  Rng rng(402);
  SpectralCurve c = random_curve(CurveLabel::HG, rng);
  // V_{beta_1}(m0,m1,minf; nu) = V_{beta_0} with (m0,nu0) <-> (m1,nu1)
  SpectralCurve swapped = get_curve(
      CurveLabel::HG, {{"0", c.m.at("1")}, {"1", c.m.at("0")}, {"inf", c.m.at("inf")}},
      {{"0", c.nu.at("1")}, {"1", c.nu.at("0")}, {"inf", c.nu.at("inf")}});
  Lattice lat(c);
  for (int k = 1; k <= 8; ++k) {
    cplx v1 = voros_path_coeff(c, LatticeElement::beta(lat, "1"), k);
    cplx v0s = voros_path_coeff(swapped, LatticeElement::beta(lat, "0"), k);
    CHECK(rel_err(v1, v0s) < 1e-12);
  }
  SpectralCurve d = random_curve(CurveLabel::dHG, rng);
  SpectralCurve dsw = get_curve(CurveLabel::dHG, {{"1", d.m.at("inf")}, {"inf", d.m.at("1")}},
                                {{"1", d.nu.at("inf")}, {"inf", d.nu.at("1")}});
  Lattice dl(d);
  for (int k = 1; k <= 8; ++k) {
    cplx vi = voros_path_coeff(d, LatticeElement::beta(dl, "inf"), k);
    cplx v1s = voros_path_coeff(dsw, LatticeElement::beta(dl, "1"), k);
    CHECK(rel_err(vi, v1s) < 1e-12);
  }
}

TEST_CASE("half-plane independence of path Voros and free energies") {
  Rng rng(403);
  SpectralCurve c = random_curve(CurveLabel::Kum, rng);
  Lattice lat(c);
  BpsStructure s = bps_spectrum(c);
  double t1 = pick_half_plane(s);
  double t2 = wrap_angle_02pi(t1 + kPi / 2.0 + 0.21);
  for (double probe : {t2, wrap_angle_02pi(t1 + 2.4)}) {
    bool bps_boundary = false;
    try {
      (void)s.in_half_plane_strict(probe);
    } catch (const Error&) {
      bps_boundary = true;
    }
    if (bps_boundary) continue;
    for (int k = 1; k <= 6; ++k) {
      cplx a = voros_path_coeff(c, LatticeElement::beta(lat, "0"), k, t1);
      cplx b = voros_path_coeff(c, LatticeElement::beta(lat, "0"), k, probe);
      CHECK(rel_err(a, b) < 1e-12);
    }
    for (int g = 2; g <= 4; ++g)
      CHECK(rel_err(free_energy(c, g, t1), free_energy(c, g, probe)) < 1e-12);
  }
}

TEST_CASE("pinned free energies") {
  SpectralCurve web = get_curve(CurveLabel::Web, {{"inf", 1.0}}, {{"inf", 0.0}});
  CHECK(rel_err(free_energy(web, 2), cplx(-1.0 / 240.0)) < 1e-14);
  CHECK(rel_err(free_energy(web, 3), cplx(1.0 / 1008.0)) < 1e-14);
  SpectralCurve ai = get_curve(CurveLabel::Ai, {}, {});
  CHECK(std::abs(free_energy(ai, 2)) == 0.0);
  // Weber F_2 = -1/(240 m^2)
  SpectralCurve web2 = get_curve(CurveLabel::Web, {{"inf", cplx(0.7, 0.4)}}, {{"inf", 0.0}});
  cplx m = web2.mass("inf");
  CHECK(rel_err(free_energy(web2, 2), -1.0 / (240.0 * m * m)) < 1e-13);
}

TEST_CASE("voros potential: exterior-derivative property by finite differences") {
  Rng rng(404);
  for (CurveLabel l : {CurveLabel::Web, CurveLabel::Bes, CurveLabel::Kum, CurveLabel::HG}) {
    SpectralCurve c = random_curve(l, rng, 0.5);
    BpsStructure s = bps_spectrum(c);
    double theta = pick_half_plane(s);
    Lattice lat(c);
    double h = 1e-6;
    for (const auto& p : even_poles(l)) {
      for (int k = 1; k <= 4; ++k) {
        SpectralCurve cp = c, cm = c;
        cp.m[p] += h;
        cm.m[p] -= h;
        cplx dphi = (voros_potential_coeff(cp, k, theta) - voros_potential_coeff(cm, k, theta)) /
                    (2.0 * h);
        cplx v = voros_path_coeff(c, LatticeElement::beta(lat, p), k, theta);
        CHECK(std::abs(dphi - v) < 1e-7 * std::max(1.0, std::abs(v)));
      }
    }
  }
  // Web, k = 2, nu_inf = 0: phi_2 proportional to B_3(1/2) = 0
  SpectralCurve web = get_curve(CurveLabel::Web, {{"inf", 1.0}}, {{"inf", 0.0}});
  CHECK(std::abs(voros_potential_coeff(web, 2, pick_half_plane(bps_spectrum(web)))) < 1e-15);
  SpectralCurve ai = get_curve(CurveLabel::Ai, {}, {});
  CHECK(std::abs(voros_potential_coeff(ai, 3, 0.1)) == 0.0);
}

TEST_CASE("weber difference-equation oracle") {
  // k = 1, m = 1, nu = 0 -> -1/24 ; k = 2, nu = 0 -> 0
  CHECK(std::abs(weber_difference_oracle(1, 1.0, 0.0) - cplx(-1.0 / 24.0)) < 1e-14);
  CHECK(std::abs(weber_difference_oracle(2, 1.0, 0.0)) < 1e-14);
  // equality with the path Voros coefficients for k = 1..10
  Rng rng(405);
  for (int draw = 0; draw < 6; ++draw) {
    cplx m = rng.box(0.4, 2.0, -0.6, 0.6);
    cplx nu = rng.box(-0.9, 0.9, -0.4, 0.4);
    SpectralCurve web = get_curve(CurveLabel::Web, {{"inf", m}}, {{"inf", nu}});
    Lattice lat(web);
    auto beta = LatticeElement::beta(lat, "inf");
    for (int k = 1; k <= 10; ++k) {
      cplx lhs = weber_difference_oracle(k, m, nu);
      cplx rhs = voros_path_coeff(web, beta, k);
      CHECK(rel_err(lhs, rhs) < 1e-12);
    }
  }
}

TEST_CASE("experimental labels: catalog data only") {
  SpectralCurve d14 = get_curve(CurveLabel::Deg3_14, {{"inf", cplx(1.3, 0.2)}}, {{"inf", cplx(0.4)}});
  Lattice lat(d14);
  auto beta = LatticeElement::beta(lat, "inf");
  for (int k = 1; k <= 6; ++k) {
    cplx want = bernoulli_poly(k + 1, d14.nu_of("inf")) / double(k * (k + 1)) /
                pow_int(d14.mass("inf"), k);
    CHECK(rel_err(voros_path_coeff(d14, beta, k), want) < 1e-14);
  }
  SpectralCurve d23 = get_curve(CurveLabel::Deg3_23, {{"inf", 1.0}}, {{"inf", 0.7}});
  Lattice l23(d23);
  for (int k = 1; k <= 6; ++k)
    CHECK(std::abs(voros_path_coeff(d23, LatticeElement::beta(l23, "inf"), k)) == 0.0);
}
