#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hgbps/errors.hpp"
#include "hgbps/series.hpp"
#include "hgbps/wkb.hpp"

using namespace hgbps;

namespace {

SpectralCurve make(CurveLabel l, std::vector<cplx> ms, std::vector<cplx> nus) {
  MassParams m;
  NuParams nu;
  const auto& poles = even_poles(l);
  for (size_t i = 0; i < poles.size(); ++i) {
    m[poles[i]] = ms[i];
    nu[poles[i]] = nus[i];
  }
  return get_curve(l, m, nu);
}

SpectralCurve random_curve(CurveLabel l, Rng& rng) {
  for (int tries = 0; tries < 400; ++tries) {
    MassParams m;
    NuParams nu;
    for (const auto& p : even_poles(l)) {
      m[p] = rng.box(-1.2, 1.2, -1.2, 1.2);
      nu[p] = rng.box(-0.6, 0.6, -0.3, 0.3);
    }
    try {
      SpectralCurve c = get_curve(l, m, nu);
      auto far = [&](cplx v) { return std::abs(v) > 0.4; };
      bool ok = true;
      for (const auto& [k, v] : m) ok = ok && far(v);
      if (l == CurveLabel::HG)
        ok = ok && far(m["0"] + m["1"] + m["inf"]) && far(m["0"] + m["1"] - m["inf"]) &&
             far(m["0"] - m["1"] + m["inf"]) && far(m["0"] - m["1"] - m["inf"]);
      if (ok) return c;
    } catch (const Error&) {
    }
  }
  FAIL("no draw");
  return make(CurveLabel::Web, {1.0}, {0.0});
}

}  // namespace

TEST_CASE("order -1 odd form is y dx") {
  SpectralCurve c = make(CurveLabel::Web, {cplx(1.2, 0.3)}, {cplx(0.2)});
  WkbSystem sys(c, 2);
  Rng rng(11);
  for (int i = 0; i < 10; ++i) {
    cplx z = rng.box(0.4, 2.0, 0.2, 1.5);
    cplx want = sys.param().y.eval(z) * sys.param().dx.eval(z);
    CHECK(rel_err(sys.form_value(-1, z), want) < 1e-12);
  }
}

TEST_CASE("residues across orders at the labeled punctures") {
  Rng rng(13);
  for (CurveLabel l : {CurveLabel::Web, CurveLabel::Bes, CurveLabel::HG}) {
    SpectralCurve c = random_curve(l, rng);
    WkbSystem sys(c, 4);
    for (const auto& p : even_poles(l)) {
      // order -1: +- m_s ; order 0: -+ nu_s / 2
      CHECK(rel_err(sys.residue_at(p + "+", -1), c.mass(p)) < 1e-9);
      CHECK(rel_err(sys.residue_at(p + "-", -1), -c.mass(p)) < 1e-9);
      CHECK(std::abs(sys.residue_at(p + "+", 0) + c.nu_of(p) / 2.0) < 1e-9);
      CHECK(std::abs(sys.residue_at(p + "-", 0) - c.nu_of(p) / 2.0) < 1e-9);
      // orders k >= 1: residue-free
      for (int k = 1; k <= 4; ++k) CHECK(std::abs(sys.residue_at(p + "+", k)) < 1e-12);
    }
    // odd poles of the parametrization carry no residue at any order k >= 1
    if (l == CurveLabel::Bes)
      for (int k = 1; k <= 4; ++k) CHECK(std::abs(sys.residue_at("odd:inf", k)) < 1e-12);
  }
}

TEST_CASE("pinned Weber and Bessel path integrals") {
  SpectralCurve web = make(CurveLabel::Web, {cplx(1.0)}, {cplx(0.0)});
  WkbSystem sw(web, 2);
  CHECK(std::abs(sw.path_voros("inf", 1) - cplx(-1.0 / 24.0)) < 1e-8);
  CHECK(std::abs(sw.path_voros("inf", 2)) < 1e-8);
  SpectralCurve bes = make(CurveLabel::Bes, {cplx(1.0)}, {cplx(0.0)});
  WkbSystem sb(bes, 1);
  CHECK(std::abs(sb.path_voros("0", 1) - cplx(-1.0 / 12.0)) < 1e-8);
}

TEST_CASE("oracle equality against the spectrum-sum coefficients") {
  Rng rng(17);
  for (CurveLabel l : {CurveLabel::Web, CurveLabel::Bes, CurveLabel::HG}) {
    for (int draw = 0; draw < 5; ++draw) {
      SpectralCurve c = random_curve(l, rng);
      WkbSystem sys(c, 8);
      Lattice lat(c);
      for (const auto& p : even_poles(l)) {
        for (int k = 1; k <= 8; ++k) {
          cplx got = sys.path_voros(p, k);
          cplx want = voros_path_coeff(c, LatticeElement::beta(lat, p), k);
          CHECK(rel_err(got, want) < 1e-7);
        }
      }
    }
  }
}

TEST_CASE("path independence: opposite detours agree") {
  SpectralCurve bes = make(CurveLabel::Bes, {cplx(0.9, 0.25)}, {cplx(0.3, -0.1)});
  WkbSystem sys(bes, 4);
  for (int k = 1; k <= 4; ++k) {
    cplx left = sys.path_voros("0", k, +1);
    cplx right = sys.path_voros("0", k, -1);
    CHECK(std::abs(left - right) < 1e-10 * std::max(1.0, std::abs(left)));
  }
  SpectralCurve hg = make(CurveLabel::HG, {cplx(1.0, 0.2), cplx(1.5, -0.3), cplx(2.6, 0.4)},
                          {cplx(0.2), cplx(-0.1), cplx(0.3)});
  WkbSystem sh(hg, 3);
  for (int k = 1; k <= 3; ++k) {
    cplx left = sh.path_voros("0", k, +1);
    cplx right = sh.path_voros("0", k, -1);
    CHECK(std::abs(left - right) < 1e-10 * std::max(1.0, std::abs(left)));
  }
}

TEST_CASE("riccati self-consistency: residual order in hbar") {
  Rng rng(19);
  for (CurveLabel l : {CurveLabel::Web, CurveLabel::Bes, CurveLabel::HG}) {
    SpectralCurve c = random_curve(l, rng);
    const int K = 5;
    WkbSystem sys(c, K);
    cplx z(1.37, 0.82);
    // fit the order of the residual along h -> 0: expect >= K+1
    std::vector<double> hs = {0.2, 0.1, 0.05}, rs;
    for (double h : hs) rs.push_back(std::abs(sys.riccati_residual(z, cplx(h), K)));
    double slope = std::log(rs[0] / rs[2]) / std::log(hs[0] / hs[2]);
    CHECK(slope > K + 0.5);
  }
}

TEST_CASE("unsupported labels and orders") {
  SpectralCurve leg = get_curve(CurveLabel::Leg, {{"inf", 1.0}}, {{"inf", 0.0}});
  CHECK_THROWS_AS(WkbSystem(leg, 3), Error);
  SpectralCurve web = make(CurveLabel::Web, {cplx(1.0)}, {cplx(0.0)});
  CHECK_THROWS_AS(WkbSystem(web, 40), Error);
  WkbSystem sys(web, 2);
  CHECK_THROWS_AS((void)sys.path_voros("inf", 0), Error);
}

TEST_CASE("lattice-level entry point scales with the path coefficient") {
  SpectralCurve web = make(CurveLabel::Web, {cplx(1.1, 0.1)}, {cplx(0.25)});
  Lattice lat(web);
  cplx one = path_voros_numeric(web, LatticeElement::beta(lat, "inf"), 2);
  cplx three = path_voros_numeric(web, LatticeElement::beta(lat, "inf", 3), 2);
  CHECK(rel_err(three, 3.0 * one) < 1e-10);
  CHECK_THROWS_AS((void)path_voros_numeric(web, LatticeElement::cycle(lat, "inf", 1), 2), Error);
}
