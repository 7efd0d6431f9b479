#include "hgbps/curves.hpp"

#include <nlohmann/json.hpp>

#include "hgbps/errors.hpp"

namespace hgbps {

namespace {

using json = nlohmann::json;

const double kMassTol = 1e-12;

void require_nonzero(cplx v, const std::string& what) {
  if (std::abs(v) < kMassTol) fail(ErrorCode::InvalidMass, what + " vanishes");
}

void check_keys(const std::map<std::string, cplx>& got, const std::vector<std::string>& want,
                const std::string& kind) {
  if (got.size() != want.size())
    fail(ErrorCode::DimensionMismatch,
         kind + " has " + std::to_string(got.size()) + " entries, expected " +
             std::to_string(want.size()));
  for (const auto& k : want)
    if (!got.count(k)) fail(ErrorCode::DimensionMismatch, kind + " missing pole " + k);
}

Poly xp(std::initializer_list<cplx> c) { return Poly(c); }  // low-to-high degree

}  // namespace

const char* label_name(CurveLabel l) {
  switch (l) {
    case CurveLabel::HG: return "HG";
    case CurveLabel::dHG: return "dHG";
    case CurveLabel::Kum: return "Kum";
    case CurveLabel::Leg: return "Leg";
    case CurveLabel::Bes: return "Bes";
    case CurveLabel::Whi: return "Whi";
    case CurveLabel::Web: return "Web";
    case CurveLabel::dBes: return "dBes";
    case CurveLabel::Ai: return "Ai";
    case CurveLabel::Deg3_14: return "Deg3_14";
    case CurveLabel::Deg3_23: return "Deg3_23";
  }
  return "?";
}

std::optional<CurveLabel> parse_label(const std::string& s) {
  for (CurveLabel l : {CurveLabel::HG, CurveLabel::dHG, CurveLabel::Kum, CurveLabel::Leg,
                       CurveLabel::Bes, CurveLabel::Whi, CurveLabel::Web, CurveLabel::dBes,
                       CurveLabel::Ai, CurveLabel::Deg3_14, CurveLabel::Deg3_23})
    if (s == label_name(l)) return l;
  return std::nullopt;
}

bool is_experimental(CurveLabel l) {
  return l == CurveLabel::Deg3_14 || l == CurveLabel::Deg3_23;
}

const std::vector<std::string>& even_poles(CurveLabel l) {
  static const std::vector<std::string> hg = {"0", "1", "inf"};
  static const std::vector<std::string> dhg = {"1", "inf"};
  static const std::vector<std::string> kum = {"0", "inf"};
  static const std::vector<std::string> zero = {"0"};
  static const std::vector<std::string> inf = {"inf"};
  static const std::vector<std::string> none = {};
  switch (l) {
    case CurveLabel::HG: return hg;
    case CurveLabel::dHG: return dhg;
    case CurveLabel::Kum: return kum;
    case CurveLabel::Bes: return zero;
    case CurveLabel::Leg:
    case CurveLabel::Whi:
    case CurveLabel::Web:
    case CurveLabel::Deg3_14:
    case CurveLabel::Deg3_23: return inf;
    case CurveLabel::dBes:
    case CurveLabel::Ai: return none;
  }
  return none;
}

PolyFrac SpectralCurve::q_rational() const {
  switch (label) {
    case CurveLabel::HG: {
      cplx m0 = mass("0"), m1 = mass("1"), mi = mass("inf");
      // (mi^2 x^2 - (mi^2 + m0^2 - m1^2) x + m0^2) / (x^2 (x-1)^2)
      Poly num = xp({m0 * m0, -(mi * mi + m0 * m0 - m1 * m1), mi * mi});
      Poly den = xp({0, 0, 1}) * xp({1, -2, 1});
      return {num, den};
    }
    case CurveLabel::dHG: {
      cplx m1 = mass("1"), mi = mass("inf");
      Poly num = xp({m1 * m1 - mi * mi, mi * mi});
      Poly den = xp({0, 1}) * xp({1, -2, 1});
      return {num, den};
    }
    case CurveLabel::Kum: {
      cplx m0 = mass("0"), mi = mass("inf");
      Poly num = xp({4.0 * m0 * m0, 4.0 * mi, 1});
      Poly den = xp({0, 0, 4});
      return {num, den};
    }
    case CurveLabel::Leg: {
      cplx mi = mass("inf");
      return {xp({mi * mi}), xp({-1, 0, 1})};
    }
    case CurveLabel::Bes: {
      cplx m0 = mass("0");
      return {xp({4.0 * m0 * m0, 1}), xp({0, 0, 4})};
    }
    case CurveLabel::Whi: {
      cplx mi = mass("inf");
      return {xp({-4.0 * mi, 1}), xp({0, 4})};
    }
    case CurveLabel::Web: {
      cplx mi = mass("inf");
      return {xp({-mi, 0, 0.25}), xp({1})};
    }
    case CurveLabel::dBes: return {xp({1}), xp({0, 1})};
    case CurveLabel::Ai: return {xp({0, 1}), xp({1})};
    default:
      fail(ErrorCode::Unsupported, "no Q(x) for experimental label");
  }
}

std::string SpectralCurve::turning_points_description() const {
  switch (label) {
    case CurveLabel::HG: return "two simple zeros of Q_HG";
    case CurveLabel::dHG: return "simple zero at (m_inf^2-m_1^2)/m_inf^2 and simple pole at 0";
    case CurveLabel::Kum: return "two simple zeros of x^2+4m_inf x+4m_0^2";
    case CurveLabel::Leg: return "simple poles at +-1";
    case CurveLabel::Bes: return "simple zero at -4m_0^2";
    case CurveLabel::Whi: return "simple zero at 4m_inf and simple pole at 0";
    case CurveLabel::Web: return "simple zeros at +-2 sqrt(m_inf)";
    case CurveLabel::dBes: return "simple pole at 0";
    case CurveLabel::Ai: return "simple zero at 0";
    default: return "not modeled";
  }
}

SpectralCurve get_curve(CurveLabel label, const MassParams& m, const NuParams& nu) {
  const auto& poles = even_poles(label);
  check_keys(m, poles, "mass parameters");
  check_keys(nu, poles, "quantization parameters");
  switch (label) {
    case CurveLabel::HG: {
      cplx m0 = m.at("0"), m1 = m.at("1"), mi = m.at("inf");
      require_nonzero(m0, "m_0");
      require_nonzero(m1, "m_1");
      require_nonzero(mi, "m_inf");
      require_nonzero(m0 + m1 + mi, "m_0+m_1+m_inf");
      require_nonzero(m0 + m1 - mi, "m_0+m_1-m_inf");
      require_nonzero(m0 - m1 + mi, "m_0-m_1+m_inf");
      require_nonzero(m0 - m1 - mi, "m_0-m_1-m_inf");
      break;
    }
    case CurveLabel::dHG: {
      cplx m1 = m.at("1"), mi = m.at("inf");
      require_nonzero(m1, "m_1");
      require_nonzero(mi, "m_inf");
      require_nonzero(m1 + mi, "m_1+m_inf");
      require_nonzero(m1 - mi, "m_1-m_inf");
      break;
    }
    case CurveLabel::Kum: {
      cplx m0 = m.at("0"), mi = m.at("inf");
      require_nonzero(m0, "m_0");
      require_nonzero(m0 + mi, "m_0+m_inf");
      require_nonzero(m0 - mi, "m_0-m_inf");
      break;
    }
    case CurveLabel::Leg:
    case CurveLabel::Whi:
    case CurveLabel::Web:
    case CurveLabel::Deg3_14:
    case CurveLabel::Deg3_23:
      require_nonzero(m.at("inf"), "m_inf");
      break;
    case CurveLabel::Bes: require_nonzero(m.at("0"), "m_0"); break;
    case CurveLabel::dBes:
    case CurveLabel::Ai: break;
  }
  return SpectralCurve{label, m, nu};
}

cplx residue(const PolyFrac& f, const ZPoint& p, double radius) {
  const int n = 512;
  cplx acc = 0;
  if (!p.at_inf) {
    for (int j = 0; j < n; ++j) {
      double th = 2.0 * kPi * j / n;
      cplx e = std::polar(radius, th);
      acc += f.eval(p.z + e) * e;
    }
    return acc / double(n);
  }
  // Res_{z=inf} f dz = -Res_{t=0} f(1/t)/t^2 dt
  for (int j = 0; j < n; ++j) {
    double th = 2.0 * kPi * j / n;
    cplx t = std::polar(radius, th);
    acc += f.eval(1.0 / t) / (t * t) * t;
  }
  return -acc / double(n);
}

namespace {

// Swaps the labels s+ / s- so that Res_{p_{s+}} y dx = + m_s.
void fix_residue_labels(Parametrization& par, const SpectralCurve& curve) {
  PolyFrac ydx{par.y.num * par.dx.num, par.y.den * par.dx.den};
  for (const auto& s : curve.poles()) {
    ZPoint& pp = par.pole_points.at(s + "+");
    ZPoint& pm = par.pole_points.at(s + "-");
    // Radius: quarter of the distance to the nearest other special point.
    auto min_dist = [&](const ZPoint& q) {
      if (q.at_inf) {
        double dmax = 0;
        for (const auto& [k, other] : par.pole_points)
          if (!other.at_inf) dmax = std::max(dmax, std::abs(other.z));
        for (cplx r : par.ramification) dmax = std::max(dmax, std::abs(r));
        return 0.25 / std::max(dmax, 1.0);  // radius in the t = 1/z chart
      }
      double d = 1e30;
      for (const auto& [k, other] : par.pole_points)
        if (!other.at_inf && std::abs(other.z - q.z) > 1e-14)
          d = std::min(d, std::abs(other.z - q.z));
      for (cplx r : par.ramification) d = std::min(d, std::abs(r - q.z));
      if (d > 1e29) d = 1.0;
      return std::min(d / 4.0, 0.5);
    };
    cplx res_p = residue(ydx, pp, min_dist(pp));
    cplx ms = curve.mass(s);
    if (std::abs(res_p - ms) > std::abs(res_p + ms)) std::swap(pp, pm);
    res_p = residue(ydx, par.pole_points.at(s + "+"), min_dist(par.pole_points.at(s + "+")));
    if (std::abs(res_p - ms) > 1e-6 * std::max(1.0, std::abs(ms)))
      fail(ErrorCode::Inconsistent, "residue labeling failed for pole " + s);
  }
}

}  // namespace

Parametrization build_parametrization(const SpectralCurve& curve) {
  Parametrization par;
  switch (curve.label) {
    case CurveLabel::HG: {
      cplx m0 = curve.mass("0"), m1 = curve.mass("1"), mi = curve.mass("inf");
      cplx delta = (m0 + m1 + mi) * (m0 + m1 - mi) * (m0 - m1 + mi) * (m0 - m1 - mi);
      cplx sd = std::sqrt(delta);
      cplx c = (mi * mi + m0 * m0 - m1 * m1) / (2.0 * mi * mi);
      cplx a = sd / (4.0 * mi * mi);
      // x = a (z + 1/z) + c
      par.x = {xp({a, c, a}), xp({0, 1})};
      cplx p0p = -((m0 + mi) * (m0 + mi) - m1 * m1) / sd;
      cplx p0m = -((m0 - mi) * (m0 - mi) - m1 * m1) / sd;
      cplx p1p = ((m1 + mi) * (m1 + mi) - m0 * m0) / sd;
      cplx p1m = ((m1 - mi) * (m1 - mi) - m0 * m0) / sd;
      // y = 4 mi^3 z (z^2-1) / (sd (z-p0p)(z-p0m)(z-p1p)(z-p1m))
      Poly den = xp({-p0p, 1}) * xp({-p0m, 1}) * xp({-p1p, 1}) * xp({-p1m, 1}) * sd;
      par.y = {xp({0, -4.0 * mi * mi * mi, 0, 4.0 * mi * mi * mi}), den};
      par.conj = Mobius{0, 1, 1, 0};
      par.ramification = {1.0, -1.0};
      par.pole_points = {{"0+", ZPoint::at(p0p)},      {"0-", ZPoint::at(p0m)},
                         {"1+", ZPoint::at(p1p)},      {"1-", ZPoint::at(p1m)},
                         {"inf+", ZPoint::infinity()}, {"inf-", ZPoint::at(0.0)}};
      break;
    }
    case CurveLabel::dHG: {
      cplx m1 = curve.mass("1"), mi = curve.mass("inf");
      cplx x0 = (mi * mi - m1 * m1) / (mi * mi);
      // x = x0 (w+1)^2 / (4w),  y = 4 mi w (w-1) / ((w+1) D(w)),  D = x0 (w+1)^2 - 4 w
      par.x = {xp({x0, 2.0 * x0, x0}), xp({0, 4})};
      Poly D = xp({x0, 2.0 * x0 - 4.0, x0});
      par.y = {xp({0, -4.0 * mi, 4.0 * mi}), xp({1, 1}) * D};
      par.conj = Mobius{0, 1, 1, 0};
      par.ramification = {1.0, -1.0};
      cplx disc = std::sqrt((2.0 * x0 - 4.0) * (2.0 * x0 - 4.0) - 4.0 * x0 * x0);
      cplx w1p = (-(2.0 * x0 - 4.0) + disc) / (2.0 * x0);
      cplx w1m = (-(2.0 * x0 - 4.0) - disc) / (2.0 * x0);
      par.pole_points = {{"1+", ZPoint::at(w1p)},
                         {"1-", ZPoint::at(w1m)},
                         {"inf+", ZPoint::at(0.0)},
                         {"inf-", ZPoint::infinity()}};
      break;
    }
    case CurveLabel::Kum: {
      cplx m0 = curve.mass("0"), mi = curve.mass("inf");
      cplx r2 = mi * mi - m0 * m0;
      par.x = {xp({r2, -2.0 * mi, 1}), xp({0, 1})};
      par.y = {xp({-r2, 0, 1}), xp({2.0 * r2, -4.0 * mi, 2})};
      par.conj = Mobius{0, r2, 1, 0};
      cplx r = std::sqrt(r2);
      par.ramification = {r, -r};
      par.pole_points = {{"0+", ZPoint::at(mi + m0)},
                         {"0-", ZPoint::at(mi - m0)},
                         {"inf+", ZPoint::at(0.0)},
                         {"inf-", ZPoint::infinity()}};
      break;
    }
    case CurveLabel::Leg: {
      cplx mi = curve.mass("inf");
      par.x = {xp({1, 0, 1}), xp({0, 2})};
      par.y = {xp({0, 2.0 * mi}), xp({-1, 0, 1})};
      par.conj = Mobius{0, 1, 1, 0};
      par.ramification = {1.0, -1.0};
      par.pole_points = {{"inf+", ZPoint::at(0.0)}, {"inf-", ZPoint::infinity()}};
      break;
    }
    case CurveLabel::Bes: {
      cplx m0 = curve.mass("0");
      par.x = {xp({-4.0 * m0 * m0, 0, 1}), xp({1})};
      par.y = {xp({0, 1}), xp({-8.0 * m0 * m0, 0, 2})};
      par.conj = Mobius{-1, 0, 0, 1};
      par.ramification = {0.0};
      par.pole_points = {{"0+", ZPoint::at(2.0 * m0)},
                         {"0-", ZPoint::at(-2.0 * m0)},
                         {"odd:inf", ZPoint::infinity()}};
      break;
    }
    case CurveLabel::Whi: {
      cplx mi = curve.mass("inf");
      par.x = {xp({mi, 2.0 * mi, mi}), xp({0, 1})};
      par.y = {xp({-1, 1}), xp({2, 2})};
      par.conj = Mobius{0, 1, 1, 0};
      par.ramification = {1.0, -1.0};
      par.pole_points = {{"inf+", ZPoint::infinity()}, {"inf-", ZPoint::at(0.0)}};
      break;
    }
    case CurveLabel::Web: {
      cplx mi = curve.mass("inf");
      par.x = {xp({mi, 0, 1}), xp({0, 1})};
      par.y = {xp({-mi, 0, 1}), xp({0, 2})};
      par.conj = Mobius{0, mi, 1, 0};
      cplx r = std::sqrt(mi);
      par.ramification = {r, -r};
      par.pole_points = {{"inf+", ZPoint::infinity()}, {"inf-", ZPoint::at(0.0)}};
      break;
    }
    case CurveLabel::dBes: {
      par.x = {xp({0, 0, 1}), xp({1})};
      par.y = {xp({1}), xp({0, 1})};
      par.conj = Mobius{-1, 0, 0, 1};
      par.ramification = {0.0};
      par.pole_points = {{"odd:inf", ZPoint::infinity()}};
      break;
    }
    case CurveLabel::Ai: {
      par.x = {xp({0, 0, 1}), xp({1})};
      par.y = {xp({0, 1}), xp({1})};
      par.conj = Mobius{-1, 0, 0, 1};
      par.ramification = {0.0};
      par.pole_points = {};
      break;
    }
    default:
      fail(ErrorCode::Unsupported, "no parametrization for experimental label");
  }
  par.dx = par.x.derivative();
  fix_residue_labels(par, curve);
  return par;
}

QuantumOdeCoeffs quantum_ode(const SpectralCurve& curve) {
  QuantumOdeCoeffs ode;
  PolyFrac zero{Poly(), Poly::constant(1.0)};
  ode.q0 = zero;
  switch (curve.label) {
    case CurveLabel::HG: {
      cplx m0 = curve.mass("0"), m1 = curve.mass("1"), mi = curve.mass("inf");
      cplx n0 = curve.nu_of("0"), n1 = curve.nu_of("1"), ni = curve.nu_of("inf");
      Poly X = xp({0, 1}), X1 = xp({-1, 1});
      // q1 = 1/x + 1/(x-1)
      ode.q1 = PolyFrac{X1, X * X1} + PolyFrac{X, X * X1};
      PolyFrac q = curve.q_rational();
      ode.r0 = {q.num * cplx(-1), q.den};
      // r1 = -nu0 m0 / (x^2 (x-1)) + nu1 m1 / (x (x-1)^2) + nuinf minf / (x (x-1))
      ode.r1 = PolyFrac{Poly::constant(-n0 * m0), X * X * X1} +
               PolyFrac{Poly::constant(n1 * m1), X * X1 * X1} +
               PolyFrac{Poly::constant(ni * mi), X * X1};
      // r2 = (nu0^2/4)/(x^2 (x-1)) - (nu1^2/4)/(x (x-1)^2) + ((1-nuinf^2)/4)/(x (x-1))
      ode.r2 = PolyFrac{Poly::constant(n0 * n0 * 0.25), X * X * X1} +
               PolyFrac{Poly::constant(-n1 * n1 * 0.25), X * X1 * X1} +
               PolyFrac{Poly::constant((1.0 - ni * ni) * 0.25), X * X1};
      ode.nu_split = {{"0+", n0 / 2.0},          {"0-", -n0 / 2.0}, {"1+", n1 / 2.0},
                      {"1-", -n1 / 2.0},         {"inf+", (1.0 + ni) / 2.0},
                      {"inf-", (1.0 - ni) / 2.0}};
      break;
    }
    case CurveLabel::Web: {
      cplx mi = curve.mass("inf"), ni = curve.nu_of("inf");
      ode.q1 = zero;
      ode.r0 = {xp({mi, 0, -0.25}), xp({1})};
      ode.r1 = {Poly::constant(-ni / 2.0), Poly::constant(1.0)};
      ode.r2 = zero;
      ode.nu_split = {{"inf+", (1.0 + ni) / 2.0}, {"inf-", (1.0 - ni) / 2.0}};
      break;
    }
    case CurveLabel::Bes: {
      cplx m0 = curve.mass("0"), n0 = curve.nu_of("0");
      Poly X2 = xp({0, 0, 1});
      ode.q1 = {xp({1}), xp({0, 1})};
      ode.r0 = {xp({-4.0 * m0 * m0, -1}), xp({0, 0, 4})};
      ode.r1 = {Poly::constant(n0 * m0), X2};
      ode.r2 = {Poly::constant(-n0 * n0 / 4.0), X2};
      ode.nu_split = {{"0+", n0 / 2.0}, {"0-", -n0 / 2.0}, {"odd:inf", 1.0}};
      break;
    }
    default:
      fail(ErrorCode::Unsupported,
           std::string("quantum_ode supports HG/Web/Bes, got ") + label_name(curve.label));
  }
  return ode;
}

namespace {
json cplx_to_json(cplx v) { return json{{"re", v.real()}, {"im", v.imag()}}; }
cplx cplx_from_json(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }
}  // namespace

std::string curve_to_json(const SpectralCurve& c) {
  json j;
  j["label"] = label_name(c.label);
  for (const auto& [k, v] : c.m) j["m"][k] = cplx_to_json(v);
  for (const auto& [k, v] : c.nu) j["nu"][k] = cplx_to_json(v);
  return j.dump(2);
}

SpectralCurve curve_from_json(const std::string& text) {
  json j = json::parse(text);
  auto label = parse_label(j.at("label").get<std::string>());
  if (!label) fail(ErrorCode::ConfigError, "unknown curve label in JSON");
  MassParams m;
  NuParams nu;
  if (j.contains("m"))
    for (auto& [k, v] : j.at("m").items()) m[k] = cplx_from_json(v);
  if (j.contains("nu"))
    for (auto& [k, v] : j.at("nu").items()) nu[k] = cplx_from_json(v);
  return get_curve(*label, m, nu);
}

}  // namespace hgbps
