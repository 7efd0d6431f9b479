#include "hgbps/wkb.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>

#include "hgbps/errors.hpp"

namespace hgbps {

namespace {

Poly xp(std::initializer_list<cplx> c) { return Poly(c); }

FRat frat_zero(size_t nf) { return FRat{Poly(), std::vector<int>(nf, 0)}; }

bool frat_is_zero(const FRat& f) { return f.num.is_zero(); }

void frat_normalize(FRat& f, const std::vector<Poly>& factors) {
  // leading coefficients that survived only as cancellation residue get
  // amplified without bound at large |x|; strip them first
  double scale = f.num.max_abs_coeff();
  while (f.num.degree() >= 0 && std::abs(f.num.coeff(f.num.degree())) <= 1e-13 * scale) {
    std::vector<cplx> c(f.num.coeffs().begin(), f.num.coeffs().end() - 1);
    f.num = Poly(std::move(c));
  }
  if (f.num.is_zero()) {
    std::fill(f.e.begin(), f.e.end(), 0);
    return;
  }
  for (size_t i = 0; i < factors.size(); ++i) {
    while (f.e[i] > 0) {
      bool exact = false;
      Poly q = f.num.divide(factors[i], &exact, 1e-10);
      if (!exact) break;
      f.num = q;
      --f.e[i];
    }
  }
}

FRat frat_add(const FRat& a, const FRat& b, const std::vector<Poly>& factors) {
  if (frat_is_zero(a)) return b;
  if (frat_is_zero(b)) return a;
  FRat r;
  r.e.resize(factors.size());
  Poly na = a.num, nb = b.num;
  for (size_t i = 0; i < factors.size(); ++i) {
    int em = std::max(a.e[i], b.e[i]);
    r.e[i] = em;
    for (int k = a.e[i]; k < em; ++k) na = na * factors[i];
    for (int k = b.e[i]; k < em; ++k) nb = nb * factors[i];
  }
  r.num = na + nb;
  frat_normalize(r, factors);
  return r;
}

FRat frat_mul(const FRat& a, const FRat& b, const std::vector<Poly>& factors) {
  FRat r;
  r.num = a.num * b.num;
  r.e.resize(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) r.e[i] = a.e[i] + b.e[i];
  frat_normalize(r, factors);
  return r;
}

FRat frat_scale(FRat a, cplx s) {
  a.num = a.num * s;
  return a;
}

FRat frat_derivative(const FRat& f, const std::vector<Poly>& factors) {
  if (frat_is_zero(f)) return f;
  Poly P = Poly::constant(1.0);
  for (size_t i = 0; i < factors.size(); ++i)
    if (f.e[i] > 0) P = P * factors[i];
  Poly numerator = f.num.derivative() * P;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (f.e[i] == 0) continue;
    Poly others = Poly::constant(1.0);
    for (size_t j = 0; j < factors.size(); ++j)
      if (j != i && f.e[j] > 0) others = others * factors[j];
    numerator = numerator - f.num * factors[i].derivative() * others * cplx(double(f.e[i]));
  }
  FRat r;
  r.num = numerator;
  r.e.resize(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) r.e[i] = f.e[i] + (f.e[i] > 0 ? 1 : 0);
  frat_normalize(r, factors);
  return r;
}

}  // namespace

struct WkbTestAccess;

PolyFrac WkbSystem::to_polyfrac(const FRat& f) const {
  Poly den = Poly::constant(1.0);
  for (size_t i = 0; i < factors_.size(); ++i)
    for (int t = 0; t < f.e[i]; ++t) den = den * factors_[i];
  return PolyFrac{f.num, den};
}

cplx WkbSystem::frat_eval(const FRat& f, cplx x) const {
  if (f.num.is_zero()) return 0.0;
  cplx v = f.num.eval(x);
  for (size_t i = 0; i < factors_.size(); ++i)
    if (f.e[i]) v /= pow_int(factors_[i].eval(x), f.e[i]);
  return v;
}

WkbSystem::WkbSystem(const SpectralCurve& curve, int order_max)
    : curve_(curve), par_(build_parametrization(curve)), order_max_(order_max) {
  if (order_max < 1 || order_max > 12)
    fail(ErrorCode::Unsupported, "WKB order must lie in [1, 12]");
  FRat q_inv;  // 1/Q over the factor basis
  switch (curve.label) {
    case CurveLabel::HG: {
      cplx m0 = curve.mass("0"), m1 = curve.mass("1"), mi = curve.mass("inf");
      cplx n0 = curve.nu_of("0"), n1 = curve.nu_of("1"), ni = curve.nu_of("inf");
      Poly NQ = xp({m0 * m0, -(mi * mi + m0 * m0 - m1 * m1), mi * mi});
      factors_ = {xp({0, 1}), xp({-1, 1}), NQ};
      q_rat_ = FRat{NQ, {2, 2, 0}};
      q_inv = FRat{(xp({0, 1}) * xp({0, 1})) * (xp({-1, 1}) * xp({-1, 1})), {0, 0, 1}};
      q1_ = FRat{xp({-1, 2}), {1, 1, 0}};
      // r1 = [-nu0 m0 (x-1) + nu1 m1 x + nuinf minf x(x-1)] / (x^2 (x-1)^2)
      Poly r1n = (xp({-1, 1}) * Poly::constant(-n0 * m0)) + (xp({0, 1}) * Poly::constant(n1 * m1)) +
                 (xp({0, -1, 1}) * Poly::constant(ni * mi));
      r1_ = FRat{r1n, {2, 2, 0}};
      Poly r2n = (xp({-1, 1}) * Poly::constant(n0 * n0 * 0.25)) +
                 (xp({0, 1}) * Poly::constant(-n1 * n1 * 0.25)) +
                 (xp({0, -1, 1}) * Poly::constant((1.0 - ni * ni) * 0.25));
      r2_ = FRat{r2n, {2, 2, 0}};
      // Q'/2Q = [NQ' x(x-1) - 2 NQ (2x-1)] / (2 NQ x (x-1))
      Poly hnum = NQ.derivative() * xp({0, -1, 1}) - NQ * xp({-1, 2}) * cplx(2.0);
      half_dlogq_ = FRat{hnum * cplx(0.5), {1, 1, 1}};
      break;
    }
    case CurveLabel::Web: {
      cplx mi = curve.mass("inf"), ni = curve.nu_of("inf");
      Poly NQ = xp({-mi, 0, 0.25});
      factors_ = {NQ};
      q_rat_ = FRat{NQ, {0}};
      q_inv = FRat{Poly::constant(1.0), {1}};
      q1_ = frat_zero(1);
      r1_ = FRat{Poly::constant(-ni / 2.0), {0}};
      r2_ = frat_zero(1);
      half_dlogq_ = FRat{xp({0, 0.25}), {1}};
      break;
    }
    case CurveLabel::Bes: {
      cplx m0 = curve.mass("0"), n0 = curve.nu_of("0");
      Poly f1 = xp({4.0 * m0 * m0, 1});
      factors_ = {xp({0, 1}), f1};
      q_rat_ = FRat{f1 * cplx(0.25), {2, 0}};
      q_inv = FRat{xp({0, 0, 4}), {0, 1}};
      q1_ = FRat{Poly::constant(1.0), {1, 0}};
      r1_ = FRat{Poly::constant(n0 * m0), {2, 0}};
      r2_ = FRat{Poly::constant(-n0 * n0 / 4.0), {2, 0}};
      // (1/2)[1/(x+4m^2) - 2/x] = -(x + 8 m^2) / (2 x (x+4m^2))
      half_dlogq_ = FRat{xp({-4.0 * m0 * m0, -0.5}), {1, 1}};
      break;
    }
    default:
      fail(ErrorCode::Unsupported, "WKB oracle supports HG, Web, Bes");
  }
  auto deriv = [&](const CurveFieldElem& f) {
    CurveFieldElem d;
    d.a = frat_derivative(f.a, factors_);
    d.b = frat_add(frat_derivative(f.b, factors_), frat_mul(f.b, half_dlogq_, factors_),
                   factors_);
    return d;
  };
  auto mul = [&](const CurveFieldElem& f, const CurveFieldElem& g) {
    CurveFieldElem r;
    r.a = frat_add(frat_mul(f.a, g.a, factors_),
                   frat_mul(frat_mul(f.b, g.b, factors_), q_rat_, factors_), factors_);
    r.b = frat_add(frat_mul(f.a, g.b, factors_), frat_mul(f.b, g.a, factors_), factors_);
    return r;
  };
  auto add = [&](const CurveFieldElem& f, const CurveFieldElem& g) {
    return CurveFieldElem{frat_add(f.a, g.a, factors_), frat_add(f.b, g.b, factors_)};
  };
  auto scale = [&](const CurveFieldElem& f, cplx s) {
    return CurveFieldElem{frat_scale(f.a, s), frat_scale(f.b, s)};
  };
  auto div_2y = [&](const CurveFieldElem& f) {
    CurveFieldElem r;
    r.a = frat_scale(f.b, 0.5);
    r.b = frat_scale(frat_mul(f.a, q_inv, factors_), 0.5);
    return r;
  };

  size_t nf = factors_.size();
  s_.resize(order_max_ + 2);
  // s_{-1} = y
  s_[0] = CurveFieldElem{frat_zero(nf), FRat{Poly::constant(1.0), std::vector<int>(nf, 0)}};
  // s_0 = -( s_{-1}' + q1 s_{-1} + r1 ) / (2y)
  CurveFieldElem q1y{frat_zero(nf), q1_};
  CurveFieldElem r1c{r1_, frat_zero(nf)};
  s_[1] = scale(div_2y(add(add(deriv(s_[0]), q1y), r1c)), -1.0);
  for (int n = 2; n <= order_max_ + 1; ++n) {
    // s_{n-1} = -( s_{n-2}' + sum_{i+j=n-2, i,j>=0} s_i s_j + q1 s_{n-2} + r2 d_{n,2} )/(2y)
    CurveFieldElem acc = deriv(s_[n - 1]);
    for (int i = 0; i <= n - 2; ++i) {
      int j = n - 2 - i;
      acc = add(acc, mul(s_[i + 1], s_[j + 1]));
    }
    acc = add(acc, CurveFieldElem{frat_mul(q1_, s_[n - 1].a, factors_),
                                  frat_mul(q1_, s_[n - 1].b, factors_)});
    if (n == 2) acc = add(acc, CurveFieldElem{r2_, frat_zero(nf)});
    s_[n] = scale(div_2y(acc), -1.0);
  }
  odd_.resize(order_max_ + 2);
  for (int k = -1; k <= order_max_; ++k) odd_[k + 1] = OddForm{k, s_[k + 1].b};
}

const OddForm& WkbSystem::odd_form(int k) const {
  if (k < -1 || k > order_max_) fail(ErrorCode::Unsupported, "odd form order out of range");
  return odd_[k + 1];
}

std::vector<cplx> WkbSystem::form_values(cplx z0) const {
  // Riccati recursion in Laurent jets anchored at z0 (z-coordinate): every
  // ingredient is rational in z, so the expansion is exact and locally
  // conditioned, unlike the global monomial representation.
  const int K = order_max_;
  const int len = K + 4;
  JetC xj = jet_of_polyfrac(par_.x, z0, len);
  JetC xpj = jet_of_polyfrac(par_.dx, z0, len);
  JetC yj = jet_of_polyfrac(par_.y, z0, len);
  JetC qj = jet_mul(yj, yj);  // Q(x(z)) as a z-jet, exact against y^2
  JetC q1j = jet_of_polyfrac_at(to_polyfrac(q1_), xj);
  JetC r1j = jet_of_polyfrac_at(to_polyfrac(r1_), xj);
  JetC r2j = jet_of_polyfrac_at(to_polyfrac(r2_), xj);

  auto deriv_z = [](const JetC& a) {
    JetC d = JetC::zero_window(a.lo - 1, a.hi - 1);
    for (int i = d.lo; i <= d.hi; ++i) d.at(i) = a.coeff(i + 1) * double(i + 1);
    return d;
  };
  auto dx_of = [&](const JetC& a) { return jet_div(deriv_z(a), xpj); };
  JetC ylog_dx = jet_div(jet_div(deriv_z(yj), yj), xpj);  // (d/dx log y) as z-jet

  struct CF {
    JetC a, b;  // a + b y
  };
  auto cf_deriv = [&](const CF& f) {
    return CF{dx_of(f.a), jet_add(dx_of(f.b), jet_mul(f.b, ylog_dx))};
  };
  auto cf_mul = [&](const CF& f, const CF& g) {
    return CF{jet_add(jet_mul(f.a, g.a), jet_mul(jet_mul(f.b, g.b), qj)),
              jet_add(jet_mul(f.a, g.b), jet_mul(f.b, g.a))};
  };
  auto cf_div2y = [&](const CF& f) {
    return CF{jet_scale(f.b, 0.5), jet_scale(jet_div(f.a, qj), 0.5)};
  };
  auto cf_neg = [&](const CF& f) { return CF{jet_scale(f.a, -1.0), jet_scale(f.b, -1.0)}; };

  std::vector<CF> s(K + 2);
  JetC zero = JetC::zero_window(0, len);
  JetC one = zero;
  one.at(0) = 1.0;
  s[0] = CF{zero, one};  // s_{-1} = y
  {
    CF d = cf_deriv(s[0]);
    s[1] = cf_neg(cf_div2y(CF{jet_add(d.a, r1j), jet_add(d.b, q1j)}));
  }
  for (int n = 2; n <= K + 1; ++n) {
    CF acc = cf_deriv(s[n - 1]);
    for (int i = 0; i <= n - 2; ++i) {
      CF pr = cf_mul(s[i + 1], s[n - 2 - i + 1]);
      acc = CF{jet_add(acc.a, pr.a), jet_add(acc.b, pr.b)};
    }
    acc = CF{jet_add(acc.a, jet_mul(q1j, s[n - 1].a)), jet_add(acc.b, jet_mul(q1j, s[n - 1].b))};
    if (n == 2) acc = CF{jet_add(acc.a, r2j), acc.b};
    s[n] = cf_neg(cf_div2y(acc));
  }
  std::vector<cplx> out(K + 2);
  for (int k = -1; k <= K; ++k) {
    JetC form = jet_mul(jet_mul(s[k + 1].b, yj), xpj);
    out[k + 1] = form.coeff(0);
  }
  return out;
}

cplx WkbSystem::form_value_rational(int k, cplx z) const {
  const OddForm& f = odd_form(k);
  cplx x = par_.x.eval(z);
  return frat_eval(f.b, x) * par_.y.eval(z) * par_.dx.eval(z);
}

cplx WkbSystem::form_value(int k, cplx z) const {
  if (k < -1 || k > order_max_) fail(ErrorCode::Unsupported, "form order out of range");
  return form_values(z)[k + 1];
}

namespace {

double dist_to_segment(cplx p, cplx a, cplx b) {
  cplx d = b - a;
  double L2 = std::norm(d);
  if (L2 == 0) return std::abs(p - a);
  double t = std::clamp(((p - a) / d).real(), 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

// A contour piece: lambda in [0,1] -> (z, dz/dlambda).
struct Piece {
  std::function<std::pair<cplx, cplx>(double)> map;
};

Piece straight_piece(cplx a, cplx b) {
  return Piece{[a, b](double t) { return std::make_pair(a + t * (b - a), b - a); }};
}

// Arc around p from the direction of a to the direction of b; `side` picks
// the sweep orientation.
Piece arc_piece(cplx p, double r, cplx a, cplx b, int side) {
  double pa = std::arg(a - p), pb = std::arg(b - p);
  double sweep = wrap_angle(pb - pa);
  if (side < 0 && sweep > 0) sweep -= 2.0 * kPi;
  if (side > 0 && sweep < 0) sweep += 2.0 * kPi;
  return Piece{[p, r, pa, sweep](double t) {
    cplx e = std::polar(r, pa + t * sweep);
    return std::make_pair(p + e, cplx(0.0, 1.0) * e * sweep);
  }};
}

// Outgoing ray from `entry` to radius 1e5 via z = entry e^{s}.
Piece log_ray_piece(cplx entry) {
  double s_end = std::log(1e5 / std::abs(entry));
  return Piece{[entry, s_end](double t) {
    cplx z = entry * std::exp(t * s_end);
    return std::make_pair(z, z * s_end);
  }};
}

// Straight runs with wide arcs around high-order poles. Near a pole of order
// ~ 3k the integrand grows like (d_char/d)^{3k}; tight detours lose every
// digit, so arcs are kept as large as the surrounding geometry allows.
void route_polyline(std::vector<Piece>& out, cplx a, cplx b, const std::vector<cplx>& avoid,
                    double clearance, int side, int depth) {
  if (depth > 24) fail(ErrorCode::ContourHitsPole, "detour recursion limit reached");
  const cplx* hit = nullptr;
  double hit_d = clearance;
  for (const cplx& p : avoid) {
    if (std::abs(p - a) < 1e-12 || std::abs(p - b) < 1e-12) continue;
    double d = dist_to_segment(p, a, b);
    if (d < hit_d) {
      hit_d = d;
      hit = &p;
    }
  }
  if (!hit) {
    out.push_back(straight_piece(a, b));
    return;
  }
  cplx p = *hit;
  double r = 0.8 * std::min(std::abs(p - a), std::abs(p - b));
  for (const cplx& q : avoid)
    if (std::abs(q - p) > 1e-12) r = std::min(r, 0.45 * std::abs(q - p));
  if (r < 1e-6) fail(ErrorCode::ContourHitsPole, "no room to route around a pole");
  cplx entry = p + r * (a - p) / std::abs(a - p);
  cplx exit = p + r * (b - p) / std::abs(b - p);
  route_polyline(out, a, entry, avoid, std::min(clearance, 0.9 * r), side, depth + 1);
  out.push_back(arc_piece(p, r, a, b, side));
  route_polyline(out, exit, b, avoid, std::min(clearance, 0.9 * r), side, depth + 1);
}

// Adaptive Gauss-Legendre over a piece, all integrands at once. Convergence
// is judged per component; unconverged spans are bisected.
template <class F>
void integrate_piece_rec(const Piece& piece, double t0, double t1, int n_out, const F& values,
                         std::vector<cplx>& total, int depth) {
  auto run = [&](auto gauss_rule, std::vector<cplx>& dst) {
    using G = decltype(gauss_rule);
    dst.assign(n_out, cplx(0));
    const auto& absc = G::abscissa();
    const auto& wts = G::weights();
    double mid = 0.5 * (t0 + t1), half = 0.5 * (t1 - t0);
    auto add_node = [&](double t, double w) {
      auto [z, dz] = piece.map(t);
      std::vector<cplx> v = values(z);
      for (int i = 0; i < n_out; ++i) dst[i] += half * w * v[i] * dz;
    };
    add_node(mid, wts[0]);  // odd rules store the center node first
    for (size_t j = 1; j < absc.size(); ++j) {
      add_node(mid + half * absc[j], wts[j]);
      add_node(mid - half * absc[j], wts[j]);
    }
  };
  std::vector<cplx> coarse, fine;
  run(boost::math::quadrature::gauss<double, 31>(), coarse);
  run(boost::math::quadrature::gauss<double, 63>(), fine);
  bool ok = true;
  for (int i = 0; i < n_out; ++i)
    if (std::abs(fine[i] - coarse[i]) > 1e-13 + 1e-11 * std::abs(fine[i])) ok = false;
  if (ok || depth >= 12) {
    for (int i = 0; i < n_out; ++i) total[i] += fine[i];
    return;
  }
  double mid = 0.5 * (t0 + t1);
  integrate_piece_rec(piece, t0, mid, n_out, values, total, depth + 1);
  integrate_piece_rec(piece, mid, t1, n_out, values, total, depth + 1);
}

template <class F>
std::vector<cplx> integrate_piece(const Piece& piece, int n_out, const F& values) {
  std::vector<cplx> total(n_out, cplx(0));
  integrate_piece_rec(piece, 0.0, 1.0, n_out, values, total, 0);
  return total;
}

}  // namespace

std::vector<cplx> WkbSystem::residues_at(const std::string& point_key) const {
  auto it = par_.pole_points.find(point_key);
  if (it == par_.pole_points.end()) fail(ErrorCode::ConfigError, "unknown point " + point_key);
  const ZPoint& p = it->second;
  const int n = 512;
  const int n_out = order_max_ + 2;
  std::vector<cplx> acc(n_out, cplx(0));
  if (p.at_inf) {
    // Res_infty = -(1/2 pi i) over a circle enclosing all finite poles
    double maxabs = 1.0;
    for (const auto& [key, q] : par_.pole_points)
      if (!q.at_inf) maxabs = std::max(maxabs, std::abs(q.z));
    for (cplx r : par_.ramification) maxabs = std::max(maxabs, std::abs(r));
    double radius = 5.0 * maxabs;
    for (int j = 0; j < n; ++j) {
      cplx e = std::polar(radius, 2.0 * kPi * j / n);
      std::vector<cplx> v = form_values(e);
      for (int i = 0; i < n_out; ++i) acc[i] -= v[i] * e;
    }
  } else {
    double d = 1e30;
    for (const auto& [key, q] : par_.pole_points)
      if (!q.at_inf && std::abs(q.z - p.z) > 1e-12) d = std::min(d, std::abs(q.z - p.z));
    for (cplx r : par_.ramification) d = std::min(d, std::abs(r - p.z));
    double radius = std::min(0.25 * d, 0.5);
    for (int j = 0; j < n; ++j) {
      cplx e = std::polar(radius, 2.0 * kPi * j / n);
      std::vector<cplx> v = form_values(p.z + e);
      for (int i = 0; i < n_out; ++i) acc[i] += v[i] * e;
    }
  }
  for (auto& v : acc) v /= double(n);
  return acc;
}

cplx WkbSystem::residue_at(const std::string& point_key, int k) const {
  if (k < -1 || k > order_max_) fail(ErrorCode::Unsupported, "order out of range");
  return residues_at(point_key)[k + 1];
}

std::vector<cplx> WkbSystem::path_voros_all(const std::string& pole, int detour_side) const {
  ZPoint from = par_.pole_points.at(pole + "-");
  ZPoint to = par_.pole_points.at(pole + "+");

  std::vector<cplx> avoid = par_.ramification;
  for (const auto& [key, q] : par_.pole_points)
    if (!q.at_inf) avoid.push_back(q.z);
  double scale = 1.0;
  for (cplx p : avoid) scale = std::max(scale, std::abs(p));
  double clearance = 0.07 * scale;
  double far_radius = 6.0 * scale;

  auto pick_dir = [&](cplx other) {
    double best = -1;
    cplx bestd = 1.0;
    for (int j = 0; j < 24; ++j) {
      cplx d = std::polar(1.0, 2.0 * kPi * j / 24.0 + 0.1234);
      double sc = 1e30;
      for (cplx p : avoid) sc = std::min(sc, dist_to_segment(p, other, far_radius * d));
      if (sc > best) {
        best = sc;
        bestd = d;
      }
    }
    return bestd;
  };

  if (from.at_inf && to.at_inf)
    fail(ErrorCode::Unsupported, "both endpoints at infinity is not a curve in the catalog");
  std::vector<Piece> pieces;
  std::vector<double> orientation;  // +1 forward, -1 reversed (incoming) tail
  cplx a, b;
  if (from.at_inf) {
    cplx d = pick_dir(to.z);
    a = far_radius * d;
    pieces.push_back(log_ray_piece(a));
    orientation.push_back(-1.0);  // from infinity down to the entry point
  } else {
    a = from.z;
  }
  b = to.at_inf ? far_radius * pick_dir(a) : to.z;
  route_polyline(pieces, a, b, avoid, clearance, detour_side, 0);
  while (orientation.size() < pieces.size()) orientation.push_back(1.0);
  if (to.at_inf) {
    pieces.push_back(log_ray_piece(b));
    orientation.push_back(1.0);
  }

  // only the orders k >= 1 are path-integrable (lower orders have puncture
  // residues and divergent tails); drop them from the integrand vector
  const int n_int = order_max_;
  std::vector<cplx> integrated(n_int, cplx(0));
  auto values = [&](cplx z) {
    std::vector<cplx> all = form_values(z);
    return std::vector<cplx>(all.begin() + 2, all.end());
  };
  for (size_t i = 0; i < pieces.size(); ++i) {
    std::vector<cplx> part = integrate_piece(pieces[i], n_int, values);
    for (int j = 0; j < n_int; ++j) integrated[j] += orientation[i] * part[j];
  }
  // analytic remainder of the rays past |z| = 1e5, from the z^{-3} decay
  auto tail_fix = [&](cplx entry, double orient) {
    cplx z_end = entry / std::abs(entry) * 1e5;
    std::vector<cplx> v = form_values(z_end);
    for (int j = 0; j < n_int; ++j) integrated[j] += orient * 0.5 * v[j + 2] * z_end;
  };
  if (from.at_inf) tail_fix(a, -1.0);
  if (to.at_inf) tail_fix(b, 1.0);
  std::vector<cplx> total(order_max_ + 2, cplx(0));
  for (int j = 0; j < n_int; ++j) total[j + 2] = integrated[j];
  return total;
}

cplx WkbSystem::path_voros(const std::string& pole, int k, int detour_side) const {
  if (k < 1)
    fail(ErrorCode::Unsupported, "path integrals start at order 1 (lower orders via residues)");
  return path_voros_all(pole, detour_side)[k + 1];
}

cplx WkbSystem::riccati_residual(cplx z, cplx hbar, int K) const {
  cplx x = par_.x.eval(z);
  cplx yv = par_.y.eval(z);
  auto cf_value = [&](const CurveFieldElem& f) {
    return frat_eval(f.a, x) + frat_eval(f.b, x) * yv;
  };
  auto cf_deriv_value = [&](const CurveFieldElem& f) {
    FRat da = frat_derivative(f.a, factors_);
    FRat db = frat_add(frat_derivative(f.b, factors_), frat_mul(f.b, half_dlogq_, factors_),
                       factors_);
    return frat_eval(da, x) + frat_eval(db, x) * yv;
  };
  cplx S1 = 0, S2 = 0, hp = 1.0 / hbar;
  for (int kk = -1; kk <= K; ++kk) {
    S1 += hp * cf_value(s_[kk + 1]);
    S2 += hp * cf_deriv_value(s_[kk + 1]);
    hp *= hbar;
  }
  cplx q = hbar * frat_eval(q1_, x);
  cplx r = -frat_eval(q_rat_, x) + hbar * frat_eval(r1_, x) + hbar * hbar * frat_eval(r2_, x);
  return hbar * hbar * (S2 + S1 * S1) + q * hbar * S1 + r;
}

cplx path_voros_numeric(const SpectralCurve& curve, const LatticeElement& beta, int k) {
  Lattice lat(curve);
  LatticeElement red = reduce(lat, beta);
  for (int v : red.cyc)
    if (v) fail(ErrorCode::UnsupportedClass, "path integral needs a path-only class");
  WkbSystem sys(curve, k);
  cplx total = 0;
  for (int i = 0; i < lat.n_poles(); ++i)
    if (red.path[i]) total += double(red.path[i]) * sys.path_voros(lat.poles()[i], k);
  return total;
}

}  // namespace hgbps
