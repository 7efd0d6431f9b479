#pragma once

#include <cassert>

#include "hgbps/poly.hpp"

namespace hgbps {

// Truncated Laurent expansion in a local coordinate u, with coefficient ring R.
// Coefficients are valid on the window [lo, hi]; arithmetic tracks how the
// window shrinks through products.
template <class R>
struct JetT {
  int lo = 0;
  int hi = -1;  // empty when hi < lo
  std::vector<R> c;

  static JetT zero_window(int lo, int hi) {
    JetT j;
    j.lo = lo;
    j.hi = hi;
    j.c.assign(hi - lo + 1, R{});
    return j;
  }
  R coeff(int k) const {
    if (k < lo || k > hi) return R{};
    return c[k - lo];
  }
  R& at(int k) { return c[k - lo]; }
  bool empty() const { return hi < lo; }
};

using JetC = JetT<cplx>;

inline JetC jet_add(const JetC& a, const JetC& b) {
  JetC r = JetC::zero_window(std::min(a.lo, b.lo), std::min(a.hi, b.hi));
  for (int k = r.lo; k <= r.hi; ++k) r.at(k) = a.coeff(k) + b.coeff(k);
  return r;
}

inline JetC jet_scale(const JetC& a, cplx s) {
  JetC r = a;
  for (auto& v : r.c) v *= s;
  return r;
}

inline JetC jet_mul(const JetC& a, const JetC& b) {
  // valid orders: k receives full contributions iff k - a.lo <= b.hi + ... ;
  // the safe window is [a.lo + b.lo, min(a.hi + b.lo, b.hi + a.lo)].
  int lo = a.lo + b.lo;
  int hi = std::min(a.hi + b.lo, b.hi + a.lo);
  JetC r = JetC::zero_window(lo, hi);
  for (int i = a.lo; i <= a.hi; ++i) {
    if (a.coeff(i) == cplx(0)) continue;
    for (int j = b.lo; j <= b.hi; ++j) {
      int k = i + j;
      if (k < lo || k > hi) continue;
      r.at(k) += a.coeff(i) * b.coeff(j);
    }
  }
  return r;
}

// Multiplicative inverse; the leading coefficient (valuation) must be nonzero.
// The valuation scan is scaled by the first few coefficients only: high jet
// orders can grow geometrically (nearby singularities) and must not drown the
// genuine leading term.
inline JetC jet_inverse(const JetC& a, double zero_tol = 1e-9) {
  double scale = 0;
  for (int k = a.lo; k <= std::min(a.hi, a.lo + 16); ++k)
    scale = std::max(scale, std::abs(a.coeff(k)));
  assert(scale > 0);
  int v = a.lo;
  while (v <= a.hi && std::abs(a.coeff(v)) <= zero_tol * scale) ++v;
  assert(v <= a.hi && "jet_inverse of (numerically) zero jet");
  int len = a.hi - v + 1;
  // b(u) = u^{-v} * inverse of (a shifted down by v)
  JetC r = JetC::zero_window(-v, -v + len - 1);
  cplx a0 = a.coeff(v);
  r.at(-v) = 1.0 / a0;
  for (int n = 1; n < len; ++n) {
    cplx s = 0;
    for (int k = 1; k <= n; ++k) s += a.coeff(v + k) * r.coeff(-v + n - k);
    r.at(-v + n) = -s / a0;
  }
  return r;
}

inline JetC jet_div(const JetC& a, const JetC& b) { return jet_mul(a, jet_inverse(b)); }

// Jet of a polynomial at base + u, windowed to [0, hi].
inline JetC jet_of_poly(const Poly& p, cplx base, int hi) {
  JetC r = JetC::zero_window(0, hi);
  if (p.is_zero()) return r;
  // Horner: result = ((c_n (base+u)) + c_{n-1}) (base+u) + ...
  for (int k = p.degree(); k >= 0; --k) {
    // r = r * (base + u) + c_k
    JetC nr = JetC::zero_window(0, hi);
    for (int i = 0; i <= hi; ++i) {
      cplx v = r.coeff(i) * base + (i > 0 ? r.coeff(i - 1) : cplx(0));
      nr.at(i) = v;
    }
    nr.at(0) += p.coeff(k);
    r = std::move(nr);
  }
  return r;
}

// Jet of a polynomial evaluated at a jet argument with nonnegative valuation.
inline JetC jet_of_poly_at(const Poly& p, const JetC& arg) {
  assert(arg.lo >= 0);
  JetC r = JetC::zero_window(0, arg.hi);
  if (p.is_zero()) return r;
  for (int k = p.degree(); k >= 0; --k) {
    JetC m = jet_mul(r, arg);
    // products against the vanishing part leave zero low-order coefficients
    JetC widened = JetC::zero_window(0, arg.hi);
    for (int i = std::max(m.lo, 0); i <= std::min(m.hi, arg.hi); ++i) widened.at(i) = m.coeff(i);
    r = std::move(widened);
    r.at(0) += p.coeff(k);
  }
  return r;
}

inline JetC jet_of_polyfrac(const PolyFrac& f, cplx base, int hi, int extra = 8) {
  JetC n = jet_of_poly(f.num, base, hi + extra);
  JetC d = jet_of_poly(f.den, base, hi + extra);
  JetC q = jet_div(n, d);
  JetC r = JetC::zero_window(q.lo, std::min(q.hi, hi));
  for (int k = r.lo; k <= r.hi; ++k) r.at(k) = q.coeff(k);
  return r;
}

inline JetC jet_of_polyfrac_at(const PolyFrac& f, const JetC& arg) {
  return jet_div(jet_of_poly_at(f.num, arg), jet_of_poly_at(f.den, arg));
}

// Term-wise primitive; the residue coefficient (order -1) must vanish.
inline JetC jet_integrate(const JetC& a, double zero_tol = 1e-9) {
  double scale = 0;
  for (int k = a.lo; k <= std::min(a.hi, a.lo + 16); ++k)
    scale = std::max(scale, std::abs(a.coeff(k)));
  assert(std::abs(a.coeff(-1)) <= zero_tol * std::max(scale, 1.0));
  JetC r = JetC::zero_window(a.lo + 1, a.hi + 1);
  for (int k = a.lo; k <= a.hi; ++k) {
    if (k == -1) continue;
    r.at(k + 1) = a.coeff(k) / double(k + 1);
  }
  return r;
}

}  // namespace hgbps
