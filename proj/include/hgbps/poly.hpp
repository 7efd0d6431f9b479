#pragma once

#include <algorithm>
#include <cassert>
#include <vector>

#include "hgbps/numeric.hpp"

namespace hgbps {

// Dense univariate polynomial over complex doubles, coefficient c[k] of z^k.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<cplx> c) : c_(c) { trim(); }
  explicit Poly(std::vector<cplx> c) : c_(std::move(c)) { trim(); }
  static Poly constant(cplx v) { return Poly({v}); }
  static Poly monomial(int k, cplx v) {
    std::vector<cplx> c(k + 1, cplx(0));
    c[k] = v;
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
  bool is_zero() const { return c_.empty(); }
  cplx coeff(int k) const { return (k >= 0 && k < (int)c_.size()) ? c_[k] : cplx(0); }
  const std::vector<cplx>& coeffs() const { return c_; }

  cplx eval(cplx z) const {
    cplx r = 0;
    for (int k = degree(); k >= 0; --k) r = r * z + c_[k];
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<cplx> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * double(k);
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<cplx> c(std::max(a.c_.size(), b.c_.size()), cplx(0));
    for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (b * cplx(-1)); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<cplx> c(a.c_.size() + b.c_.size() - 1, cplx(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, cplx s) {
    std::vector<cplx> c = a.c_;
    for (auto& v : c) v *= s;
    return Poly(std::move(c));
  }
  friend Poly operator*(cplx s, const Poly& a) { return a * s; }

  double max_abs_coeff() const {
    double m = 0;
    for (auto& v : c_) m = std::max(m, std::abs(v));
    return m;
  }

  // Divide by (monic-or-not) divisor; returns quotient, sets `exact` when the
  // remainder is negligible relative to the operands.
  Poly divide(const Poly& div, bool* exact, double tol = 1e-9) const {
    assert(!div.is_zero());
    std::vector<cplx> rem = c_;
    int dd = div.degree();
    cplx lead = div.c_[dd];
    if ((int)rem.size() - 1 < dd) {
      if (exact) *exact = max_abs_coeff() <= tol * std::max(1.0, max_abs_coeff());
      return Poly();
    }
    std::vector<cplx> q(rem.size() - dd, cplx(0));
    for (int k = (int)rem.size() - 1; k >= dd; --k) {
      cplx f = rem[k] / lead;
      q[k - dd] = f;
      for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * div.c_[j];
      rem[k] = 0;
    }
    double rm = 0;
    for (auto& v : rem) rm = std::max(rm, std::abs(v));
    if (exact) *exact = rm <= tol * std::max(1.0, max_abs_coeff());
    return Poly(std::move(q));
  }

 private:
  void trim() {
    while (!c_.empty() && std::abs(c_.back()) == 0.0) c_.pop_back();
  }
  std::vector<cplx> c_;
};

// Ratio of two polynomials; evaluation-oriented (no implicit simplification).
struct PolyFrac {
  Poly num, den{Poly::constant(1.0)};

  cplx eval(cplx z) const { return num.eval(z) / den.eval(z); }

  PolyFrac derivative() const {
    return {num.derivative() * den - num * den.derivative(), den * den};
  }
  friend PolyFrac operator+(const PolyFrac& a, const PolyFrac& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend PolyFrac operator-(const PolyFrac& a, const PolyFrac& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend PolyFrac operator*(const PolyFrac& a, const PolyFrac& b) {
    return {a.num * b.num, a.den * b.den};
  }
  friend PolyFrac operator*(const PolyFrac& a, cplx s) { return {a.num * s, a.den}; }
};

// Moebius transform z -> (a z + b) / (c z + d).
struct Mobius {
  cplx a{1}, b{0}, c{0}, d{1};
  cplx apply(cplx z) const { return (a * z + b) / (c * z + d); }
  cplx derivative(cplx z) const {
    cplx t = c * z + d;
    return (a * d - b * c) / (t * t);
  }
  bool is_involution_fixed(cplx z, double tol = 1e-9) const { return std::abs(apply(z) - z) < tol; }
};

}  // namespace hgbps
