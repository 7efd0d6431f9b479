#include "hgbps/tr.hpp"

#include <algorithm>

#include "hgbps/errors.hpp"
#include "hgbps/series.hpp"

namespace hgbps {

void MultiPP::add_term(Key k, cplx v) {
  if (v == cplx(0)) return;
  std::sort(k.begin(), k.end());
  auto it = terms.find(k);
  if (it == terms.end())
    terms.emplace(std::move(k), v);
  else {
    it->second += v;
    if (std::abs(it->second) == 0.0) terms.erase(it);
  }
}

MultiPP& MultiPP::operator+=(const MultiPP& o) {
  for (const auto& [k, v] : o.terms) add_term(k, v);
  return *this;
}

MultiPP& MultiPP::operator*=(cplx s) {
  if (s == cplx(0)) {
    terms.clear();
    return *this;
  }
  for (auto& [k, v] : terms) v *= s;
  return *this;
}

MultiPP tensor(const MultiPP& a, const MultiPP& b) {
  MultiPP r;
  for (const auto& [ka, va] : a.terms)
    for (const auto& [kb, vb] : b.terms) {
      MultiPP::Key k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      r.add_term(std::move(k), va * vb);
    }
  return r;
}

cplx MultiPP::eval(const std::vector<cplx>& z, const std::vector<cplx>& ram) const {
  cplx total = 0;
  for (const auto& [k, v] : terms) {
    cplx t = v;
    for (const auto& f : k) t *= pow_int(1.0 / (z[f.var] - ram[f.pole]), f.ord);
    total += t;
  }
  return total;
}

void MultiPP::prune(double rel_tol) {
  double scale = 0;
  for (const auto& [k, v] : terms) scale = std::max(scale, std::abs(v));
  double cut = rel_tol * scale;
  for (auto it = terms.begin(); it != terms.end();) {
    if (std::abs(it->second) <= cut)
      it = terms.erase(it);
    else
      ++it;
  }
}

int MultiPP::max_order(int var) const {
  int m = 0;
  for (const auto& [k, v] : terms)
    for (const auto& f : k)
      if (f.var == var) m = std::max(m, f.ord);
  return m;
}

JetPP JetPP::zero_window(int lo, int hi) {
  JetPP j;
  j.lo = lo;
  j.hi = hi;
  j.c.assign(std::max(0, hi - lo + 1), MultiPP{});
  return j;
}

const MultiPP& JetPP::coeff(int k) const {
  static const MultiPP kEmpty;
  if (k < lo || k > hi) return kEmpty;
  return c[k - lo];
}

JetPP jetpp_add(const JetPP& a, const JetPP& b) {
  JetPP r = JetPP::zero_window(std::min(a.lo, b.lo), std::min(a.hi, b.hi));
  for (int k = r.lo; k <= r.hi; ++k) {
    MultiPP m = a.coeff(k);
    m += b.coeff(k);
    r.at(k) = std::move(m);
  }
  return r;
}

JetPP jetpp_mul_scalar_jet(const JetPP& a, const JetC& s) {
  int lo = a.lo + s.lo;
  int hi = std::min(a.hi + s.lo, s.hi + a.lo);
  JetPP r = JetPP::zero_window(lo, hi);
  for (int i = a.lo; i <= a.hi; ++i) {
    if (a.coeff(i).empty()) continue;
    for (int j = s.lo; j <= s.hi; ++j) {
      int k = i + j;
      if (k < lo || k > hi || s.coeff(j) == cplx(0)) continue;
      MultiPP m = a.coeff(i);
      m *= s.coeff(j);
      r.at(k) += m;
    }
  }
  return r;
}

JetPP jetpp_mul(const JetPP& a, const JetPP& b) {
  int lo = a.lo + b.lo;
  int hi = std::min(a.hi + b.lo, b.hi + a.lo);
  JetPP r = JetPP::zero_window(lo, hi);
  for (int i = a.lo; i <= a.hi; ++i) {
    if (a.coeff(i).empty()) continue;
    for (int j = b.lo; j <= b.hi; ++j) {
      if (i + j < lo || i + j > hi || b.coeff(j).empty()) continue;
      r.at(i + j) += tensor(a.coeff(i), b.coeff(j));
    }
  }
  return r;
}

JetPP jetpp_from_scalar(const JetC& a) {
  JetPP r = JetPP::zero_window(a.lo, a.hi);
  for (int k = a.lo; k <= a.hi; ++k) r.at(k) = MultiPP::scalar(a.coeff(k));
  return r;
}

TrSession::TrSession(const SpectralCurve& curve, int jet_margin)
    : curve_(curve), par_(build_parametrization(curve)), margin_(jet_margin) {
  for (cplx r : par_.ramification) {
    cplx d2 = par_.dx.derivative().eval(r);
    if (std::abs(d2) < 1e-10)
      fail(ErrorCode::Unsupported, "non-simple ramification point");
  }
}

int TrSession::wide() const { return margin_ + 48; }

JetC TrSession::ident_jet(int ri) const {
  JetC j = JetC::zero_window(0, wide());
  j.at(0) = par_.ramification[ri];
  j.at(1) = 1.0;
  return j;
}

JetC TrSession::sigma_jet(int ri) const {
  cplx r = par_.ramification[ri];
  const Mobius& s = par_.conj;
  JetC num = JetC::zero_window(0, wide());
  num.at(0) = s.a * r + s.b;
  num.at(1) = s.a;
  JetC den = JetC::zero_window(0, wide());
  den.at(0) = s.c * r + s.d;
  den.at(1) = s.c;
  return jet_div(num, den);
}

JetC TrSession::sigma_tilde(int ri) const {
  JetC s = sigma_jet(ri);
  JetC r = s;
  r.at(0) -= par_.ramification[ri];
  return r;
}

JetC TrSession::sub_jet(int ri, bool sigma_side, int pole, int ord) {
  auto key = std::make_tuple(ri, sigma_side ? 1 : 0, pole, ord);
  auto it = sub_cache_.find(key);
  if (it != sub_cache_.end()) return it->second;
  JetC slot = sigma_side ? sigma_jet(ri) : ident_jet(ri);
  JetC shifted = JetC::zero_window(0, wide() + 2 * ord + 4);
  for (int k = 0; k <= std::min(slot.hi, shifted.hi); ++k) shifted.at(k) = slot.coeff(k);
  shifted.at(0) -= par_.ramification[pole];
  JetC inv = jet_inverse(shifted);
  JetC r = inv;
  for (int k = 1; k < ord; ++k) r = jet_mul(r, inv);
  sub_cache_.emplace(key, r);
  return r;
}

// slot_kind: 0 = substitute z (jet), 1 = substitute sigma(z) (jet),
//            2 = keep symbolic; spectator_ids gives the output variable id
//            for each symbolic slot (aligned with the slot index).
JetPP TrSession::eval_at(const MultiPP& w, int ri, const std::vector<int>& slot_kind,
                         const std::vector<int>& spectator_ids, int cap) {
  JetPP total;
  bool first = true;
  for (const auto& [key, v] : w.terms) {
    JetC scal = JetC::zero_window(0, wide());
    scal.at(0) = v;
    MultiPP::Key sym_key;
    for (const auto& f : key) {
      if (slot_kind[f.var] == 2)
        sym_key.push_back(PPFactor{spectator_ids[f.var], f.pole, f.ord});
      else
        scal = jet_mul(scal, sub_jet(ri, slot_kind[f.var] == 1, f.pole, f.ord));
    }
    MultiPP sym;
    sym.add_term(std::move(sym_key), 1.0);
    JetPP term = JetPP::zero_window(scal.lo, scal.hi);
    for (int k = scal.lo; k <= scal.hi; ++k) {
      MultiPP m = sym;
      m *= scal.coeff(k);
      term.at(k) = std::move(m);
    }
    total = first ? std::move(term) : jetpp_add(total, term);
    first = false;
  }
  if (first) return JetPP::zero_window(-margin_, margin_);
  return total;
}

namespace {

// B(z, z_i)-factor as a jet at r with PP-in-z_i coefficients:
// 1/(slot - z_i)^2 where slot = r+u (plain) or sigma(r+u).
JetPP b_half_symbolic(const JetC& sigma_t, bool sigma_side, int ri, int var_id, int margin) {
  JetPP out = JetPP::zero_window(0, margin);
  // margin here is the session's wide window
  if (!sigma_side) {
    // coefficient of u^k: (k+1) / (z_i - r)^{k+2}
    for (int k = 0; k <= margin; ++k) {
      MultiPP m;
      m.add_term({PPFactor{var_id, ri, k + 2}}, double(k + 1));
      out.at(k) = std::move(m);
    }
    return out;
  }
  // sum_j (j+1) sigma_tilde(u)^j / (z_i - r)^{j+2}
  JetC pw = JetC::zero_window(0, margin);
  pw.at(0) = 1.0;
  for (int j = 0; j <= margin; ++j) {
    for (int k = std::max(pw.lo, 0); k <= pw.hi && k <= margin; ++k) {
      if (pw.coeff(k) == cplx(0)) continue;
      MultiPP m;
      m.add_term({PPFactor{var_id, ri, j + 2}}, double(j + 1) * pw.coeff(k));
      out.at(k) += m;
    }
    pw = jet_mul(pw, sigma_t);
    if (pw.lo > margin) break;
  }
  return out;
}

}  // namespace

JetPP TrSession::bracket(int g, int n, int ri, int cap) {
  // Building W_{g,n}(z0, S): bracket for the residue at ramification point ri.
  int spectators = n - 1;
  JetC sig_t = sigma_tilde(ri);
  JetC ident = ident_jet(ri);
  JetC sig = sigma_jet(ri);

  JetPP acc;
  bool have = false;
  auto accumulate = [&](JetPP term) {
    acc = have ? jetpp_add(acc, term) : std::move(term);
    have = true;
  };

  // A-term: W_{g-1, n+1}(z, sigma z, S)
  if (g >= 1) {
    if (g == 1 && n == 1) {
      // W_{0,2}(z, sigma z) = 1/(z - sigma z)^2
      JetC diff = jet_add(ident, jet_scale(sig, -1.0));
      JetC w02 = jet_inverse(jet_mul(diff, diff));
      accumulate(jetpp_from_scalar(w02));
    } else if (2 * (g - 1) - 2 + (n + 1) >= 1) {
      const MultiPP& wa = correlator(g - 1, n + 1);
      std::vector<int> kinds(n + 1), ids(n + 1, -1);
      kinds[0] = 0;
      kinds[1] = 1;
      for (int s = 0; s < spectators; ++s) {
        kinds[2 + s] = 2;
        ids[2 + s] = 1 + s;  // spectators keep variable ids 1..n-1
      }
      accumulate(eval_at(wa, ri, kinds, ids, cap));
    }
  }

  // Product terms over ordered pairs (g1, I1), (g2, I2).
  for (int g1 = 0; g1 <= g; ++g1) {
    int g2 = g - g1;
    for (unsigned mask = 0; mask < (1u << spectators); ++mask) {
      unsigned cmask = ((1u << spectators) - 1u) & ~mask;
      int n1 = __builtin_popcount(mask), n2 = spectators - n1;
      if (g1 == 0 && n1 == 0) continue;  // primed sum exclusions
      if (g2 == 0 && n2 == 0) continue;
      if (2 * g1 - 2 + (n1 + 1) < 1 && !(g1 == 0 && n1 == 1)) continue;
      if (2 * g2 - 2 + (n2 + 1) < 1 && !(g2 == 0 && n2 == 1)) continue;

      // deepest negative jet order a factor can contribute (its slot-0 pole)
      auto lo_bound = [&](int gf, unsigned m) -> int {
        int nvars = __builtin_popcount(m);
        if (gf == 0 && nvars == 1) return 0;
        return -correlator(gf, nvars + 1).max_order(0);
      };

      auto factor = [&](int gf, unsigned m, bool sigma_side, int fcap) -> JetPP {
        std::vector<int> vars;
        for (int s = 0; s < spectators; ++s)
          if (m & (1u << s)) vars.push_back(1 + s);
        if (gf == 0 && vars.size() == 1)
          return b_half_symbolic(sig_t, sigma_side, ri, vars[0], fcap);
        const MultiPP& w = correlator(gf, (int)vars.size() + 1);
        std::vector<int> kinds(vars.size() + 1, 2), ids(vars.size() + 1, -1);
        kinds[0] = sigma_side ? 1 : 0;
        for (size_t s = 0; s < vars.size(); ++s) ids[1 + s] = vars[s];
        return eval_at(w, ri, kinds, ids, fcap);
      };

      int cap1 = cap - lo_bound(g2, cmask) + 2;
      int cap2 = cap - lo_bound(g1, mask) + 2;
      accumulate(jetpp_mul(factor(g1, mask, false, cap1), factor(g2, cmask, true, cap2)));
    }
  }
  if (!have) return JetPP::zero_window(-margin_, margin_);
  return acc;
}

void TrSession::build(int g, int n) {
  MultiPP result;
  for (int ri = 0; ri < (int)par_.ramification.size(); ++ri) {
    JetC sig_t = sigma_tilde(ri);
    // kernel prefactor sigma'(z) / (2 (y - y o sigma) x')
    JetC y_plain = jet_of_polyfrac(par_.y, par_.ramification[ri], wide());
    JetC y_sig = jet_of_polyfrac_at(par_.y, sigma_jet(ri));
    JetC xp = jet_of_polyfrac(par_.dx, par_.ramification[ri], wide());
    JetC denom = jet_mul(jet_scale(jet_add(y_plain, jet_scale(y_sig, -1.0)), 2.0), xp);
    cplx r = par_.ramification[ri];
    JetC sig_prime = JetC::zero_window(0, wide());
    {
      // derivative of the Moebius involution as a jet
      const Mobius& s = par_.conj;
      JetC t = JetC::zero_window(0, wide());
      t.at(0) = s.c * r + s.d;
      t.at(1) = s.c;
      JetC t2 = jet_mul(t, t);
      JetC numj = JetC::zero_window(0, wide());
      numj.at(0) = s.a * s.d - s.b * s.c;
      sig_prime = jet_div(numj, t2);
    }
    JetC pref = jet_mul(jet_inverse(denom), sig_prime);

    // residue extraction reads only orders <= -1 of H = bracket * pref, so
    // bracket coefficients above -1 - pref.lo never contribute
    int cap = std::max(0, -pref.lo) + 2;
    JetPP h = jetpp_mul_scalar_jet(bracket(g, n, ri, cap), pref);
    if (h.lo > -1) continue;  // no residue contribution
    if (h.hi < -1)
      fail(ErrorCode::TruncationInsufficient, "jet window exhausted in the recursion");

    int jmax = -h.lo - 1;
    // term 1: sum_j H_{-1-j} / (z0 - r)^{j+1}
    for (int j = 0; j <= jmax; ++j) {
      const MultiPP& m = h.coeff(-1 - j);
      if (m.empty()) continue;
      MultiPP head;
      head.add_term({PPFactor{0, ri, j + 1}}, 1.0);
      result += tensor(head, m);
    }
    // term 2: - sum_j [u^{-1}] (sigma_tilde^j H) / (z0 - r)^{j+1}
    JetC pw = JetC::zero_window(0, margin_);
    pw.at(0) = 1.0;
    for (int j = 0; j <= jmax; ++j) {
      MultiPP m;
      for (int i = std::max(pw.lo, j); i <= std::min(pw.hi, jmax); ++i) {
        if (pw.coeff(i) == cplx(0)) continue;
        MultiPP part = h.coeff(-1 - i);
        part *= pw.coeff(i);
        m += part;
      }
      if (!m.empty()) {
        MultiPP head;
        head.add_term({PPFactor{0, ri, j + 1}}, -1.0);
        result += tensor(head, m);
      }
      pw = jet_mul(pw, sig_t);
      if (pw.lo > jmax) break;
    }
  }
  result.prune(1e-13);
  memo_[{g, n}] = std::move(result);
}

const MultiPP& TrSession::correlator(int g, int n) {
  if (2 * g - 2 + n < 1) fail(ErrorCode::Unsupported, "stable correlators require 2g-2+n >= 1");
  auto it = memo_.find({g, n});
  if (it != memo_.end()) return it->second;
  for (int attempt = 0;; ++attempt) {
    try {
      build(g, n);
      break;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TruncationInsufficient || attempt >= 3) throw;
      margin_ += 24;  // retry with deeper jets
      memo_.clear();
      sub_cache_.clear();
    }
  }
  return memo_.at({g, n});
}

cplx TrSession::correlator_value(int g, const std::vector<cplx>& z) {
  const MultiPP& w = correlator(g, (int)z.size());
  return w.eval(z, par_.ramification);
}

cplx TrSession::free_energy(int g, cplx phi_shift) {
  if (g < 2) fail(ErrorCode::Unsupported, "free_energy computes g >= 2");
  const MultiPP& w1 = correlator(g, 1);
  cplx total = 0;
  for (int ri = 0; ri < (int)par_.ramification.size(); ++ri) {
    cplx r = par_.ramification[ri];
    // jet of W_{g,1} at this ramification point
    int depth = w1.max_order(0) + 4;
    int top = depth + 8;
    JetC wj = JetC::zero_window(-depth, top);
    for (const auto& [key, v] : w1.terms) {
      JetC t = JetC::zero_window(-depth, top + 2 * depth);
      t.at(0) = v;
      for (const auto& f : key) {
        JetC piece;
        if (f.pole == ri) {
          piece = JetC::zero_window(-f.ord, top + 2 * depth);
          piece.at(-f.ord) = 1.0;
        } else {
          JetC shifted = JetC::zero_window(0, top + 4 * depth);
          shifted.at(0) = r - par_.ramification[f.pole];
          shifted.at(1) = 1.0;
          JetC inv = jet_inverse(shifted);
          piece = inv;
          for (int k = 1; k < f.ord; ++k) piece = jet_mul(piece, inv);
        }
        t = jet_mul(t, piece);
      }
      wj = jet_add(wj, t);
    }
    // primitive of y dx, constant of integration = phi_shift
    JetC ydx = jet_mul(jet_of_polyfrac(par_.y, r, top + 2 * depth),
                       jet_of_polyfrac(par_.dx, r, top + 2 * depth));
    JetC phi = jet_integrate(ydx);
    JetC phi_wide = JetC::zero_window(std::min(phi.lo, 0), phi.hi);
    for (int k = phi_wide.lo; k <= phi_wide.hi; ++k) phi_wide.at(k) = phi.coeff(k);
    phi_wide.at(0) += phi_shift;
    JetC prod = jet_mul(phi_wide, wj);
    if (prod.lo > -1 || prod.hi < -1)
      fail(ErrorCode::TruncationInsufficient, "free-energy residue outside the jet window");
    total += prod.coeff(-1);
  }
  return total / double(2 - 2 * g);
}

TrComparison tr_free_energy_check(const SpectralCurve& curve, int g) {
  TrSession session(curve);
  TrComparison out;
  out.f_oracle = session.free_energy(g);
  out.f_closed = free_energy(curve, g);
  out.abs_diff = std::abs(out.f_oracle - out.f_closed);
  return out;
}

}  // namespace hgbps
