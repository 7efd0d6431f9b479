#include "hgbps/lattice.hpp"

#include <nlohmann/json.hpp>

#include "hgbps/errors.hpp"

namespace hgbps {

int Lattice::pole_index(const std::string& s) const {
  for (int i = 0; i < (int)poles_.size(); ++i)
    if (poles_[i] == s) return i;
  fail(ErrorCode::DimensionMismatch, "unknown pole label " + s);
}

LatticeElement LatticeElement::zero(const Lattice& lat) {
  LatticeElement e;
  e.cyc.assign(2 * lat.n_poles(), 0);
  e.path.assign(lat.n_poles(), 0);
  return e;
}

LatticeElement LatticeElement::cycle(const Lattice& lat, const std::string& pole, int sign,
                                     int coeff) {
  LatticeElement e = zero(lat);
  e.cyc[2 * lat.pole_index(pole) + (sign > 0 ? 0 : 1)] = coeff;
  return e;
}

LatticeElement LatticeElement::beta(const Lattice& lat, const std::string& pole, int coeff) {
  LatticeElement e = zero(lat);
  e.path[lat.pole_index(pole)] = coeff;
  return e;
}

LatticeElement& LatticeElement::operator+=(const LatticeElement& o) {
  for (size_t i = 0; i < cyc.size(); ++i) cyc[i] += o.cyc[i];
  for (size_t i = 0; i < path.size(); ++i) path[i] += o.path[i];
  return *this;
}

LatticeElement& LatticeElement::operator-=(const LatticeElement& o) {
  for (size_t i = 0; i < cyc.size(); ++i) cyc[i] -= o.cyc[i];
  for (size_t i = 0; i < path.size(); ++i) path[i] -= o.path[i];
  return *this;
}

bool LatticeElement::has_path_part() const {
  for (int v : path)
    if (v) return true;
  return false;
}

bool LatticeElement::is_zero_reduced() const {
  for (int v : cyc)
    if (v) return false;
  return !has_path_part();
}

LatticeElement reduce(const Lattice& lat, LatticeElement e) {
  int n = lat.n_poles();
  if (n == 0) return e;
  int c = e.cyc[2 * n - 1];
  if (c)
    for (auto& v : e.cyc) v -= c;
  return e;
}

bool equal_mod_relation(const Lattice& lat, const LatticeElement& a, const LatticeElement& b) {
  return reduce(lat, a - b).is_zero_reduced();
}

LatticeElement involution(const LatticeElement& e) {
  LatticeElement r = e;
  for (size_t i = 0; i + 1 < e.cyc.size(); i += 2) {
    r.cyc[i] = e.cyc[i + 1];
    r.cyc[i + 1] = e.cyc[i];
  }
  for (auto& v : r.path) v = -v;
  return r;
}

bool in_gamma(const Lattice& lat, const LatticeElement& e) {
  if (e.has_path_part()) return false;
  return reduce(lat, e + involution(e)).is_zero_reduced();
}

long long pairing(const Lattice& lat, const LatticeElement& a, const LatticeElement& b) {
  long long r = 0;
  for (int i = 0; i < lat.n_poles(); ++i) {
    long long ap = a.path[i], bp = b.path[i];
    long long ac = a.cyc[2 * i] - a.cyc[2 * i + 1];  // signed cycle weight at pole i
    long long bc = b.cyc[2 * i] - b.cyc[2 * i + 1];
    r += ap * bc - ac * bp;
  }
  return r;
}

cplx central_charge(const SpectralCurve& curve, const LatticeElement& e) {
  if (e.has_path_part())
    fail(ErrorCode::UnsupportedClass, "central charge needs a cycle-only class");
  return central_charge_doubled(curve, e);
}

cplx central_charge_doubled(const SpectralCurve& curve, const LatticeElement& e) {
  Lattice lat(curve);
  cplx z = 0;
  for (int i = 0; i < lat.n_poles(); ++i)
    z += double(e.cyc[2 * i] - e.cyc[2 * i + 1]) * kTwoPiI * curve.mass(lat.poles()[i]);
  return z;
}

cplx nu_functional(const SpectralCurve& curve, const LatticeElement& e) {
  Lattice lat(curve);
  cplx v = 0;
  for (int i = 0; i < lat.n_poles(); ++i)
    v += double(e.cyc[2 * i] - e.cyc[2 * i + 1]) * curve.nu_of(lat.poles()[i]);
  return v;
}

namespace {

// Basis index layout: cycle slots (raw index skipping gamma_{last,-}), then paths.
// Returns coefficients of the reduced element over that basis.
std::vector<long long> basis_coords(const Lattice& lat, const LatticeElement& e_in) {
  LatticeElement e = reduce(lat, e_in);
  int n = lat.n_poles();
  std::vector<long long> c;
  c.reserve(lat.basis_size());
  for (int i = 0; i < 2 * n; ++i)
    if (i != 2 * n - 1) c.push_back(e.cyc[i]);
  for (int i = 0; i < n; ++i) c.push_back(e.path[i]);
  return c;
}

// Pairing between reduced basis elements i and j.
long long basis_pairing(const Lattice& lat, int i, int j) {
  int n = lat.n_poles(), cb = lat.cycle_basis_size();
  auto unit = [&](int k) {
    LatticeElement e = LatticeElement::zero(lat);
    if (k < cb)
      e.cyc[k] = 1;
    else
      e.path[k - cb] = 1;
    return e;
  };
  return pairing(lat, unit(i), unit(j));
}

}  // namespace

TwistedValue::TwistedValue(const Lattice& lat, std::vector<cplx> basis_values)
    : lat_(lat), vals_(std::move(basis_values)) {
  if ((int)vals_.size() != lat_.basis_size())
    fail(ErrorCode::DimensionMismatch, "twisted value basis size");
}

cplx TwistedValue::eval(const LatticeElement& e) const {
  auto c = basis_coords(lat_, e);
  cplx r = 1;
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i]) r *= pow_int(vals_[i], c[i]);
  long long s = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    if (!c[i]) continue;
    for (size_t j = i + 1; j < c.size(); ++j) {
      if (!c[j]) continue;
      s += c[i] * c[j] * basis_pairing(lat_, (int)i, (int)j);
    }
  }
  if (s & 1) r = -r;
  return r;
}

QuadraticRefinement make_refinement(const Lattice& lat,
                                    const std::vector<std::pair<LatticeElement, int>>& active) {
  int cb = lat.cycle_basis_size();
  // F2 system: rows over cycle-basis sign exponents.
  std::vector<std::vector<int>> rows;  // each row: cb coefficients + rhs
  for (const auto& [gamma, omega] : active) {
    auto c = basis_coords(lat, gamma);
    std::vector<int> row(cb + 1, 0);
    for (int i = 0; i < cb; ++i) row[i] = int(((c[i] % 2) + 2) % 2);
    row[cb] = (omega == -1) ? 0 : 1;  // sigma = +1 for Omega = -1, else -1
    rows.push_back(std::move(row));
  }
  // Gaussian elimination over F2.
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < cb && r < (int)rows.size(); ++col) {
    int p = -1;
    for (int i = r; i < (int)rows.size(); ++i)
      if (rows[i][col]) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[r], rows[p]);
    for (int i = 0; i < (int)rows.size(); ++i)
      if (i != r && rows[i][col])
        for (int k = col; k <= cb; ++k) rows[i][k] ^= rows[r][k];
    pivot_col.push_back(col);
    ++r;
  }
  for (int i = r; i < (int)rows.size(); ++i)
    if (rows[i][cb]) fail(ErrorCode::Inconsistent, "no quadratic refinement satisfies Table 3");
  std::vector<int> sign_exp(cb, 0);  // free variables -> +1
  for (int i = r - 1; i >= 0; --i) {
    int col = pivot_col[i];
    int v = rows[i][cb];
    for (int k = col + 1; k < cb; ++k) v ^= rows[i][k] & sign_exp[k];
    sign_exp[col] = v;
  }
  std::vector<cplx> vals(lat.basis_size(), cplx(1.0));
  for (int i = 0; i < cb; ++i) vals[i] = sign_exp[i] ? -1.0 : 1.0;
  return QuadraticRefinement{TwistedValue(lat, std::move(vals))};
}

std::string element_to_json(const Lattice& lat, const LatticeElement& e) {
  nlohmann::json j;
  j["cycles"] = nlohmann::json::object();
  j["paths"] = nlohmann::json::object();
  for (int i = 0; i < lat.n_poles(); ++i) {
    const std::string& s = lat.poles()[i];
    if (e.cyc[2 * i]) j["cycles"][s + "+"] = e.cyc[2 * i];
    if (e.cyc[2 * i + 1]) j["cycles"][s + "-"] = e.cyc[2 * i + 1];
    if (e.path[i]) j["paths"][s] = e.path[i];
  }
  return j.dump();
}

LatticeElement element_from_json(const Lattice& lat, const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  LatticeElement e = LatticeElement::zero(lat);
  if (j.contains("cycles"))
    for (auto& [k, v] : j.at("cycles").items()) {
      if (k.size() < 2) fail(ErrorCode::ConfigError, "bad cycle key " + k);
      char sign = k.back();
      std::string pole = k.substr(0, k.size() - 1);
      e.cyc[2 * lat.pole_index(pole) + (sign == '+' ? 0 : 1)] = v.get<int>();
    }
  if (j.contains("paths"))
    for (auto& [k, v] : j.at("paths").items()) e.path[lat.pole_index(k)] = v.get<int>();
  return e;
}

}  // namespace hgbps
