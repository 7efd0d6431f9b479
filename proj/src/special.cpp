#include "hgbps/special.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <mutex>

#include "hgbps/errors.hpp"

namespace hgbps {

namespace {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

Int binom_int(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int j = 1; j <= k; ++j) {
    r *= (n - k + j);
    r /= j;
  }
  return r;
}

struct BernoulliTables {
  std::vector<Rat> numbers;                    // B_0..B_K
  std::vector<std::vector<double>> poly_coeff; // poly_coeff[k][j] = coeff of t^j in B_k(t)

  BernoulliTables() {
    const int K = kBernoulliMaxOrder;
    numbers.resize(K + 1);
    numbers[0] = 1;
    for (int n = 1; n <= K; ++n) {
      // sum_{k=0}^{n} C(n+1,k) B_k = 0
      Rat s = 0;
      for (int k = 0; k < n; ++k) s += Rat(binom_int(n + 1, k)) * numbers[k];
      numbers[n] = -s / Rat(n + 1);
    }
    poly_coeff.resize(K + 1);
    for (int k = 0; k <= K; ++k) {
      poly_coeff[k].resize(k + 1);
      for (int j = 0; j <= k; ++j) {
        Rat c = Rat(binom_int(k, j)) * numbers[k - j];
        poly_coeff[k][j] = c.convert_to<double>();
      }
    }
  }
};

const BernoulliTables& tables() {
  static BernoulliTables t;
  return t;
}

void check_order(int k) {
  if (k < 0 || k > kBernoulliMaxOrder)
    fail(ErrorCode::OrderTooLarge, "Bernoulli order " + std::to_string(k));
}

// Stirling tail coefficients B_{2j} / (2j (2j-1)), j = 1..10.
constexpr int kStirlingTerms = 10;

}  // namespace

double bernoulli_number(int k) {
  check_order(k);
  return tables().numbers[k].convert_to<double>();
}

const std::vector<double>& bernoulli_poly_coeffs(int k) {
  check_order(k);
  return tables().poly_coeff[k];
}

cplx bernoulli_poly(int k, cplx t) {
  check_order(k);
  const auto& c = tables().poly_coeff[k];
  cplx r = 0;
  for (int j = k; j >= 0; --j) r = r * t + c[j];
  return r;
}

cplx log_gamma(cplx z) {
  if (std::imag(z) == 0.0 && std::real(z) <= 0.0)
    fail(ErrorCode::BranchCut, "log_gamma on the nonpositive real axis");
  cplx shift = 0;
  while (std::real(z) < 16.0) {
    if (std::abs(z) < 1e-13) fail(ErrorCode::PoleHit, "log_gamma at a pole");
    shift -= std::log(z);
    z += 1.0;
  }
  cplx lz = std::log(z);
  cplx r = (z - 0.5) * lz - z + 0.5 * std::log(2.0 * kPi);
  cplx zin = 1.0 / (z * z);
  cplx p = 1.0 / z;
  for (int j = 1; j <= kStirlingTerms; ++j) {
    r += bernoulli_number(2 * j) / double(2 * j * (2 * j - 1)) * p;
    p *= zin;
  }
  return r + shift;
}

cplx log_lambda(cplx w, cplx eta) {
  if (std::imag(w) == 0.0 && std::real(w) <= 0.0)
    fail(ErrorCode::BranchCut, "log_lambda: w on the nonpositive real axis");
  cplx we = w + eta;
  if (std::abs(std::imag(we)) < 1e-12 && std::real(we) < 0.5 &&
      std::abs(we - std::round(std::real(we))) < 1e-12)
    fail(ErrorCode::PoleHit, "log_lambda: w+eta at a Gamma pole");
  return w + log_gamma(we) - 0.5 * std::log(2.0 * kPi) - (we - 0.5) * std::log(w);
}

cplx log_barnes_g(cplx w) {
  if (std::imag(w) == 0.0 && std::real(w) <= 0.0)
    fail(ErrorCode::BranchCut, "log_barnes_g on the nonpositive real axis");
  // log G(w) = log G(w+1) - log Gamma(w); shift until the asymptotic series
  // for log G(1+v) at v = w-1 is accurate.
  cplx shift = 0;
  while (std::real(w) < 24.0) {
    shift -= log_gamma(w);
    w += 1.0;
  }
  cplx v = w - 1.0;
  cplx lv = std::log(v);
  cplx r = 0.5 * v * v * lv - 0.75 * v * v + 0.5 * v * std::log(2.0 * kPi) - lv / 12.0 +
           kZetaPrimeMinusOne;
  // + sum_k B_{2k+2} / (2k (2k+2)) v^{-2k}
  cplx vin = 1.0 / (v * v);
  cplx p = vin;
  for (int k = 1; k <= kStirlingTerms; ++k) {
    r += bernoulli_number(2 * k + 2) / double(2 * k * (2 * k + 2)) * p;
    p *= vin;
  }
  return r + shift;
}

cplx log_upsilon(cplx w, cplx eta) {
  if (std::imag(w) == 0.0 && std::real(w) <= 0.0)
    fail(ErrorCode::BranchCut, "log_upsilon: w on the nonpositive real axis");
  cplx we1 = w + eta + 1.0;
  if (std::abs(std::imag(we1)) < 1e-12 && std::real(we1) < 0.5 &&
      std::abs(we1 - std::round(std::real(we1))) < 1e-12)
    fail(ErrorCode::PoleHit, "log_upsilon: w+eta+1 at a Barnes-G zero");
  cplx r = -kZetaPrimeMinusOne + 0.75 * w * w + log_barnes_g(we1) -
           0.5 * w * std::log(2.0 * kPi) - 0.5 * w * w * std::log(w);
  if (eta != cplx(0)) r -= eta * log_gamma(w + eta);
  return r;
}

cplx lambda_asym(cplx w, cplx eta, int order) {
  if (order < 0 || order + 1 > kBernoulliMaxOrder)
    fail(ErrorCode::OrderTooLarge, "lambda_asym order " + std::to_string(order));
  cplx r = 0, p = 1.0 / w;
  for (int k = 1; k <= order; ++k) {
    r += bernoulli_poly(k + 1, 1.0 - eta) / double(k * (k + 1)) * p;
    p /= w;
  }
  return r;
}

cplx upsilon_asym(cplx w, cplx eta, int order) {
  if (order < 0 || order + 1 > kBernoulliMaxOrder)
    fail(ErrorCode::OrderTooLarge, "upsilon_asym order " + std::to_string(order));
  cplx r = -0.5 * bernoulli_poly(2, eta) * std::log(w);
  cplx p = 1.0 / w;
  for (int k = 2; k <= order; ++k) {
    r += bernoulli_poly(k + 1, 1.0 - eta) / double((k - 1) * (k + 1)) * p;
    p /= w;
  }
  return r;
}

}  // namespace hgbps
