#pragma once

#include <vector>

#include "hgbps/numeric.hpp"

namespace hgbps {

// zeta'(-1) = 1/12 - log A (Glaisher-Kinkelin), to 20 digits.
inline constexpr double kZetaPrimeMinusOne = -0.16542114370045092921;

inline constexpr int kBernoulliMaxOrder = 64;

// Bernoulli number B_k (B_1 = -1/2 convention), exact-rational construction
// converted to double.
double bernoulli_number(int k);

// Coefficients of the Bernoulli polynomial B_k(t), index j = coefficient of t^j.
const std::vector<double>& bernoulli_poly_coeffs(int k);

// B_k(t) for complex t.
cplx bernoulli_poly(int k, cplx t);

// Principal-branch log Gamma on C minus the nonpositive reals, continuous in
// each half-plane Im z >< 0 and real on the positive axis.
cplx log_gamma(cplx z);

// log Lambda(w, eta) with Lambda(w,eta) = e^w Gamma(w+eta) / (sqrt(2 pi) w^(w+eta-1/2)).
cplx log_lambda(cplx w, cplx eta);

// log of the Barnes G-function, normalized by G(1) = 1.
cplx log_barnes_g(cplx w);

// log Upsilon(w, eta) built from Barnes G:
//   Upsilon = e^{-zeta'(-1)} e^{3w^2/4} G(w+eta+1) / ((2 pi)^{w/2} w^{w^2/2} Gamma(w+eta)^eta).
cplx log_upsilon(cplx w, cplx eta);

// Partial sums of the asymptotic series:
//   log Lambda(w,eta) ~ sum_{k>=1} B_{k+1}(1-eta) / (k (k+1)) w^{-k}
cplx lambda_asym(cplx w, cplx eta, int order);

//   log Upsilon(w,eta) ~ -B_2(eta)/2 log w + sum_{k>=2} B_{k+1}(1-eta)/((k-1)(k+1)) w^{1-k}
cplx upsilon_asym(cplx w, cplx eta, int order);

}  // namespace hgbps
