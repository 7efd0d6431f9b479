#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace hgbps {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline const cplx kI{0.0, 1.0};
inline const cplx kTwoPiI{0.0, 2.0 * kPi};

// Angle tolerance for deciding whether a ray is BPS.
inline constexpr double kTolAngle = 1e-9;

// Wrap an angle into (-pi, pi].
inline double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  if (a > kPi) a -= 2.0 * kPi;
  return a;
}

// Wrap into [0, 2*pi).
inline double wrap_angle_02pi(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a < 0) a += 2.0 * kPi;
  return a;
}

// Signed angular distance from `a` to `b`, in (-pi, pi].
inline double angle_diff(double a, double b) { return wrap_angle(a - b); }

// True when z lies in the open half-plane {arg in (theta, theta+pi)}.
// `margin_out`, when given, receives the angular distance to the boundary.
inline bool in_half_plane(cplx z, double theta, double* margin_out = nullptr) {
  double d = wrap_angle_02pi(std::arg(z) - theta);
  double margin = std::min(d, 2.0 * kPi - d);
  margin = std::min(margin, std::abs(d - kPi));
  if (margin_out) *margin_out = margin;
  return d > 0.0 && d < kPi;
}

inline cplx pow_int(cplx z, long long n) {
  if (n < 0) return 1.0 / pow_int(z, -n);
  cplx r = 1.0, b = z;
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

inline bool near(cplx a, cplx b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

inline double rel_err(cplx got, cplx want) {
  double scale = std::max(1.0, std::abs(want));
  return std::abs(got - want) / scale;
}

// Deterministic RNG helpers for reproducible parameter draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(gen_);
  }
  cplx box(double re_lo, double re_hi, double im_lo, double im_hi) {
    return {uniform(re_lo, re_hi), uniform(im_lo, im_hi)};
  }
  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace hgbps
