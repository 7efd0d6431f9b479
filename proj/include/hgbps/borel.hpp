#pragma once

#include <functional>

#include "hgbps/series.hpp"

namespace hgbps {

struct BorelContext {
  BpsStructure structure;
  double theta;  // Borel/Laplace ray angle, must be non-BPS

  static BorelContext make(const SpectralCurve& curve, double theta);
};

// Closed-form Borel sum of the path Voros symbol S_l e^{V_beta}(hbar) as the
// Lambda-product over active classes with Z in i H_l; log value.
cplx log_borel_sum_path_symbol(const BorelContext& ctx, const LatticeElement& beta, cplx hbar);
cplx borel_sum_path_symbol(const BorelContext& ctx, const LatticeElement& beta, cplx hbar);

// Closed-form Borel transform \hat V_beta(zeta) for the Weber and Bessel
// curves (the printed transforms); zeta -> 0 limit equals V_{beta,1}.
cplx borel_transform(const SpectralCurve& curve, const LatticeElement& beta, cplx zeta);

struct QuadratureResult {
  cplx value;
  double error_estimate;
};

// Laplace integral int_0^{inf e^{i theta}} f(zeta) e^{-zeta/hbar} dzeta with
// adaptive Gauss-Kronrod panels; target 1e-10 absolute.
QuadratureResult laplace_quadrature(const std::function<cplx(cplx)>& transform, double theta,
                                    cplx hbar, double abs_tol = 1e-10);

// Convenience: quadrature Borel sum of V_beta for Web/Bes.
QuadratureResult borel_sum_quadrature(const BorelContext& ctx, const LatticeElement& beta,
                                      cplx hbar);

}  // namespace hgbps
