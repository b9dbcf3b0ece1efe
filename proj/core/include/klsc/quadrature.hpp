#pragma once

#include <functional>

namespace klsc {

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_segments = 20000;
  int max_depth = 100;
};

/// Defaults, honoring the KLSC_QUAD_TOL environment variable (sets abs_tol,
/// and rel_tol = 100 * abs_tol) when it is set to a positive value.
const QuadratureOptions& default_quadrature_options();

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b].  Either
/// endpoint may be +infinity.  Endpoint singularities are resolved by
/// repeated bisection toward the endpoint; non-integrable endpoint behavior
/// raises DivergentIntegral, an exhausted budget raises ToleranceNotMet.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts = default_quadrature_options());

}  // namespace klsc
