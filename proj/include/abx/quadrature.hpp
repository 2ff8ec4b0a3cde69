#pragma once

#include <functional>

namespace abx::quad {

struct QuadResult {
  double value = 0.0;
  double est_error = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a, b]. Splits the
/// interval with the largest error estimate until
/// sum(err) <= max(abs_tol, rel_tol * |sum(val)|) or the interval budget runs out.
/// Endpoints are never evaluated, so integrable endpoint singularities are fine.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-10, double rel_tol = 1e-10,
                     int max_intervals = 4000);

}  // namespace abx::quad
