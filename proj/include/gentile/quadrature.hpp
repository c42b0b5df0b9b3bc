#ifndef GENTILE_QUADRATURE_HPP
#define GENTILE_QUADRATURE_HPP

#include <functional>

namespace gentile {

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Adaptive Gauss-Kronrod (G7/K15) on a finite interval.
/// Converges when the accumulated error estimate satisfies either the
/// relative or the absolute tolerance.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double rel_tol, double abs_tol = 0.0,
                              int max_depth = 50);

}  // namespace gentile

#endif
