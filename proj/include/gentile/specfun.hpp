#ifndef GENTILE_SPECFUN_HPP
#define GENTILE_SPECFUN_HPP

namespace gentile::specfun {

// Working interval for the half-dimension alpha = D/2.
inline constexpr double kAlphaMin = 0.5;
inline constexpr double kAlphaMax = 1.5;

/// Gamma function for x > 0 (Lanczos approximation).
double gamma_fn(double x);

/// Riemann zeta for s > 1 (Euler-Maclaurin accelerated series).
double zeta_fn(double s);

/// Structural function f(alpha) = alpha^2 Gamma(alpha) zeta(1+alpha),
/// monotonically increasing on [1/2, 3/2].
double f_alpha(double alpha);

/// Numerical derivative of f_alpha: central difference with Richardson
/// extrapolation, absolute error target 1e-8. Requires alpha to be at
/// least the stencil width away from the interval ends.
double f_prime(double alpha);

enum class GMode { Integral, Approximation };

/// Entropy prefactor g(alpha) for 1/2 <= alpha < 1.
/// Integral mode evaluates [ int_0^inf (1/x - 1/(e^x-1)) d(x^alpha) ]^{1/alpha}
/// by adaptive quadrature; Approximation mode returns (alpha/(1-alpha))^{1/alpha}
/// and additionally requires alpha <= 1 - delta_guard.
double g_alpha(double alpha, GMode mode, double delta_guard = 0.1,
               double quad_rel_tol = 1e-8);

/// Case-2 unified-entropy prefactor h(alpha) = (alpha/(1+alpha1))^{1/(1-alpha1)}.
/// Requires alpha1 < 1.
double h_alpha(double alpha, double alpha1);

/// Diagnostic only: the variant with a (1-alpha1) denominator inside the
/// base, as it appears in the entropy-additivity relation before h is
/// introduced. The two printed forms disagree; both are exposed, neither
/// is silently corrected.
double h_alpha_one_minus_diagnostic(double alpha, double alpha1);

}  // namespace gentile::specfun

#endif
