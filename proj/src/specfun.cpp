#include "gentile/specfun.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gentile/errors.hpp"
#include "gentile/quadrature.hpp"

namespace gentile::specfun {
namespace {

void require_alpha_interval(double alpha, const char* who) {
  if (!(alpha >= kAlphaMin && alpha <= kAlphaMax) || !std::isfinite(alpha)) {
    std::ostringstream os;
    os << who << ": alpha = " << alpha << " outside [" << kAlphaMin << ", "
       << kAlphaMax << "]";
    throw std::domain_error(os.str());
  }
}

// Lanczos coefficients, g = 7, n = 9 (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,   -1259.1392167224028,
    771.32342877765313,      -176.61502916214059, 12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,
    1.5056327351493116e-7};

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("gamma_fn: requires finite x > 0");
  }
  // Shift into the region where the Lanczos series is accurate.
  if (x < 0.5) {
    // Not reached by library callers (they need [1/2, 5/2]); recurrence
    // keeps the function total on (0, inf).
    return gamma_fn(x + 1.0) / x;
  }
  const double z = x - 1.0;
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

double zeta_fn(double s) {
  if (!(s > 1.0) || !std::isfinite(s)) {
    throw std::domain_error("zeta_fn: requires finite s > 1");
  }
  // Euler-Maclaurin: direct sum to N, then tail corrections.
  constexpr int N = 20;
  double sum = 0.0;
  for (int n = 1; n < N; ++n) sum += std::pow(n, -s);
  const double Ns = std::pow(N, -s);
  sum += Ns * N / (s - 1.0);  // N^{1-s}/(s-1)
  sum += 0.5 * Ns;

  // Bernoulli numbers B_2, B_4, ..., B_12.
  constexpr double kB2k[6] = {1.0 / 6.0,  -1.0 / 30.0, 1.0 / 42.0,
                              -1.0 / 30.0, 5.0 / 66.0,  -691.0 / 2730.0};
  for (int k = 1; k <= 6; ++k) {
    // B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{1-s-2k}
    double fact = 1.0;
    for (int j = 2; j <= 2 * k; ++j) fact *= j;
    double rising = 1.0;
    for (int j = 0; j <= 2 * k - 2; ++j) rising *= (s + j);
    sum += kB2k[k - 1] / fact * rising * std::pow(N, 1.0 - s - 2 * k);
  }
  return sum;
}

double f_alpha(double alpha) {
  require_alpha_interval(alpha, "f_alpha");
  return alpha * alpha * gamma_fn(alpha) * zeta_fn(1.0 + alpha);
}

double f_prime(double alpha) {
  constexpr double h = 1e-3;
  if (!(alpha - h >= kAlphaMin && alpha + h <= kAlphaMax)) {
    throw std::domain_error(
        "f_prime: alpha too close to the interval ends for the stencil");
  }
  auto central = [&](double step) {
    return (f_alpha(alpha + step) - f_alpha(alpha - step)) / (2.0 * step);
  };
  const double d1 = central(h);
  const double d2 = central(h / 2.0);
  return (4.0 * d2 - d1) / 3.0;  // Richardson, kills the h^2 term
}

double g_alpha(double alpha, GMode mode, double delta_guard,
               double quad_rel_tol) {
  if (!std::isfinite(alpha) || !(alpha >= kAlphaMin) || !(alpha < 1.0)) {
    throw std::domain_error("g_alpha: requires alpha in [1/2, 1)");
  }
  if (mode == GMode::Approximation) {
    if (alpha > 1.0 - delta_guard) {
      std::ostringstream os;
      os << "g_alpha: approximation mode requires alpha <= 1 - delta ("
         << 1.0 - delta_guard << "), got " << alpha;
      throw std::domain_error(os.str());
    }
    return std::pow(alpha / (1.0 - alpha), 1.0 / alpha);
  }

  // Integral mode. Substituting u = x^alpha removes the endpoint
  // singularity: the integrand 1/x - 1/(e^x - 1) tends to 1/2 as x -> 0.
  // Beyond X = 50 the Bose term is below 2e-22 and the remaining
  // 1/x piece integrates in closed form: alpha X^{alpha-1}/(1-alpha).
  const double X = 50.0;
  auto phi = [](double x) {
    if (x < 1e-4) {
      // Series: 1/x - 1/(e^x-1) = 1/2 - x/12 + x^3/720 - ...
      return 0.5 - x / 12.0 + x * x * x / 720.0;
    }
    return 1.0 / x - 1.0 / std::expm1(x);
  };
  auto integrand = [&](double u) {
    const double x = std::pow(u, 1.0 / alpha);
    return phi(x);
  };
  const QuadResult q = integrate_adaptive(integrand, 0.0, std::pow(X, alpha),
                                          quad_rel_tol * 0.1);
  if (!q.converged) {
    std::ostringstream os;
    os << "g_alpha: quadrature did not converge (alpha=" << alpha
       << ", estimate=" << q.value << ", abs_error=" << q.abs_error
       << ", evaluations=" << q.evaluations << ")";
    throw NumericalError(os.str());
  }
  const double tail = alpha * std::pow(X, alpha - 1.0) / (1.0 - alpha);
  return std::pow(q.value + tail, 1.0 / alpha);
}

double h_alpha(double alpha, double alpha1) {
  if (!(alpha1 < 1.0)) {
    throw std::domain_error("h_alpha: requires alpha1 < 1 (case-2 lower system)");
  }
  require_alpha_interval(alpha1, "h_alpha");
  if (!(alpha >= alpha1 && alpha <= kAlphaMax)) {
    throw std::domain_error("h_alpha: requires alpha in [alpha1, 3/2]");
  }
  return std::pow(alpha / (1.0 + alpha1), 1.0 / (1.0 - alpha1));
}

double h_alpha_one_minus_diagnostic(double alpha, double alpha1) {
  if (!(alpha1 < 1.0)) {
    throw std::domain_error("h_alpha_one_minus_diagnostic: requires alpha1 < 1");
  }
  return std::pow(alpha / (1.0 - alpha1), 1.0 / (1.0 - alpha1));
}

}  // namespace gentile::specfun
