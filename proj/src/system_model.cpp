#include "gentile/system_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gentile/errors.hpp"
#include "gentile/specfun.hpp"

namespace gentile {

using specfun::kAlphaMax;
using specfun::kAlphaMin;

void SystemState::validate() const {
  if (!std::isfinite(alpha) || alpha < kAlphaMin || alpha > kAlphaMax) {
    std::ostringstream os;
    os << "SystemState: alpha = " << alpha << " outside [1/2, 3/2]";
    throw std::domain_error(os.str());
  }
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw std::domain_error("SystemState: temperature must be finite and > 0");
  }
  if (!(particle_count >= 1.0) || !std::isfinite(particle_count)) {
    throw std::domain_error("SystemState: particle_count must be >= 1");
  }
  if (kappa && !(*kappa > 0.0)) {
    throw std::domain_error("SystemState: kappa must be > 0 when present");
  }
}

void SolverSettings::validate() const {
  if (!(root_tol > 0.0) || !(quad_rel_tol > 0.0) || !(delta_guard > 0.0) ||
      !(asymptotic_T_min > 0.0)) {
    throw std::domain_error("SolverSettings: all tolerances must be positive");
  }
  if (max_iter < 10) {
    throw std::domain_error("SolverSettings: max_iter must be >= 10");
  }
}

const char* to_string(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::Case1SameSide: return "Case1SameSide";
    case RegimeTag::Case2Straddling: return "Case2Straddling";
    case RegimeTag::Unsupported: return "Unsupported";
  }
  return "?";
}

double energy_of(const SystemState& s) {
  s.validate();
  return specfun::f_alpha(s.alpha) * std::pow(s.temperature, 1.0 + s.alpha);
}

bool entropy_is_interpolated(double alpha, double delta_guard) {
  return alpha > 1.0 - delta_guard && alpha < 1.0;
}

double entropy_of(const SystemState& s, double delta_guard) {
  s.validate();
  const double a = s.alpha;
  const double T = s.temperature;
  if (a >= 1.0) {
    return specfun::f_alpha(a) * std::pow(T, a);
  }
  const double a_lo = 1.0 - delta_guard;
  auto low_branch = [&](double alpha) {
    const double g = specfun::g_alpha(alpha, specfun::GMode::Approximation,
                                      delta_guard);
    return g * std::pow(T, (1.0 + alpha) / alpha);
  };
  if (a <= a_lo) {
    return low_branch(a);
  }
  // Near-critical band: log-linear interpolation in alpha between the
  // g-branch at 1 - delta and the continuity anchor f(1) T at alpha = 1.
  const double w = (a - a_lo) / delta_guard;
  const double ln_lo = std::log(low_branch(a_lo));
  const double ln_hi = std::log(specfun::f_alpha(1.0) * T);
  return std::exp((1.0 - w) * ln_lo + w * ln_hi);
}

double solve_kappa(double k, double T, double alpha,
                   const SolverSettings& settings) {
  settings.validate();
  if (!(k >= 1.0) || !(T > 0.0)) {
    throw std::domain_error("solve_kappa: requires k >= 1 and T > 0");
  }
  if (alpha < kAlphaMin || alpha > kAlphaMax) {
    throw std::domain_error("solve_kappa: alpha outside [1/2, 3/2]");
  }
  const double ln_k = std::log(k);
  auto residual = [&](double kappa) {
    return k * kappa - T * ((alpha - 1.0) * ln_k + alpha * std::log(kappa));
  };

  // Geometric bracketing scan; keep the *last* sign change so the larger
  // (asymptotically growing, Eq.-of-state consistent) root is selected.
  const double kappa_max = std::max(10.0, 10.0 * alpha * T * std::log(10.0 * T));
  const int n_scan = 400;
  const double ratio = std::pow(kappa_max, 1.0 / n_scan);
  double lo = 0.0, hi = 0.0;
  double prev_x = 1.0;
  double prev_r = residual(1.0);
  std::vector<std::pair<double, double>> curve;
  curve.emplace_back(prev_x, prev_r);
  double x = 1.0;
  for (int i = 1; i <= n_scan; ++i) {
    x *= ratio;
    const double r = residual(x);
    curve.emplace_back(x, r);
    if ((prev_r <= 0.0) != (r <= 0.0)) {
      lo = prev_x;
      hi = x;
    }
    prev_x = x;
    prev_r = r;
  }
  if (hi == 0.0) {
    std::ostringstream os;
    os << "solve_kappa: no root with kappa > 1 in [1, " << kappa_max
       << "] (k=" << k << ", T=" << T << ", alpha=" << alpha << ")";
    throw NoSolutionError(os.str(), std::move(curve));
  }

  double r_lo = residual(lo);
  for (int i = 0; i < settings.max_iter; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double r_mid = residual(mid);
    if ((r_lo <= 0.0) == (r_mid <= 0.0)) {
      lo = mid;
      r_lo = r_mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-12 * hi) break;
  }
  double kappa = 0.5 * (lo + hi);
  // Newton polish on r(kappa) = k*kappa - T[(a-1)ln k + a ln kappa].
  for (int i = 0; i < 8; ++i) {
    const double r = residual(kappa);
    const double dr = k - T * alpha / kappa;
    if (dr == 0.0) break;
    const double step = r / dr;
    const double next = kappa - step;
    if (!(next > 0.0)) break;
    kappa = next;
    if (std::abs(step) < 1e-15 * kappa) break;
  }
  const double tol = settings.root_tol * std::max(1.0, k * kappa);
  if (std::abs(residual(kappa)) > tol) {
    std::ostringstream os;
    os << "solve_kappa: refinement stalled, |residual| = "
       << std::abs(residual(kappa)) << " > " << tol;
    throw NumericalError(os.str());
  }
  return kappa;
}

double gibbs_of(const SystemState& s) {
  s.validate();
  if (!s.kappa) {
    throw std::invalid_argument("gibbs_of: kappa is not set");
  }
  return -s.particle_count * (*s.kappa);
}

Regime classify_regime(const SystemState& s1, const SystemState& s2) {
  s1.validate();
  s2.validate();
  const double a1 = std::min(s1.alpha, s2.alpha);
  const double a2 = std::max(s1.alpha, s2.alpha);
  std::ostringstream os;
  if (a1 > 1.0 && a2 <= kAlphaMax) {
    os << "1 < " << a1 << " <= " << a2 << " <= 3/2";
    return {RegimeTag::Case1SameSide, os.str()};
  }
  if (a1 < 1.0 && a2 > 1.0) {
    if (a2 < 1.0 + 1.0 / a1) {
      os << a1 << " < 1 < " << a2 << ", and " << a2 << " < 1 + 1/alpha1 = "
         << 1.0 + 1.0 / a1;
      return {RegimeTag::Case2Straddling, os.str()};
    }
    os << "straddling but alpha2 = " << a2
       << " >= 1 + 1/alpha1; no supported case";
    return {RegimeTag::Unsupported, os.str()};
  }
  if (a1 == 1.0 || a2 == 1.0) {
    os << "a dimension sits exactly at the phase-transition point alpha = 1";
  } else {
    os << "both dimensions on the low side of alpha = 1 (" << a1 << ", " << a2
       << "); no supported case";
  }
  return {RegimeTag::Unsupported, os.str()};
}

}  // namespace gentile
