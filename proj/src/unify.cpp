#include "gentile/unify.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "gentile/errors.hpp"
#include "gentile/specfun.hpp"

namespace gentile {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Canonical order: system 1 is the one with the smaller half-dimension
// (ties broken by higher temperature), so swapped inputs give identical
// reports.
void order_pair(SystemState& s1, SystemState& s2) {
  if (s2.alpha < s1.alpha ||
      (s2.alpha == s1.alpha && s2.temperature > s1.temperature)) {
    std::swap(s1, s2);
  }
}

// Literal left-side entropy term of the case-2 additivity relation for the
// low-dimension system: (a/(1-a))^{1/a} T^{(1+a)/a}.
double case2_low_term(const SystemState& s) {
  const double a = s.alpha;
  return std::pow(a / (1.0 - a), 1.0 / a) *
         std::pow(s.temperature, (1.0 + a) / a);
}

double case1_term(const SystemState& s) {
  return specfun::f_alpha(s.alpha) * std::pow(s.temperature, s.alpha);
}

void warn_if_cold(const SystemState& s, const SolverSettings& settings,
                  const char* label, std::vector<std::string>& warnings) {
  if (s.temperature < settings.asymptotic_T_min) {
    std::ostringstream os;
    os << label << " temperature " << s.temperature
       << " is below asymptotic_T_min = " << settings.asymptotic_T_min
       << "; the asymptotic relations assume large T";
    warnings.push_back(os.str());
  }
}

}  // namespace

UnificationReport unify_case1(const SystemState& s1_in, const SystemState& s2_in,
                              const SolverSettings& settings) {
  settings.validate();
  const Regime regime = classify_regime(s1_in, s2_in);
  if (regime.tag != RegimeTag::Case1SameSide) {
    throw std::invalid_argument(
        "unify_case1: regime is " + std::string(to_string(regime.tag)) +
        " (" + regime.detail + ")");
  }
  SystemState s1 = s1_in, s2 = s2_in;
  order_pair(s1, s2);

  UnificationReport r;
  r.regime = regime;
  warn_if_cold(s1, settings, "system 1", r.warnings);
  warn_if_cold(s2, settings, "system 2", r.warnings);

  r.tau = 0.5 * (s1.temperature + s2.temperature);
  r.T_unified = r.tau;
  r.alpha_unified = 0.5 * (s1.alpha + s2.alpha);
  r.T_deviation_estimate = kNaN;

  const SystemState unified{r.alpha_unified, r.T_unified, 1.0, std::nullopt};
  r.E_unified = energy_of(unified);
  r.S_unified = entropy_of(unified, settings.delta_guard);

  const double E_sum = energy_of(s1) + energy_of(s2);
  const double S1 = case1_term(s1);
  const double S2 = case1_term(s2);
  const double S_sum = S1 + S2;
  r.energy_residual = (E_sum - 2.0 * r.E_unified) / E_sum;
  r.entropy_residual = (S_sum - 2.0 * r.S_unified) / S_sum;
  r.entropy_contributions = {S1 / S_sum, S2 / S_sum};

  r.ordering_ok = s2.temperature <= r.T_unified &&
                  r.T_unified <= s1.temperature &&
                  s1.alpha <= r.alpha_unified && r.alpha_unified <= s2.alpha;

  // Exact solution of the additivity pair: dividing the energy equation by
  // the entropy equation eliminates alpha, giving T* = E_sum/S_sum; alpha*
  // then solves 2 f(a) T*^a = S_sum, monotone in a for T* > 1.
  r.refined_T = E_sum / S_sum;
  auto entropy_eq = [&](double a) {
    return 2.0 * specfun::f_alpha(a) * std::pow(r.refined_T, a) - S_sum;
  };
  double lo = specfun::kAlphaMin, hi = specfun::kAlphaMax;
  double rlo = entropy_eq(lo), rhi = entropy_eq(hi);
  if ((rlo <= 0.0) == (rhi <= 0.0)) {
    r.refined_alpha = r.alpha_unified;
    r.refined_converged = false;
    r.warnings.push_back(
        "refined additivity solve: no alpha in [1/2, 3/2] satisfies the "
        "entropy equation at T* = E/S; closed forms reported without "
        "refinement");
  } else {
    for (int i = 0; i < settings.max_iter; ++i) {
      const double mid = 0.5 * (lo + hi);
      const double rm = entropy_eq(mid);
      if ((rlo <= 0.0) == (rm <= 0.0)) {
        lo = mid;
        rlo = rm;
      } else {
        hi = mid;
      }
      if (hi - lo < settings.root_tol) break;
    }
    r.refined_alpha = 0.5 * (lo + hi);
    r.refined_converged = true;
  }
  return r;
}

UnificationReport unify_case2(const SystemState& s1_in, const SystemState& s2_in,
                              const SolverSettings& settings) {
  settings.validate();
  const Regime regime = classify_regime(s1_in, s2_in);
  if (regime.tag != RegimeTag::Case2Straddling) {
    throw std::invalid_argument(
        "unify_case2: regime is " + std::string(to_string(regime.tag)) +
        " (" + regime.detail + ")");
  }
  SystemState s1 = s1_in, s2 = s2_in;
  order_pair(s1, s2);
  const double a1 = s1.alpha;
  const double a2 = s2.alpha;

  UnificationReport r;
  r.regime = regime;
  warn_if_cold(s1, settings, "system 1", r.warnings);
  warn_if_cold(s2, settings, "system 2", r.warnings);

  r.tau = 0.5 * (s1.temperature + s2.temperature);
  const double ln_tau = std::log(r.tau);
  const double E_sum = energy_of(s1) + energy_of(s2);

  auto T_of = [&](double a) {
    return std::pow(r.tau, (1.0 + a1) / (a * a1));
  };
  auto residual = [&](double a) {
    return E_sum - 2.0 * specfun::f_alpha(a) * std::pow(T_of(a), 1.0 + a);
  };

  // Bracket the single unknown alpha inside (a1, a2).
  const int n_scan = 256;
  const double eps = 1e-9 * (a2 - a1);
  double lo = 0.0, hi = 0.0;
  double prev_x = a1 + eps;
  double prev_r = residual(prev_x);
  std::vector<std::pair<double, double>> curve;
  curve.emplace_back(prev_x, prev_r);
  for (int i = 1; i <= n_scan; ++i) {
    const double x = a1 + eps + (a2 - a1 - 2.0 * eps) * i / n_scan;
    const double res = residual(x);
    curve.emplace_back(x, res);
    if (lo == 0.0 && hi == 0.0 && (prev_r <= 0.0) != (res <= 0.0)) {
      lo = prev_x;
      hi = x;
    }
    prev_x = x;
    prev_r = res;
  }
  if (hi == 0.0) {
    std::ostringstream os;
    os << "unify_case2: energy-additivity residual has no root in ("
       << a1 << ", " << a2 << "); tau = " << r.tau
       << ", E1+E2 = " << E_sum;
    throw NoSolutionError(os.str(), std::move(curve));
  }
  double rlo = residual(lo);
  for (int i = 0; i < settings.max_iter; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double rm = residual(mid);
    if ((rlo <= 0.0) == (rm <= 0.0)) {
      lo = mid;
      rlo = rm;
    } else {
      hi = mid;
    }
    if (hi - lo < settings.root_tol) break;
  }
  const double a_u = 0.5 * (lo + hi);

  r.alpha_unified = a_u;
  r.T_unified = T_of(a_u);
  r.S_unified = specfun::h_alpha(a_u, a1) * std::pow(r.T_unified, a_u);
  r.E_unified = 0.5 * E_sum;  // energy additivity pinned alpha, so exact

  const double exponent = (1.0 + a1) / (a_u * a1);
  r.exponent_condition_ok = exponent < 1.0;
  r.T_deviation_estimate = -exponent * ln_tau;  // printed-form estimate

  const double lhs1 = case2_low_term(s1);
  const double lhs2 = case1_term(s2);
  r.entropy_residual = (lhs1 + lhs2 - r.S_unified) / (lhs1 + lhs2);
  r.energy_residual = residual(a_u) / E_sum;
  r.entropy_contributions = {lhs1 / (lhs1 + lhs2), lhs2 / (lhs1 + lhs2)};

  r.ordering_ok = s2.temperature <= r.T_unified &&
                  r.T_unified <= s1.temperature && a1 <= a_u && a_u <= a2;

  if (!r.exponent_condition_ok) {
    std::ostringstream os;
    os << "printed exponent condition (1+alpha1)/(alpha*alpha1) < 1 fails at "
          "the returned alpha (exponent = "
       << exponent << "); with it, T < tau cannot hold as printed";
    r.warnings.push_back(os.str());
  }
  if (!(r.T_unified < r.tau)) {
    r.warnings.push_back("unified temperature is not below tau");
  }
  if (!(a_u > 0.5 * (a1 + a2))) {
    r.warnings.push_back(
        "unified dimension is not above the arithmetic mean of the inputs");
  }
  if (entropy_is_interpolated(a1, settings.delta_guard)) {
    r.warnings.push_back(
        "alpha1 lies in the near-critical guard band; the literal g-term in "
        "the entropy budget is outside its stated validity range");
  }
  return r;
}

EntropyBudget entropy_budget(const SystemState& s1_in, const SystemState& s2_in,
                             const UnificationReport& report) {
  SystemState s1 = s1_in, s2 = s2_in;
  order_pair(s1, s2);
  EntropyBudget b;
  if (report.regime.tag == RegimeTag::Case2Straddling) {
    b.entropy1 = case2_low_term(s1);
    b.entropy2 = case1_term(s2);
  } else {
    b.entropy1 = case1_term(s1);
    b.entropy2 = case1_term(s2);
  }
  const double total = b.entropy1 + b.entropy2;
  b.share1 = b.entropy1 / total;
  b.share2 = b.entropy2 / total;
  return b;
}

}  // namespace gentile
