#include "gentile/analysis.hpp"

#include <cmath>
#include <limits>

#include "gentile/errors.hpp"
#include "gentile/specfun.hpp"

namespace gentile {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

TransferReport build_transfer(const SystemState& s1_low,
                              const UnificationReport& u,
                              const SolverSettings& settings) {
  TransferReport t;
  t.q1 = q_factor(s1_low);
  t.no_flow_margin = no_flow_margin(s1_low);
  t.direction = transfer_direction(s1_low);
  t.Theta = s1_low.temperature - u.T_unified;
  t.Delta = u.alpha_unified - s1_low.alpha;

  SystemState s1 = s1_low;
  if (!s1.kappa) {
    try {
      s1.kappa = solve_kappa(s1.particle_count, s1.temperature, s1.alpha,
                             settings);
    } catch (const NoSolutionError& e) {
      t.warnings.push_back(std::string("chemical potential not solvable: ") +
                           e.what());
    }
  }

  if (s1.kappa) {
    t.kappa1 = *s1.kappa;
    const PerturbationCoefficients H = perturbation_coefficients(s1);
    t.H1 = H.H1;
    t.H2 = H.H2;
    t.H3 = H.H3;
    t.xi = xi_from_temperature_drop(s1, u.T_unified);
    try {
      t.lambda_value = lambda_transfer(H, t.Delta, t.xi);
    } catch (const NumericalError& e) {
      t.lambda_value = kNaN;
      t.warnings.push_back(e.what());
    }
    try {
      const auto [value, bound] = relative_transfer(s1, u.T_unified);
      t.relative_transfer = value;
      t.relative_lower_bound = bound;
    } catch (const std::exception& e) {
      t.relative_transfer = kNaN;
      t.relative_lower_bound = kNaN;
      t.warnings.push_back(std::string("relative transfer unavailable: ") +
                           e.what());
    }
  } else {
    t.kappa1 = kNaN;
    t.H1 = t.H2 = t.H3 = kNaN;
    t.xi = kNaN;
    t.lambda_value = kNaN;
    t.relative_transfer = kNaN;
    t.relative_lower_bound = kNaN;
  }

  try {
    t.delta_k = transfer_size(s1_low, u.T_unified);
  } catch (const std::exception& e) {
    t.delta_k = kNaN;
    t.warnings.push_back(std::string("transfer size unavailable: ") + e.what());
  }
  return t;
}

}  // namespace

AnalysisResult analyze_pair(const SystemState& s1_in, const SystemState& s2_in,
                            const SolverSettings& settings) {
  settings.validate();
  AnalysisResult out;
  out.regime = classify_regime(s1_in, s2_in);

  SystemState s1 = s1_in, s2 = s2_in;
  if (s2.alpha < s1.alpha ||
      (s2.alpha == s1.alpha && s2.temperature > s1.temperature)) {
    std::swap(s1, s2);
  }

  switch (out.regime.tag) {
    case RegimeTag::Case1SameSide: {
      out.unification = unify_case1(s1, s2, settings);
      out.transfer = build_transfer(s1, *out.unification, settings);
      break;
    }
    case RegimeTag::Case2Straddling: {
      out.unification = unify_case2(s1, s2, settings);
      out.warnings.push_back(
          "transfer analysis applies to the same-side case only; skipped for "
          "the straddling regime");
      break;
    }
    case RegimeTag::Unsupported:
      break;
  }
  if (out.unification) {
    for (const auto& w : out.unification->warnings) out.warnings.push_back(w);
  }
  if (out.transfer) {
    for (const auto& w : out.transfer->warnings) out.warnings.push_back(w);
  }
  return out;
}

}  // namespace gentile
