#include "gentile/transfer.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gentile/errors.hpp"
#include "gentile/specfun.hpp"

namespace gentile {

const char* to_string(TransferDirection d) {
  switch (d) {
    case TransferDirection::IntoSystem1: return "IntoSystem1";
    case TransferDirection::OutOfSystem1: return "OutOfSystem1";
    case TransferDirection::None: return "None";
  }
  return "?";
}

double q_factor(const SystemState& s1) {
  s1.validate();
  return specfun::f_prime(s1.alpha) / specfun::f_alpha(s1.alpha) +
         std::log(s1.temperature);
}

double temperature_dimension_link(const SystemState& s1,
                                  double alpha_unified) {
  const double q1 = q_factor(s1);
  return s1.temperature -
         (alpha_unified - s1.alpha) * s1.temperature * q1 / s1.alpha;
}

PerturbationCoefficients perturbation_coefficients(const SystemState& s1) {
  s1.validate();
  if (!s1.kappa) {
    throw std::invalid_argument(
        "perturbation_coefficients: kappa is not set (run solve_kappa first)");
  }
  const double a1 = s1.alpha;
  const double T1 = s1.temperature;
  const double k1 = s1.particle_count;
  const double kappa1 = *s1.kappa;
  const double q1 = q_factor(s1);

  PerturbationCoefficients H;
  H.H1 = (k1 * kappa1 / T1 - (a1 - 1.0)) / k1;
  H.H2 = (k1 * kappa1 / T1 - a1) / kappa1;
  H.H3 = (1.0 - (a1 - 1.0) / a1 * q1) * std::log(k1) +
         (1.0 - q1) * std::log(kappa1);
  return H;
}

double lambda_transfer(const PerturbationCoefficients& H, double Delta,
                       double xi, double h1_tol) {
  if (!(Delta >= 0.0)) {
    throw std::domain_error("lambda_transfer: Delta must be >= 0");
  }
  if (std::abs(H.H1) < h1_tol) {
    std::ostringstream os;
    os << "lambda_transfer: |H1| = " << std::abs(H.H1) << " below " << h1_tol
       << "; the transfer formula is singular";
    throw NumericalError(os.str());
  }
  return (H.H3 * Delta - H.H2 * xi) / H.H1;
}

double xi_from_temperature_drop(const SystemState& s1, double T_unified) {
  s1.validate();
  const double S1 = specfun::f_alpha(s1.alpha) *
                    std::pow(s1.temperature, s1.alpha);
  return 2.0 * s1.alpha * S1 * (T_unified - s1.temperature) /
         s1.particle_count;
}

double no_flow_margin(const SystemState& s1) {
  s1.validate();
  return s1.alpha * specfun::f_alpha(s1.alpha) *
             std::pow(s1.temperature, s1.alpha) -
         std::log(s1.particle_count);
}

double no_flow_dead_band(const SystemState& s1, double scale) {
  // The margin is a difference of large quantities; an exact zero is
  // measure-zero, so "on the manifold" means within this band.
  const double lead = s1.alpha * specfun::f_alpha(s1.alpha) *
                      std::pow(s1.temperature, s1.alpha);
  return scale * std::max(1.0, lead);
}

TransferDirection transfer_direction(const SystemState& s1) {
  const double m = no_flow_margin(s1);
  const double band = no_flow_dead_band(s1);
  if (m > band) return TransferDirection::IntoSystem1;
  if (m < -band) return TransferDirection::OutOfSystem1;
  return TransferDirection::None;
}

double transfer_size(const SystemState& s1, double T_unified) {
  s1.validate();
  const double T1 = s1.temperature;
  if (!(T_unified <= T1)) {
    throw std::invalid_argument(
        "transfer_size: requires T_unified <= T1 (the low-dimension system "
        "cools under unification)");
  }
  if (T_unified < T1 && no_flow_margin(s1) < -no_flow_dead_band(s1)) {
    throw std::invalid_argument(
        "transfer_size: formula derived for the margin > 0 regime; the "
        "no-flow margin is negative here");
  }
  const double a1 = s1.alpha;
  const double f1 = specfun::f_alpha(a1);
  const double k1 = s1.particle_count;
  return k1 * (T1 - T_unified) *
         (2.0 * a1 * f1 * std::pow(T1, a1) + (a1 - 1.0) * std::log(k1)) /
         (f1 * std::pow(T1, a1 + 1.0));
}

std::pair<double, double> relative_transfer(const SystemState& s1,
                                            double T_unified) {
  s1.validate();
  const double T1 = s1.temperature;
  if (!(T_unified <= T1)) {
    throw std::invalid_argument("relative_transfer: requires T_unified <= T1");
  }
  const double a1 = s1.alpha;
  const double ln_k1 = std::log(s1.particle_count);
  const double kappa1 =
      s1.kappa ? *s1.kappa : solve_kappa(s1.particle_count, T1, a1);
  const double ln_kappa1 = std::log(kappa1);
  if (!(ln_kappa1 > 0.0) || ln_k1 < 0.0) {
    throw std::domain_error(
        "relative_transfer: requires ln(kappa1) > 0 and ln(k1) >= 0");
  }
  const double denom = (a1 - 1.0) * ln_k1 + a1 * ln_kappa1;
  if (denom == 0.0) {
    throw NumericalError("relative_transfer: zero denominator");
  }
  const double drop = (T1 - T_unified) / T1;
  const double value = drop *
                       ((2.0 * a1 + 1.0) * (a1 - 1.0) * ln_k1 +
                        2.0 * a1 * a1 * ln_kappa1) /
                       denom;
  const double lower_bound = 2.0 * a1 * drop;
  return {value, lower_bound};
}

double kappa_asymptotic_threehalves(double T) {
  if (!(T > std::exp(1.0))) {
    throw std::domain_error("kappa_asymptotic_threehalves: requires T > e");
  }
  return 1.5 * T * std::log(T);
}

double gibbs_duhem_dG(const SystemState& s, double dT) {
  s.validate();
  if (s.alpha < 1.0) {
    throw std::domain_error(
        "gibbs_duhem_dG: chain derived from the alpha >= 1 entropy branch");
  }
  const double S = specfun::f_alpha(s.alpha) * std::pow(s.temperature, s.alpha);
  return -2.0 * s.alpha * S * dT;
}

AlphaFScan scan_alpha_f(double lo, double hi, int steps) {
  if (!(lo >= 1.0 && hi <= specfun::kAlphaMax && lo <= hi)) {
    throw std::domain_error("scan_alpha_f: range must lie within [1, 3/2]");
  }
  if (steps < 1) {
    throw std::domain_error("scan_alpha_f: steps must be >= 1");
  }
  AlphaFScan scan;
  for (int i = 0; i <= steps; ++i) {
    const double a = lo + (hi - lo) * i / steps;
    const double v = a * specfun::f_alpha(a);
    scan.table.emplace_back(a, v);
    if (i == 0 || v < scan.min) scan.min = v;
    if (i == 0 || v > scan.max) scan.max = v;
  }
  return scan;
}

}  // namespace gentile
