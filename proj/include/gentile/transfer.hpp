#ifndef GENTILE_TRANSFER_HPP
#define GENTILE_TRANSFER_HPP

#include <utility>
#include <vector>

#include "gentile/system_model.hpp"

namespace gentile {

enum class TransferDirection { IntoSystem1, OutOfSystem1, None };

const char* to_string(TransferDirection d);

struct PerturbationCoefficients {
  double H1 = 0.0;
  double H2 = 0.0;
  double H3 = 0.0;
};

/// q1 = f'(alpha1)/f(alpha1) + ln T1.
double q_factor(const SystemState& s1);

/// Unified temperature implied by a dimension shift:
/// T = T1 - (alpha - alpha1) T1 q1 / alpha1.
double temperature_dimension_link(const SystemState& s1, double alpha_unified);

/// The linearization coefficients of the particle-number balance.
/// H2's printed definition carries a mismatched bracket; it is implemented
/// as (k1 kappa1 / T1 - alpha1)/kappa1 by symmetry with H1.
PerturbationCoefficients perturbation_coefficients(const SystemState& s1);

/// lambda = (H3 * Delta - H2 * xi) / H1 -- the perturbative change in the
/// particle count of system 1. Throws when |H1| is below tolerance.
double lambda_transfer(const PerturbationCoefficients& H, double Delta,
                       double xi, double h1_tol = 1e-12);

/// Chemical-potential shift from the Gibbs-Duhem chain at fixed k:
/// d(kappa) = -dG/k with dG = -2 alpha S dT, so xi = 2 alpha1 S1 (T - T1)/k1.
/// One consistent closure for lambda_transfer's xi input.
double xi_from_temperature_drop(const SystemState& s1, double T_unified);

/// No-flow margin M = alpha1 f(alpha1) T1^{alpha1} - ln k1.
double no_flow_margin(const SystemState& s1);

/// Dead band under which the margin counts as "on the manifold".
double no_flow_dead_band(const SystemState& s1, double scale = 1e-6);

TransferDirection transfer_direction(const SystemState& s1);

/// Transfer size k - k1 for the margin > 0 regime; requires T_unified < T1.
double transfer_size(const SystemState& s1, double T_unified);

/// Relative transfer (k-k1)/k1 and its lower bound 2 alpha1 (T1-T)/T1.
/// Requires kappa1 (set or solvable) with ln kappa1 and ln k1 positive.
std::pair<double, double> relative_transfer(const SystemState& s1,
                                            double T_unified);

/// Leading term (3/2) T ln T of the chemical potential at alpha = 3/2.
double kappa_asymptotic_threehalves(double T);

/// dG = -2 alpha S dT along the Gibbs-Duhem chain (alpha >= 1 branch).
double gibbs_duhem_dG(const SystemState& s, double dT);

struct AlphaFScan {
  double min = 0.0;
  double max = 0.0;
  std::vector<std::pair<double, double>> table;  // (alpha, alpha*f(alpha))
};

/// Tabulates alpha * f(alpha) on [lo, hi] within [1, 3/2].
AlphaFScan scan_alpha_f(double lo, double hi, int steps);

}  // namespace gentile

#endif
