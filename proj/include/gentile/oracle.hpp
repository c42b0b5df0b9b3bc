#ifndef GENTILE_ORACLE_HPP
#define GENTILE_ORACLE_HPP

#include <optional>
#include <vector>

#include "gentile/system_model.hpp"

namespace gentile::oracle {

/// Occupancy cap for Gentile statistics; unset = Bose limit.
struct GentileSpec {
  std::optional<long long> max_occupancy;  // >= 1 when bounded

  static GentileSpec bose() { return {std::nullopt}; }
  static GentileSpec bounded(long long m);
};

/// Brute-force energy integral alpha * int_0^inf e^a / (exp((e+kappa)/T)-1) de,
/// the independent check of the closed-form energy law. Density of states is
/// normalized as alpha * e^{alpha-1} so the kappa = 0 integral reproduces
/// f(alpha) T^{1+alpha} exactly.
double bose_energy_quadrature(double alpha, double T, double kappa_mag,
                              const SolverSettings& settings = {});

/// Gentile occupation number at reduced energy (e - mu)/T > 0.
double gentile_occupation(double energy, double T, double mu,
                          const GentileSpec& m);

struct EnergyCheckRow {
  double alpha;
  double T;
  double quadrature;
  double closed_form;
  double rel_error;
};

/// Quadrature vs f(alpha) T^{1+alpha} at kappa = 0 over a grid.
std::vector<EnergyCheckRow> verify_energy_asymptotic(
    const std::vector<double>& alpha_grid, const std::vector<double>& T_grid,
    const SolverSettings& settings = {});

struct GIntegralRow {
  double alpha;
  double g_integral;
  double g_approx;
  double rel_gap;  // (integral - approx)/integral
};

/// Integral form of g vs its closed approximation over an alpha grid.
std::vector<GIntegralRow> verify_g_integral(
    const std::vector<double>& alpha_grid, const SolverSettings& settings = {});

}  // namespace gentile::oracle

#endif
