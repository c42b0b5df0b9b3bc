#ifndef GENTILE_SYSTEM_MODEL_HPP
#define GENTILE_SYSTEM_MODEL_HPP

#include <optional>
#include <string>

namespace gentile {

/// One system of identical elements (particles / banknotes).
/// Temperature is dimensionless (k_B = 1); in the economics reading it is
/// the capital turnover rate and particle_count the number of banknotes.
struct SystemState {
  double alpha;                  // half-dimension, in [1/2, 3/2]
  double temperature;            // > 0
  double particle_count = 1.0;   // k >= 1, treated as a large real
  std::optional<double> kappa;   // chemical-potential magnitude, mu = -kappa

  void validate() const;  // throws std::domain_error on violation
};

enum class RegimeTag { Case1SameSide, Case2Straddling, Unsupported };

struct Regime {
  RegimeTag tag = RegimeTag::Unsupported;
  std::string detail;
};

const char* to_string(RegimeTag tag);

struct SolverSettings {
  double root_tol = 1e-10;
  int max_iter = 200;
  double quad_rel_tol = 1e-8;
  double delta_guard = 0.1;      // guard band below alpha = 1
  double asymptotic_T_min = 10.0;  // warn below this temperature

  void validate() const;
};

/// E = f(alpha) T^{1+alpha}; valid on the whole working interval.
double energy_of(const SystemState& s);

/// Piecewise entropy: f(alpha) T^alpha for alpha >= 1,
/// g(alpha) T^{(1+alpha)/alpha} for alpha <= 1 - delta, and a log-linear
/// interpolation in alpha across (1 - delta, 1) that anchors continuity
/// at alpha = 1.
double entropy_of(const SystemState& s, double delta_guard = 0.1);

/// True when the near-critical interpolation branch applies.
bool entropy_is_interpolated(double alpha, double delta_guard = 0.1);

/// Solves k*kappa = T[(alpha-1) ln k + alpha ln kappa] for kappa > 1.
/// Brackets on a geometric grid, then bisects and Newton-polishes.
/// When two positive roots exist the larger (asymptotically growing)
/// branch is returned. Throws NoSolutionError when no root kappa > 1
/// lies in the search bracket.
double solve_kappa(double k, double T, double alpha,
                   const SolverSettings& settings = {});

/// Gibbs potential G = k*mu = -k*kappa; requires kappa to be present.
double gibbs_of(const SystemState& s);

/// Orders the pair by alpha and classifies which unification case applies.
Regime classify_regime(const SystemState& s1, const SystemState& s2);

}  // namespace gentile

#endif
