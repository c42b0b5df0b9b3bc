#include "gentile/oracle.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gentile/errors.hpp"
#include "gentile/quadrature.hpp"
#include "gentile/specfun.hpp"

namespace gentile::oracle {

GentileSpec GentileSpec::bounded(long long m) {
  if (m < 1) {
    throw std::domain_error("GentileSpec: max_occupancy must be >= 1");
  }
  return {m};
}

double bose_energy_quadrature(double alpha, double T, double kappa_mag,
                              const SolverSettings& settings) {
  settings.validate();
  if (!(T > 0.0)) {
    throw std::domain_error("bose_energy_quadrature: requires T > 0");
  }
  if (alpha < specfun::kAlphaMin || alpha > specfun::kAlphaMax) {
    throw std::domain_error("bose_energy_quadrature: alpha outside [1/2, 3/2]");
  }
  if (kappa_mag < 0.0) {
    throw std::domain_error("bose_energy_quadrature: kappa must be >= 0");
  }
  // Scale out T (e = T u), then substitute u = t^2 to tame the u^{alpha-1}
  // endpoint behavior of the occupation factor at u -> 0:
  //   alpha T^{1+alpha} int_0^inf u^alpha/(e^{u+c} - 1) du,  c = kappa/T.
  const double c = kappa_mag / T;
  auto integrand = [&](double t) {
    const double u = t * t;
    const double x = u + c;
    double occ;
    if (x < 1e-8) {
      occ = 1.0 / x - 0.5;  // 1/(e^x - 1) ~ 1/x - 1/2 for tiny x
    } else {
      occ = 1.0 / std::expm1(x);
    }
    return 2.0 * t * std::pow(u, alpha) * occ;
  };
  // Beyond u = 45 the occupation is < e^-45 ~ 3e-20; negligible here.
  const double t_max = std::sqrt(45.0);
  const QuadResult q =
      integrate_adaptive(integrand, 0.0, t_max, settings.quad_rel_tol * 0.1);
  if (!q.converged) {
    std::ostringstream os;
    os << "bose_energy_quadrature: non-convergence (alpha=" << alpha
       << ", T=" << T << ", kappa=" << kappa_mag
       << ", abs_error=" << q.abs_error << ")";
    throw NumericalError(os.str());
  }
  return alpha * std::pow(T, 1.0 + alpha) * q.value;
}

double gentile_occupation(double energy, double T, double mu,
                          const GentileSpec& m) {
  if (!(T > 0.0)) {
    throw std::domain_error("gentile_occupation: requires T > 0");
  }
  const double y = (energy - mu) / T;
  if (!(y > 0.0)) {
    throw std::domain_error(
        "gentile_occupation: reduced energy (e - mu)/T must be > 0");
  }
  const double bose = 1.0 / std::expm1(y);
  if (!m.max_occupancy) {
    return bose;
  }
  const double mp1 = static_cast<double>(*m.max_occupancy + 1);
  const double z = mp1 * y;
  // For large z the capped term underflows to zero.
  const double cap = z > 700.0 ? 0.0 : mp1 / std::expm1(z);
  return bose - cap;
}

std::vector<EnergyCheckRow> verify_energy_asymptotic(
    const std::vector<double>& alpha_grid, const std::vector<double>& T_grid,
    const SolverSettings& settings) {
  std::vector<EnergyCheckRow> rows;
  for (double a : alpha_grid) {
    for (double T : T_grid) {
      const double quad = bose_energy_quadrature(a, T, 0.0, settings);
      const double closed = specfun::f_alpha(a) * std::pow(T, 1.0 + a);
      rows.push_back({a, T, quad, closed, std::abs(quad - closed) / closed});
    }
  }
  return rows;
}

std::vector<GIntegralRow> verify_g_integral(
    const std::vector<double>& alpha_grid, const SolverSettings& settings) {
  std::vector<GIntegralRow> rows;
  for (double a : alpha_grid) {
    const double gi = specfun::g_alpha(a, specfun::GMode::Integral,
                                       settings.delta_guard,
                                       settings.quad_rel_tol);
    const double ga = specfun::g_alpha(a, specfun::GMode::Approximation,
                                       settings.delta_guard);
    rows.push_back({a, gi, ga, (gi - ga) / gi});
  }
  return rows;
}

}  // namespace gentile::oracle
