#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gentile/analysis.hpp"
#include "gentile/errors.hpp"
#include "gentile/oracle.hpp"
#include "gentile/report_io.hpp"
#include "gentile/specfun.hpp"
#include "gentile/system_model.hpp"
#include "gentile/transfer.hpp"
#include "gentile/unify.hpp"

namespace py = pybind11;
using namespace gentile;

namespace {

SystemState make_system(double alpha, double temperature, double particle_count,
                        std::optional<double> kappa) {
  SystemState s{alpha, temperature, particle_count, kappa};
  s.validate();
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Unification of two parastatistical systems with fractal "
            "half-dimensions: equilibrium observables and particle transfer";

  py::register_exception<NoSolutionError>(m, "NoSolutionError");
  py::register_exception<NumericalError>(m, "NumericalError");

  py::class_<SystemState>(m, "SystemState")
      .def(py::init(&make_system), py::arg("alpha"), py::arg("temperature"),
           py::arg("particle_count") = 1.0, py::arg("kappa") = py::none())
      .def_readwrite("alpha", &SystemState::alpha)
      .def_readwrite("temperature", &SystemState::temperature)
      .def_readwrite("particle_count", &SystemState::particle_count)
      .def_readwrite("kappa", &SystemState::kappa);

  py::class_<SolverSettings>(m, "SolverSettings")
      .def(py::init<>())
      .def_readwrite("root_tol", &SolverSettings::root_tol)
      .def_readwrite("max_iter", &SolverSettings::max_iter)
      .def_readwrite("quad_rel_tol", &SolverSettings::quad_rel_tol)
      .def_readwrite("delta_guard", &SolverSettings::delta_guard)
      .def_readwrite("asymptotic_T_min", &SolverSettings::asymptotic_T_min);

  py::enum_<RegimeTag>(m, "RegimeTag")
      .value("Case1SameSide", RegimeTag::Case1SameSide)
      .value("Case2Straddling", RegimeTag::Case2Straddling)
      .value("Unsupported", RegimeTag::Unsupported);

  py::class_<Regime>(m, "Regime")
      .def_readonly("tag", &Regime::tag)
      .def_readonly("detail", &Regime::detail);

  py::enum_<TransferDirection>(m, "TransferDirection")
      .value("IntoSystem1", TransferDirection::IntoSystem1)
      .value("OutOfSystem1", TransferDirection::OutOfSystem1)
      .value("NoTransfer", TransferDirection::None);

  py::class_<UnificationReport>(m, "UnificationReport")
      .def_readonly("regime", &UnificationReport::regime)
      .def_readonly("T_unified", &UnificationReport::T_unified)
      .def_readonly("alpha_unified", &UnificationReport::alpha_unified)
      .def_readonly("E_unified", &UnificationReport::E_unified)
      .def_readonly("S_unified", &UnificationReport::S_unified)
      .def_readonly("tau", &UnificationReport::tau)
      .def_readonly("T_deviation_estimate",
                    &UnificationReport::T_deviation_estimate)
      .def_readonly("energy_residual", &UnificationReport::energy_residual)
      .def_readonly("entropy_residual", &UnificationReport::entropy_residual)
      .def_readonly("ordering_ok", &UnificationReport::ordering_ok)
      .def_readonly("entropy_contributions",
                    &UnificationReport::entropy_contributions)
      .def_readonly("refined_T", &UnificationReport::refined_T)
      .def_readonly("refined_alpha", &UnificationReport::refined_alpha)
      .def_readonly("refined_converged", &UnificationReport::refined_converged)
      .def_readonly("exponent_condition_ok",
                    &UnificationReport::exponent_condition_ok)
      .def_readonly("warnings", &UnificationReport::warnings);

  py::class_<TransferReport>(m, "TransferReport")
      .def_readonly("q1", &TransferReport::q1)
      .def_readonly("kappa1", &TransferReport::kappa1)
      .def_readonly("H1", &TransferReport::H1)
      .def_readonly("H2", &TransferReport::H2)
      .def_readonly("H3", &TransferReport::H3)
      .def_readonly("Theta", &TransferReport::Theta)
      .def_readonly("Delta", &TransferReport::Delta)
      .def_readonly("xi", &TransferReport::xi)
      .def_readonly("lambda_value", &TransferReport::lambda_value)
      .def_readonly("no_flow_margin", &TransferReport::no_flow_margin)
      .def_readonly("direction", &TransferReport::direction)
      .def_readonly("delta_k", &TransferReport::delta_k)
      .def_readonly("relative_transfer", &TransferReport::relative_transfer)
      .def_readonly("relative_lower_bound",
                    &TransferReport::relative_lower_bound)
      .def_readonly("warnings", &TransferReport::warnings);

  py::class_<AnalysisResult>(m, "AnalysisResult")
      .def_readonly("regime", &AnalysisResult::regime)
      .def_readonly("unification", &AnalysisResult::unification)
      .def_readonly("transfer", &AnalysisResult::transfer)
      .def_readonly("warnings", &AnalysisResult::warnings);

  // Structural functions.
  m.def("gamma_fn", &specfun::gamma_fn, py::arg("x"));
  m.def("zeta_fn", &specfun::zeta_fn, py::arg("s"));
  m.def("f_alpha", &specfun::f_alpha, py::arg("alpha"));
  m.def("f_prime", &specfun::f_prime, py::arg("alpha"));
  m.def(
      "g_alpha",
      [](double alpha, const std::string& mode, double delta_guard) {
        const auto gm = mode == "integral" ? specfun::GMode::Integral
                                           : specfun::GMode::Approximation;
        return specfun::g_alpha(alpha, gm, delta_guard);
      },
      py::arg("alpha"), py::arg("mode") = "approximation",
      py::arg("delta_guard") = 0.1);
  m.def("h_alpha", &specfun::h_alpha, py::arg("alpha"), py::arg("alpha1"));

  // Single-system observables.
  m.def("energy_of", &energy_of, py::arg("system"));
  m.def("entropy_of", &entropy_of, py::arg("system"),
        py::arg("delta_guard") = 0.1);
  m.def("solve_kappa", &solve_kappa, py::arg("k"), py::arg("T"),
        py::arg("alpha"), py::arg("settings") = SolverSettings{});
  m.def("gibbs_of", &gibbs_of, py::arg("system"));
  m.def("classify_regime", &classify_regime, py::arg("system1"),
        py::arg("system2"));

  // Unification and transfer.
  m.def("unify_case1", &unify_case1, py::arg("system1"), py::arg("system2"),
        py::arg("settings") = SolverSettings{});
  m.def("unify_case2", &unify_case2, py::arg("system1"), py::arg("system2"),
        py::arg("settings") = SolverSettings{});
  m.def("q_factor", &q_factor, py::arg("system1"));
  m.def("no_flow_margin", &no_flow_margin, py::arg("system1"));
  m.def("transfer_direction", &transfer_direction, py::arg("system1"));
  m.def("transfer_size", &transfer_size, py::arg("system1"),
        py::arg("T_unified"));
  m.def("relative_transfer", &relative_transfer, py::arg("system1"),
        py::arg("T_unified"));
  m.def("kappa_asymptotic_threehalves", &kappa_asymptotic_threehalves,
        py::arg("T"));
  m.def("analyze_pair", &analyze_pair, py::arg("system1"), py::arg("system2"),
        py::arg("settings") = SolverSettings{});
  m.def(
      "report_json",
      [](const SystemState& s1, const SystemState& s2,
         const AnalysisResult& result, const std::string& interpretation) {
        return report_json(s1, s2, result,
                           interpretation == "economics"
                               ? Interpretation::Economics
                               : Interpretation::Physics);
      },
      py::arg("system1"), py::arg("system2"), py::arg("result"),
      py::arg("interpretation") = "physics");

  // Brute-force oracles.
  m.def(
      "bose_energy_quadrature",
      [](double alpha, double T, double kappa_mag,
         const SolverSettings& settings) {
        return oracle::bose_energy_quadrature(alpha, T, kappa_mag, settings);
      },
      py::arg("alpha"), py::arg("T"), py::arg("kappa") = 0.0,
      py::arg("settings") = SolverSettings{});
  m.def(
      "gentile_occupation",
      [](double energy, double T, double mu, std::optional<long long> m_cap) {
        const auto spec = m_cap ? oracle::GentileSpec::bounded(*m_cap)
                                : oracle::GentileSpec::bose();
        return oracle::gentile_occupation(energy, T, mu, spec);
      },
      py::arg("energy"), py::arg("T"), py::arg("mu") = 0.0,
      py::arg("max_occupancy") = py::none());
}
