#ifndef GENTILE_ANALYSIS_HPP
#define GENTILE_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gentile/system_model.hpp"
#include "gentile/transfer.hpp"
#include "gentile/unify.hpp"

namespace gentile {

struct TransferReport {
  double q1 = 0.0;
  double kappa1 = 0.0;
  double H1 = 0.0;
  double H2 = 0.0;
  double H3 = 0.0;
  double Theta = 0.0;   // temperature drop T1 - T of system 1
  double Delta = 0.0;   // dimension shift alpha - alpha1
  double xi = 0.0;      // chemical-potential shift (Gibbs-Duhem closure)
  double lambda_value = 0.0;  // perturbative particle-count change
  double no_flow_margin = 0.0;
  TransferDirection direction = TransferDirection::None;
  double delta_k = 0.0;           // k - k1 from the integrated formula
  double relative_transfer = 0.0;
  double relative_lower_bound = 0.0;
  std::vector<std::string> warnings;
};

struct AnalysisResult {
  Regime regime;
  std::optional<UnificationReport> unification;
  std::optional<TransferReport> transfer;
  std::vector<std::string> warnings;
};

/// Full scenario analysis: regime classification, unification, and (in the
/// same-side case, where the transfer formulas are derived) the transfer
/// report. Propagates NoSolutionError from the case-2 alpha solve.
AnalysisResult analyze_pair(const SystemState& s1, const SystemState& s2,
                            const SolverSettings& settings = {});

}  // namespace gentile

#endif
