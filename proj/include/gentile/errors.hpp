#ifndef GENTILE_ERRORS_HPP
#define GENTILE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gentile {

/// Root-finding failed to bracket or converge; carries scan diagnostics.
class NoSolutionError : public std::runtime_error {
 public:
  NoSolutionError(const std::string& msg,
                  std::vector<std::pair<double, double>> curve = {})
      : std::runtime_error(msg), residual_curve_(std::move(curve)) {}

  /// Sampled (argument, residual) pairs from the bracketing scan.
  const std::vector<std::pair<double, double>>& residual_curve() const {
    return residual_curve_;
  }

 private:
  std::vector<std::pair<double, double>> residual_curve_;
};

/// Quadrature or iteration failed to reach the requested tolerance.
class NumericalError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gentile

#endif
