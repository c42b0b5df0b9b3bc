// Acceptance suite: one numbered criterion per invocation (or "all").
// Usage: acceptance <n|all> [path-to-cli]
// Prints one PASS/FAIL line per criterion; exit code 0 iff all run
// criteria pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "gentile/analysis.hpp"
#include "gentile/errors.hpp"
#include "gentile/oracle.hpp"
#include "gentile/specfun.hpp"
#include "gentile/system_model.hpp"
#include "gentile/transfer.hpp"
#include "gentile/unify.hpp"

namespace {

using namespace gentile;
namespace fs = std::filesystem;

std::string g_cli_path;

bool report(int n, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", n,
              detail.c_str());
  return pass;
}

SystemState sys(double a, double T, double k = 1.0,
                std::optional<double> kappa = std::nullopt) {
  return {a, T, k, kappa};
}

// 1. Special-function anchors.
bool criterion1() {
  const double f1 = specfun::f_alpha(1.0);
  const double g05 = specfun::gamma_fn(0.5);
  const double e1 = std::abs(f1 - M_PI * M_PI / 6.0) / (M_PI * M_PI / 6.0);
  const double e2 = std::abs(g05 - std::sqrt(M_PI)) / std::sqrt(M_PI);
  std::ostringstream os;
  os << "f(1) rel err " << e1 << ", gamma(1/2) rel err " << e2
     << " (limit 1e-12)";
  return report(1, e1 <= 1e-12 && e2 <= 1e-12, os.str());
}

// 2. Energy-law identity via brute-force quadrature.
bool criterion2() {
  const auto rows =
      oracle::verify_energy_asymptotic({0.5, 1.0, 1.5}, {1.0, 10.0, 100.0});
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.rel_error);
  std::ostringstream os;
  os << "9-point grid, worst relative error " << worst << " (limit 1e-7)";
  return report(2, rows.size() == 9 && worst <= 1e-7, os.str());
}

// 3. Case-1 closed forms and orderings on random inputs.
bool criterion3() {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> ua(1.0 + 1e-3, 1.5);
  std::uniform_real_distribution<double> uT(10.0, 1000.0);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    double a1 = ua(rng), a2 = ua(rng);
    if (a1 > a2) std::swap(a1, a2);
    if (a1 == a2) a2 += 1e-4;
    double T1 = uT(rng), T2 = uT(rng);
    if (T1 < T2) std::swap(T1, T2);
    if (T1 == T2) T1 += 1.0;
    const auto r = unify_case1(sys(a1, T1), sys(a2, T2));
    const bool closed =
        std::abs(r.T_unified - 0.5 * (T1 + T2)) <= 1e-12 * (T1 + T2) &&
        std::abs(r.alpha_unified - 0.5 * (a1 + a2)) <= 1e-13 * (a1 + a2);
    const bool ordered = T2 < r.T_unified && r.T_unified < T1 &&
                         a1 < r.alpha_unified && r.alpha_unified < a2;
    if (!closed || !ordered) ++bad;
  }
  std::ostringstream os;
  os << "1000 random same-side pairs, " << bad
     << " violations of closed forms / orderings";
  return report(3, bad == 0, os.str());
}

// 4. Case-1 entropy residual under temperature scaling.
bool criterion4() {
  std::vector<double> residuals;
  for (double s : {1.0, 10.0, 100.0}) {
    const auto r = unify_case1(sys(1.1, 12.0 * s), sys(1.3, 8.0 * s));
    residuals.push_back(std::abs(r.entropy_residual));
  }
  const bool decreasing =
      residuals[1] < residuals[0] && residuals[2] < residuals[1];
  std::ostringstream os;
  os << "relative entropy residuals at x1, x10, x100: " << residuals[0] << ", "
     << residuals[1] << ", " << residuals[2]
     << (decreasing ? " (strictly decreasing)"
                    : " (NOT strictly decreasing: the signed residual crosses "
                      "zero near x10 and grows again; the closed forms do not "
                      "solve the entropy equation asymptotically)");
  return report(4, decreasing, os.str());
}

// 5. Case-2 inequalities on convergent runs.
bool criterion5() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ua1(0.55, 0.95);
  std::uniform_real_distribution<double> ua2(1.05, 1.45);
  std::uniform_real_distribution<double> uT1(1.0, 1.3);
  std::uniform_real_distribution<double> uT2(0.85, 1.05);
  int convergent = 0, exponent_fail = 0, inequality_fail = 0, attempts = 0;
  while (convergent < 100 && attempts < 5000) {
    ++attempts;
    const double a1 = ua1(rng), a2 = ua2(rng);
    const double T1 = uT1(rng), T2 = uT2(rng);
    UnificationReport r;
    try {
      r = unify_case2(sys(a1, T1), sys(a2, T2));
    } catch (const NoSolutionError&) {
      continue;
    }
    ++convergent;
    if (!r.exponent_condition_ok) {
      // The printed exponent condition cannot hold for alpha <= 3/2 when
      // alpha1 < 1; counted and reported separately, not hidden.
      ++exponent_fail;
      continue;
    }
    if (!(r.T_unified < r.tau &&
          r.alpha_unified > 0.5 * (a1 + a2))) {
      ++inequality_fail;
    }
  }
  std::ostringstream os;
  os << convergent << " convergent runs (" << attempts << " attempts); "
     << exponent_fail
     << " fail the printed exponent condition (reported separately); "
     << inequality_fail << " exponent-satisfying runs violate T < tau or "
     << "alpha > mean";
  return report(5, convergent >= 100 && inequality_fail == 0, os.str());
}

// 6. Chemical-potential asymptotics at alpha = 3/2.
bool criterion6() {
  const double T = 1e6;
  const double kappa = solve_kappa(1.0, T, 1.5);
  const double ratio = kappa / (1.5 * T * std::log(T));
  const bool pass = ratio >= 0.9 && ratio <= 1.2;
  std::ostringstream os;
  os << "kappa / ((3/2) T ln T) = " << ratio << " at T = 1e6 (window "
     << "[0.9, 1.2])"
     << (pass ? ""
              : "; the exact root exceeds the window because the correction "
                "decays only like ln ln T / ln T");
  return report(6, pass, os.str());
}

// 7. No-flow manifold and its perturbation.
bool criterion7() {
  const double a1 = 1.1, T1 = 10.0;
  const double lead = a1 * specfun::f_alpha(a1) * std::pow(T1, a1);
  const SystemState on{a1, T1, std::exp(lead), std::nullopt};
  const double m = no_flow_margin(on);
  const bool zero_ok = std::abs(m) <= 1e-9 * lead;
  const bool none_ok = transfer_direction(on) == TransferDirection::None;
  SystemState hot = on;
  hot.temperature = 10.5;
  const bool flip_ok =
      transfer_direction(hot) == TransferDirection::IntoSystem1;
  std::ostringstream os;
  os << "margin/lead = " << m / lead << ", direction "
     << to_string(transfer_direction(on)) << ", after T1 -> 10.5: "
     << to_string(transfer_direction(hot));
  return report(7, zero_ok && none_ok && flip_ok, os.str());
}

// 8. Relative-transfer inequality on sampled valid inputs.
bool criterion8() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ua(1.0 + 1e-3, 1.5);
  std::uniform_real_distribution<double> uT(10.0, 1000.0);
  std::uniform_real_distribution<double> ulk(std::log(2.0), std::log(1e6));
  std::uniform_real_distribution<double> ulkap(std::log(1.5), std::log(1e4));
  std::uniform_real_distribution<double> udrop(0.01, 0.5);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const double a1 = ua(rng);
    const double T1 = uT(rng);
    const double k1 = std::exp(ulk(rng));
    const double kappa1 = std::exp(ulkap(rng));
    const double T = T1 * (1.0 - udrop(rng));
    const auto [value, bound] =
        relative_transfer(sys(a1, T1, k1, kappa1), T);
    if (!(value > bound)) ++bad;
  }
  std::ostringstream os;
  os << "1000 sampled valid inputs, " << bad << " violations of value > "
     << "2 alpha1 (T1-T)/T1";
  return report(8, bad == 0, os.str());
}

// 9. Gentile limits.
bool criterion9() {
  double worst_fermi = 0.0, worst_bose = 0.0;
  for (int i = 1; i <= 100; ++i) {
    const double y = 0.06 * i;
    const double fermi = 1.0 / (std::exp(y) + 1.0);
    worst_fermi = std::max(
        worst_fermi,
        std::abs(oracle::gentile_occupation(y, 1.0, 0.0,
                                            oracle::GentileSpec::bounded(1)) -
                 fermi));
    const double bose =
        oracle::gentile_occupation(y, 1.0, 0.0, oracle::GentileSpec::bose());
    worst_bose = std::max(
        worst_bose,
        std::abs(oracle::gentile_occupation(
                     y, 1.0, 0.0, oracle::GentileSpec::bounded(1000000)) -
                 bose));
  }
  std::ostringstream os;
  os << "100-point grid: |m=1 - Fermi| = " << worst_fermi
     << " (limit 1e-14), |m=1e6 - Bose| = " << worst_bose << " (limit 1e-6)";
  return report(9, worst_fermi <= 1e-14 && worst_bose <= 1e-6, os.str());
}

// 10. alpha f(alpha) range discrepancy report (informational, never fails
// on the discrepancy itself).
bool criterion10() {
  const auto scan = scan_alpha_f(1.0, 1.5, 100);
  const double left = scan.table.front().second;
  const double right = scan.table.back().second;
  const bool endpoints_ok = std::abs(left - 1.6449340668) < 1e-3 &&
                            std::abs(right - 4.0124096804) < 1e-3;
  std::ostringstream os;
  os << "alpha f(alpha) endpoints " << left << " and " << right
     << "; INFO: the quoted range 1.5..3.4 is not reproduced (measured "
     << scan.min << ".." << scan.max << ")";
  return report(10, endpoints_ok, os.str());
}

// 11. CLI determinism.
bool criterion11() {
  if (g_cli_path.empty()) {
    return report(11, false, "no CLI path supplied");
  }
  std::error_code ec;
  const fs::path dir =
      fs::temp_directory_path() / ("gentile_acc_" + std::to_string(::getpid()));
  fs::create_directories(dir, ec);
  const fs::path cfg = dir / "config.json";
  {
    std::ofstream out(cfg);
    out << R"({"system1": {"alpha": 1.1, "temperature": 120.0,)"
        << R"( "particle_count": 1000000.0},)"
        << R"( "system2": {"alpha": 1.3, "temperature": 80.0}})" << "\n";
  }
  auto run = [&](const std::string& cmd) { return std::system(cmd.c_str()); };
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };

  const std::string base = "'" + g_cli_path + "'";
  run(base + " analyze --config '" + cfg.string() + "' > '" +
      (dir / "a1.json").string() + "' 2>/dev/null");
  run(base + " analyze --config '" + cfg.string() + "' > '" +
      (dir / "a2.json").string() + "' 2>/dev/null");
  const std::string a1 = slurp(dir / "a1.json");
  const std::string a2 = slurp(dir / "a2.json");
  const bool analyze_ok = !a1.empty() && a1 == a2;

  const std::string grid =
      " --grid 'T1=100:200:6' --grid 'alpha1=1.05:1.45:5'";
  run("GENTILE_UNIFY_THREADS=1 " + base + " sweep --config '" + cfg.string() +
      "'" + grid + " --out '" + (dir / "s1.csv").string() + "' 2>/dev/null");
  run("GENTILE_UNIFY_THREADS=8 " + base + " sweep --config '" + cfg.string() +
      "'" + grid + " --out '" + (dir / "s8.csv").string() + "' 2>/dev/null");
  const std::string s1 = slurp(dir / "s1.csv");
  const std::string s8 = slurp(dir / "s8.csv");
  const bool sweep_ok = !s1.empty() && s1 == s8;

  fs::remove_all(dir, ec);
  std::ostringstream os;
  os << "analyze byte-identical: " << (analyze_ok ? "yes" : "NO")
     << "; sweep 1-thread vs 8-thread identical: " << (sweep_ok ? "yes" : "NO")
     << " (" << s1.size() << " bytes)";
  return report(11, analyze_ok && sweep_ok, os.str());
}

}  // namespace

int main(int argc, char** argv) {
  const std::string which = argc > 1 ? argv[1] : "all";
  if (argc > 2) g_cli_path = argv[2];

  bool (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                          criterion5, criterion6, criterion7, criterion8,
                          criterion9, criterion10, criterion11};
  bool ok = true;
  if (which == "all") {
    for (auto* c : criteria) ok = c() && ok;
  } else {
    const int n = std::atoi(which.c_str());
    if (n < 1 || n > 11) {
      std::fprintf(stderr, "usage: acceptance <1..11|all> [cli-path]\n");
      return 1;
    }
    ok = criteria[n - 1]();
  }
  return ok ? 0 : 1;
}
