#include "gentile/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace gentile {
namespace {

using ordered_json = nlohmann::ordered_json;

// NaN-tolerant JSON scalar: null when not finite.
ordered_json jnum(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

ordered_json system_json(const SystemState& s) {
  ordered_json j;
  j["alpha"] = s.alpha;
  j["temperature"] = s.temperature;
  j["particle_count"] = s.particle_count;
  j["kappa"] = s.kappa ? ordered_json(*s.kappa) : ordered_json(nullptr);
  return j;
}

std::string sanitize_csv(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

}  // namespace

std::string format_scalar(double v) {
  if (!std::isfinite(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string report_json(const SystemState& s1, const SystemState& s2,
                        const AnalysisResult& result, Interpretation interp) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["interpretation"] =
      interp == Interpretation::Economics ? "economics" : "physics";
  if (interp == Interpretation::Economics) {
    // Pure relabeling; the numbers are identical to the physics reading.
    j["legend"] = {{"temperature", "capital turnover rate"},
                   {"particle_count", "capital size (banknotes)"},
                   {"kappa", "nominal interest rate"},
                   {"delta_k", "transferred capital"}};
  }
  j["system1"] = system_json(s1);
  j["system2"] = system_json(s2);
  j["regime"] = {{"tag", to_string(result.regime.tag)},
                 {"detail", result.regime.detail}};

  if (result.unification) {
    const UnificationReport& u = *result.unification;
    ordered_json ju;
    ju["T_unified"] = jnum(u.T_unified);
    ju["alpha_unified"] = jnum(u.alpha_unified);
    ju["E_unified"] = jnum(u.E_unified);
    ju["S_unified"] = jnum(u.S_unified);
    ju["tau"] = jnum(u.tau);
    ju["T_deviation_estimate"] = jnum(u.T_deviation_estimate);
    ju["energy_residual"] = jnum(u.energy_residual);
    ju["entropy_residual"] = jnum(u.entropy_residual);
    ju["ordering_ok"] = u.ordering_ok;
    ju["entropy_contributions"] = {jnum(u.entropy_contributions.first),
                                   jnum(u.entropy_contributions.second)};
    ju["refined_T"] = jnum(u.refined_T);
    ju["refined_alpha"] = jnum(u.refined_alpha);
    ju["refined_converged"] = u.refined_converged;
    ju["exponent_condition_ok"] = u.exponent_condition_ok;
    j["unification"] = ju;
  } else {
    j["unification"] = nullptr;
  }

  if (result.transfer) {
    const TransferReport& t = *result.transfer;
    ordered_json jt;
    jt["q1"] = jnum(t.q1);
    jt["kappa1"] = jnum(t.kappa1);
    jt["H1"] = jnum(t.H1);
    jt["H2"] = jnum(t.H2);
    jt["H3"] = jnum(t.H3);
    jt["Theta"] = jnum(t.Theta);
    jt["Delta"] = jnum(t.Delta);
    jt["xi"] = jnum(t.xi);
    jt["lambda"] = jnum(t.lambda_value);
    jt["no_flow_margin"] = jnum(t.no_flow_margin);
    jt["direction"] = to_string(t.direction);
    jt["delta_k"] = jnum(t.delta_k);
    jt["relative_transfer"] = jnum(t.relative_transfer);
    jt["relative_lower_bound"] = jnum(t.relative_lower_bound);
    j["transfer"] = jt;
  } else {
    j["transfer"] = nullptr;
  }

  j["warnings"] = result.warnings;
  return j.dump(2) + "\n";
}

std::string csv_header() {
  return "schema_version,status,regime,"
         "alpha1,T1,k1,alpha2,T2,k2,"
         "T_unified,alpha_unified,E_unified,S_unified,tau,"
         "T_deviation_estimate,energy_residual,entropy_residual,ordering_ok,"
         "entropy_share1,entropy_share2,refined_T,refined_alpha,"
         "refined_converged,exponent_condition_ok,"
         "q1,kappa1,H1,H2,H3,lambda,no_flow_margin,direction,delta_k,"
         "relative_transfer,relative_lower_bound,warnings";
}

std::string csv_row(const SystemState& s1, const SystemState& s2,
                    const AnalysisResult& result, const std::string& status) {
  std::ostringstream os;
  auto put = [&os](const std::string& v) { os << v << ','; };
  auto putd = [&](double v) { put(format_scalar(v)); };
  auto putb = [&](bool v) { put(v ? "1" : "0"); };

  put(std::to_string(kReportSchemaVersion));
  put(sanitize_csv(status));
  put(to_string(result.regime.tag));
  putd(s1.alpha);
  putd(s1.temperature);
  putd(s1.particle_count);
  putd(s2.alpha);
  putd(s2.temperature);
  putd(s2.particle_count);

  if (result.unification) {
    const UnificationReport& u = *result.unification;
    putd(u.T_unified);
    putd(u.alpha_unified);
    putd(u.E_unified);
    putd(u.S_unified);
    putd(u.tau);
    putd(u.T_deviation_estimate);
    putd(u.energy_residual);
    putd(u.entropy_residual);
    putb(u.ordering_ok);
    putd(u.entropy_contributions.first);
    putd(u.entropy_contributions.second);
    putd(u.refined_T);
    putd(u.refined_alpha);
    putb(u.refined_converged);
    putb(u.exponent_condition_ok);
  } else {
    for (int i = 0; i < 13; ++i) put("");
    put("");
    put("");
  }

  if (result.transfer) {
    const TransferReport& t = *result.transfer;
    putd(t.q1);
    putd(t.kappa1);
    putd(t.H1);
    putd(t.H2);
    putd(t.H3);
    putd(t.lambda_value);
    putd(t.no_flow_margin);
    put(to_string(t.direction));
    putd(t.delta_k);
    putd(t.relative_transfer);
    putd(t.relative_lower_bound);
  } else {
    for (int i = 0; i < 11; ++i) put("");
  }

  std::string warn;
  for (const auto& w : result.warnings) {
    if (!warn.empty()) warn += '|';
    warn += sanitize_csv(w);
  }
  os << warn;
  return os.str();
}

}  // namespace gentile
