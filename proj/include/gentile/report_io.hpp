#ifndef GENTILE_REPORT_IO_HPP
#define GENTILE_REPORT_IO_HPP

#include <string>

#include "gentile/analysis.hpp"

namespace gentile {

enum class Interpretation { Physics, Economics };

/// Fixed-format scalar used in both CSV and JSON documents:
/// 12 significant digits, empty/null for NaN.
std::string format_scalar(double v);

/// JSON report document for one scenario. Deterministic: identical inputs
/// produce identical bytes.
std::string report_json(const SystemState& s1, const SystemState& s2,
                        const AnalysisResult& result,
                        Interpretation interp = Interpretation::Physics);

/// CSV header for the fixed, versioned column schema.
std::string csv_header();

/// One CSV row. `extra_prefix` lets sweep prepend grid columns (already
/// comma-terminated) -- pass "" for a standalone row.
std::string csv_row(const SystemState& s1, const SystemState& s2,
                    const AnalysisResult& result, const std::string& status);

inline constexpr int kReportSchemaVersion = 1;

}  // namespace gentile

#endif
