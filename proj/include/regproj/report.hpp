#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "regproj/gpd.hpp"
#include "regproj/theorems.hpp"

namespace regproj {

inline constexpr int kReportFormatVersion = 1;

enum class ExitCode { Ok = 0, Violation = 1, Usage = 2 };

// A command's result in both renderings. `data` always carries
// format_version.
struct Report {
  nlohmann::json data;
  std::string text;
  ExitCode exit = ExitCode::Ok;
};

Report parse_failure_report(const GpdError& e);
Report validate_report(const GpdDocument& doc);
Report lifts_report(const GpdDocument& doc, int jobs);
// Invariants of every constituent of one lift: `bits` if given, else the
// document's lift section, else all zeros.
Report invariants_report(const GpdDocument& doc, const std::string& bits);
Report classify_report(const GpdDocument& doc);
Report decide_report(const GpdDocument& doc, int jobs);
Report catalog_report(int max_cr);
Report clauses_report(const std::vector<ClauseResult>& clauses);

}  // namespace regproj
