#pragma once

#include <string>

#include "milnor/invariants.hpp"

namespace milnor {

enum class ReportFormat { Text, Json, MarkdownRow };

// Deterministic serialization of a report. Text mode prints the series in
// the truncated style with the stable tail collapsed; JSON carries the full
// dims arrays.
std::string render_report(const InvariantReport& report, ReportFormat format);

// Series string with the stable tail collapsed: 1+3t+6t^2+7t^3+6t^4+3(t^5+...
std::string series_to_string(const std::vector<long long>& dims, int stable_from);
// Plain polynomial series string (used for the smooth comparison series).
std::string series_to_string(const std::vector<long long>& dims);

}  // namespace milnor
