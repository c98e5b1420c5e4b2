#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "attrition/dynamics.hpp"

namespace attrition::cli {

inline constexpr std::string_view kTraceCsvHeader =
    "t,n,D_P,D_I,pirate_profit,industry_profit,disc_cum_pirate,disc_cum_industry";

/// One row per period, LF line endings, numbers via format_number.
std::string trace_to_csv(const SimulationTrace& trace);

/// Inverse of trace_to_csv up to the 9-digit rounding. Throws
/// std::runtime_error on a malformed document.
std::vector<PeriodRecord> parse_trace_csv(std::string_view csv);

}  // namespace attrition::cli
