#pragma once

#include <string>

#include "attrition/dynamics.hpp"

namespace attrition::cli {

/// Standalone SVG 1.1 line chart (800x600 viewBox) of per-period industry
/// (solid) and pirate (dashed) profit against t, with a zero-profit gridline,
/// five tick divisions per axis and a legend. Output depends only on the trace.
std::string render_profit_chart(const SimulationTrace& trace);

}  // namespace attrition::cli
