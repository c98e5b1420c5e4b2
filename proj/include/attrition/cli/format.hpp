#pragma once

#include <string>

namespace attrition::cli {

/// Shortest of fixed/scientific with up to 9 significant digits, like "%.9g"
/// in the C locale. Ties round half to even on the exact binary value.
std::string format_number(double x);

/// Fixed-point with `decimals` digits; used for SVG coordinates.
std::string format_fixed(double x, int decimals);

}  // namespace attrition::cli
