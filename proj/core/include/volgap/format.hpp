#pragma once

#include <string>
#include <string_view>

#include "volgap/log_scalar.hpp"

namespace volgap {

inline constexpr int kReportDigits = 12;

/// %.{digits}Lg; "inf"/"-inf"/"nan" for non-finite values.
std::string format_number(long double x, int digits = kReportDigits);

/// Decimal rendering of a log-domain value. Falls back to mantissa/exponent
/// built from log10 when the value is outside long double range.
std::string format_log_scalar(const LogScalar& x, int digits = kReportDigits);

/// JSON token for a number: the formatted value, or null if not finite.
std::string json_number(long double x, int digits = kReportDigits);

/// Quoted JSON string literal.
std::string json_string(std::string_view s);

}  // namespace volgap
