#include "volgap/format.hpp"

#include <cmath>
#include <cstdio>

namespace volgap {

std::string format_number(long double x, int digits) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Lg", digits, x);
    return buf;
}

std::string format_log_scalar(const LogScalar& x, int digits) {
    if (x.is_zero()) return "0";
    const long double lg = x.log10_mag();
    if (std::fabs(lg) < 4900.0L) return format_number(x.to_real(), digits);

    long double exponent = std::floor(lg);
    std::string mantissa = format_number(std::pow(10.0L, lg - exponent), digits);
    if (mantissa == "10") {  // rounding carried into the next decade
        mantissa = "1";
        exponent += 1.0L;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s%se%+.0Lf", x.sign() < 0 ? "-" : "", mantissa.c_str(), exponent);
    return buf;
}

std::string json_number(long double x, int digits) {
    if (!std::isfinite(x)) return "null";
    return format_number(x, digits);
}

std::string json_string(std::string_view s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
    return out;
}

}  // namespace volgap
