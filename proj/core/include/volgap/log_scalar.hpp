#pragma once

#include <compare>
#include <iosfwd>

namespace volgap {

/// Signed real stored as (sign, natural log of magnitude).
///
/// Quantities such as e^{alpha n C_n} overflow every native float type for
/// n >= 5; carrying the logarithm keeps them exact enough to compare and
/// combine. The magnitude is kept in long double so that converting a finite
/// double in and out again is exact to within one ulp of the double.
///
/// sign() == 0 is exact zero; log_mag() is meaningless in that state.
class LogScalar {
public:
    using log_type = long double;

    constexpr LogScalar() noexcept = default;

    static constexpr LogScalar zero() noexcept { return {}; }
    static constexpr LogScalar one() noexcept { return LogScalar(1, 0.0L); }

    /// Build from sign and log-magnitude. Any nonzero sign is normalised to +-1.
    static constexpr LogScalar from_log(int sign, log_type log_mag) noexcept {
        if (sign == 0) return {};
        return LogScalar(sign > 0 ? 1 : -1, log_mag);
    }
    static LogScalar from_real(long double x) noexcept;
    /// e^x for any finite x, including |x| far beyond native exp range.
    static constexpr LogScalar exp(log_type x) noexcept { return LogScalar(1, x); }

    [[nodiscard]] constexpr int sign() const noexcept { return sign_; }
    [[nodiscard]] constexpr log_type log_mag() const noexcept { return log_mag_; }
    [[nodiscard]] constexpr bool is_zero() const noexcept { return sign_ == 0; }

    /// log10 |x|; -inf for zero.
    [[nodiscard]] log_type log10_mag() const noexcept;

    /// Native value. Overflows to +-inf or underflows to 0 outside the range.
    [[nodiscard]] long double to_real() const noexcept;
    [[nodiscard]] double to_double() const noexcept { return static_cast<double>(to_real()); }

    [[nodiscard]] constexpr LogScalar operator-() const noexcept { return from_log(-sign_, log_mag_); }
    [[nodiscard]] constexpr LogScalar abs() const noexcept { return from_log(sign_ == 0 ? 0 : 1, log_mag_); }

    LogScalar& operator+=(const LogScalar& rhs) noexcept;
    LogScalar& operator-=(const LogScalar& rhs) noexcept;
    LogScalar& operator*=(const LogScalar& rhs) noexcept;
    /// Throws DomainError on division by zero.
    LogScalar& operator/=(const LogScalar& rhs);

    friend LogScalar operator+(LogScalar a, const LogScalar& b) noexcept { return a += b; }
    friend LogScalar operator-(LogScalar a, const LogScalar& b) noexcept { return a -= b; }
    friend LogScalar operator*(LogScalar a, const LogScalar& b) noexcept { return a *= b; }
    friend LogScalar operator/(LogScalar a, const LogScalar& b) { return a /= b; }

    /// Exact order on the represented reals (all zeros compare equal).
    friend std::strong_ordering operator<=>(const LogScalar& a, const LogScalar& b) noexcept;
    friend bool operator==(const LogScalar& a, const LogScalar& b) noexcept {
        return (a <=> b) == std::strong_ordering::equal;
    }

private:
    constexpr LogScalar(int sign, log_type log_mag) noexcept : sign_(sign), log_mag_(log_mag) {}

    int sign_ = 0;
    log_type log_mag_ = 0.0L;
};

LogScalar log_add(const LogScalar& a, const LogScalar& b) noexcept;
LogScalar log_mul(const LogScalar& a, const LogScalar& b) noexcept;
LogScalar log_div(const LogScalar& a, const LogScalar& b);
LogScalar log_exp(LogScalar::log_type x) noexcept;
LogScalar to_log(long double x) noexcept;
long double to_real(const LogScalar& x) noexcept;

std::ostream& operator<<(std::ostream& os, const LogScalar& x);

}  // namespace volgap
