#include "volgap/log_scalar.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "volgap/errors.hpp"

namespace volgap {

namespace {

constexpr long double kLn10 = std::numbers::ln10_v<long double>;

}  // namespace

LogScalar LogScalar::from_real(long double x) noexcept {
    if (x == 0.0L) return {};
    return LogScalar(x > 0 ? 1 : -1, std::log(std::fabs(x)));
}

LogScalar::log_type LogScalar::log10_mag() const noexcept {
    if (sign_ == 0) return -std::numeric_limits<log_type>::infinity();
    return log_mag_ / kLn10;
}

long double LogScalar::to_real() const noexcept {
    if (sign_ == 0) return 0.0L;
    return static_cast<long double>(sign_) * std::exp(log_mag_);
}

LogScalar& LogScalar::operator+=(const LogScalar& rhs) noexcept {
    if (rhs.sign_ == 0) return *this;
    if (sign_ == 0) return *this = rhs;

    const bool lhs_larger = log_mag_ >= rhs.log_mag_;
    const LogScalar& big = lhs_larger ? *this : rhs;
    const LogScalar& small = lhs_larger ? rhs : *this;
    const log_type diff = small.log_mag_ - big.log_mag_;  // <= 0

    if (big.sign_ == small.sign_) {
        *this = LogScalar(big.sign_, big.log_mag_ + std::log1p(std::exp(diff)));
        return *this;
    }
    if (diff == 0.0L) return *this = LogScalar{};
    *this = LogScalar(big.sign_, big.log_mag_ + std::log1p(-std::exp(diff)));
    return *this;
}

LogScalar& LogScalar::operator-=(const LogScalar& rhs) noexcept { return *this += -rhs; }

LogScalar& LogScalar::operator*=(const LogScalar& rhs) noexcept {
    if (sign_ == 0 || rhs.sign_ == 0) return *this = LogScalar{};
    *this = LogScalar(sign_ * rhs.sign_, log_mag_ + rhs.log_mag_);
    return *this;
}

LogScalar& LogScalar::operator/=(const LogScalar& rhs) {
    if (rhs.sign_ == 0) throw DomainError("LogScalar: division by zero");
    if (sign_ == 0) return *this;
    *this = LogScalar(sign_ * rhs.sign_, log_mag_ - rhs.log_mag_);
    return *this;
}

std::strong_ordering operator<=>(const LogScalar& a, const LogScalar& b) noexcept {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    if (a.sign_ == 0 || a.log_mag_ == b.log_mag_) return std::strong_ordering::equal;
    const bool mag_less = a.log_mag_ < b.log_mag_;
    if (a.sign_ > 0) return mag_less ? std::strong_ordering::less : std::strong_ordering::greater;
    return mag_less ? std::strong_ordering::greater : std::strong_ordering::less;
}

LogScalar log_add(const LogScalar& a, const LogScalar& b) noexcept { return a + b; }
LogScalar log_mul(const LogScalar& a, const LogScalar& b) noexcept { return a * b; }
LogScalar log_div(const LogScalar& a, const LogScalar& b) { return a / b; }
LogScalar log_exp(LogScalar::log_type x) noexcept { return LogScalar::exp(x); }
LogScalar to_log(long double x) noexcept { return LogScalar::from_real(x); }
long double to_real(const LogScalar& x) noexcept { return x.to_real(); }

std::ostream& operator<<(std::ostream& os, const LogScalar& x) {
    if (x.is_zero()) return os << "0";
    return os << (x.sign() < 0 ? "-" : "+") << "exp(" << static_cast<double>(x.log_mag()) << ")";
}

}  // namespace volgap
