#include "volgap/special_fns.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "volgap/errors.hpp"

namespace volgap {

namespace {

constexpr long double kE = std::numbers::e_v<long double>;
constexpr long double kInvE = 1.0L / kE;
constexpr long double kSqrtPi = 1.772453850905516027298167483341145182798L;
constexpr long double kLn2 = std::numbers::ln2_v<long double>;

// Direct evaluation stays finite in long double up to about s = 1750.
constexpr int kDirectTwiceLimit = 3000;

void require_dimension(int n) {
    if (n < 2) throw DomainError("dimension n must be >= 2, got " + std::to_string(n));
}

}  // namespace

HalfInteger::HalfInteger(int twice_value) : twice_(twice_value) {
    if (twice_value < 1) {
        throw DomainError("Gamma(s,1) requires s > 0, got s = " + std::to_string(twice_value) + "/2");
    }
}

long double erf_one() noexcept {
    // erf(1) = 2/sqrt(pi) sum_k (-1)^k / (k! (2k+1))
    long double sum = 0.0L;
    long double inv_factorial = 1.0L;
    for (int k = 0;; ++k) {
        const long double term = inv_factorial / (2 * k + 1);
        sum += (k % 2 == 0) ? term : -term;
        if (term < 1e-17L) break;
        inv_factorial /= (k + 1);
    }
    return 2.0L / kSqrtPi * sum;
}

long double upper_incomplete_gamma_at_one_ext(HalfInteger s) {
    const int twice = s.twice_value();
    if (s.is_integer()) {
        const int m = twice / 2;
        long double factorial = 1.0L;  // (m-1)!
        long double partial = 0.0L;    // sum_{j<m} 1/j!
        long double inv_fact = 1.0L;
        for (int j = 0; j < m; ++j) {
            partial += inv_fact;
            inv_fact /= (j + 1);
            if (j > 0) factorial *= j;
        }
        return factorial * kInvE * partial;
    }
    long double g = kSqrtPi * (1.0L - erf_one());
    for (int t = 1; t < twice; t += 2) {
        g = (t / 2.0L) * g + kInvE;
    }
    return g;
}

double upper_incomplete_gamma_at_one(HalfInteger s) {
    const long double g = upper_incomplete_gamma_at_one_ext(s);
    if (!(g <= std::numeric_limits<double>::max())) {
        throw std::overflow_error("Gamma(s,1) exceeds double range at s = " + std::to_string(s.value()));
    }
    return static_cast<double>(g);
}

long double log_upper_incomplete_gamma_at_one(HalfInteger s) {
    if (s.twice_value() <= kDirectTwiceLimit) return std::log(upper_incomplete_gamma_at_one_ext(s));
    // Gamma(s,1) = Gamma(s) (1 - P(s,1)) with
    // P(s,1) = e^{-1} / Gamma(s+1) * sum_k 1 / ((s+1)...(s+k)).
    const long double sv = s.value();
    long double series = 1.0L;
    long double term = 1.0L;
    for (int k = 1; k < 200 && term > 1e-21L * series; ++k) {
        term /= (sv + k);
        series += term;
    }
    const long double log_p = -1.0L - std::lgamma(sv + 1.0L) + std::log(series);
    return std::lgamma(sv) + std::log1p(-std::exp(log_p));
}

LogScalar cly_constant_log(int n) {
    require_dimension(n);
    const long double half_n = n / 2.0L;
    const long double log_c =
        half_n * std::log(static_cast<long double>(n)) + 1.0L + log_upper_incomplete_gamma_at_one(HalfInteger(n)) - kLn2;
    return LogScalar::exp(log_c);
}

double cly_constant(int n) {
    require_dimension(n);
    long double c = 0.0L;
    if (n <= kDirectTwiceLimit) {
        c = std::pow(static_cast<long double>(n), n / 2.0L) * kE * upper_incomplete_gamma_at_one_ext(HalfInteger(n)) / 2.0L;
    }
    if (!std::isfinite(c) || c == 0.0L) c = cly_constant_log(n).to_real();
    if (!(c <= std::numeric_limits<double>::max())) {
        throw std::overflow_error("C_n exceeds double range at n = " + std::to_string(n));
    }
    return static_cast<double>(c);
}

long double scaled_cly_exponent(int n, double alpha) {
    require_dimension(n);
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    const long double log_c = cly_constant_log(n).log_mag();
    if (log_c < 700.0L) {
        const long double c = std::pow(static_cast<long double>(n), n / 2.0L) * kE *
                              upper_incomplete_gamma_at_one_ext(HalfInteger(n)) / 2.0L;
        return static_cast<long double>(alpha) * n * c;
    }
    return std::exp(std::log(static_cast<long double>(alpha) * n) + log_c);
}

}  // namespace volgap
