#pragma once

#include "volgap/log_scalar.hpp"

namespace volgap {

/// s = twice_value / 2, the argument n/2 of Gamma(n/2, 1).
class HalfInteger {
public:
    /// Throws DomainError when twice_value < 1 (s <= 0).
    explicit HalfInteger(int twice_value);

    [[nodiscard]] int twice_value() const noexcept { return twice_; }
    [[nodiscard]] double value() const noexcept { return twice_ / 2.0; }
    [[nodiscard]] bool is_integer() const noexcept { return twice_ % 2 == 0; }

private:
    int twice_;
};

/// erf(1) from its Maclaurin series, truncated once a term drops below 1e-17.
long double erf_one() noexcept;

/// Upper incomplete gamma Gamma(s, 1) = int_1^inf e^{-t} t^{s-1} dt.
///
/// Integer s uses (s-1)! e^{-1} sum_{j<s} 1/j!; half-odd s climbs the
/// recurrence Gamma(s+1,1) = s Gamma(s,1) + e^{-1} from
/// Gamma(1/2,1) = sqrt(pi) (1 - erf(1)). Throws std::overflow_error when the
/// value leaves double range (s > ~171).
double upper_incomplete_gamma_at_one(HalfInteger s);

/// Same value in extended precision; finite for s up to ~1750.
long double upper_incomplete_gamma_at_one_ext(HalfInteger s);

/// log Gamma(s, 1) for any s >= 1/2.
long double log_upper_incomplete_gamma_at_one(HalfInteger s);

/// C_n = n^{n/2} e Gamma(n/2, 1) / 2. Requires n >= 2 (DomainError);
/// throws std::overflow_error once C_n exceeds double range (n > ~164).
double cly_constant(int n);

/// C_n in log domain, valid for every n >= 2.
LogScalar cly_constant_log(int n);

/// alpha * n * C_n, the exponent of the heat-trace tuning choice t = alpha n C_n.
/// Extended precision; finite for n well past 200.
long double scaled_cly_exponent(int n, double alpha);

}  // namespace volgap
