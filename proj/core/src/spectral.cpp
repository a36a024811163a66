#include "volgap/spectral.hpp"

#include <cmath>
#include <string>

#include "volgap/errors.hpp"
#include "volgap/log_scalar.hpp"
#include "volgap/special_fns.hpp"

namespace volgap {

namespace {

BigInt binomial(int top, int bottom) {
    if (bottom < 0 || top < bottom) return 0;
    BigInt result = 1;
    for (int i = 1; i <= bottom; ++i) {
        result *= top - bottom + i;
        result /= i;
    }
    return result;
}

long double level_term(int n, int k, double t) {
    const long double m = sphere_multiplicity(n, k).convert_to<long double>();
    const long double lambda = static_cast<long double>(k) * (k + n - 1);
    return m * std::exp(-lambda * t);
}

}  // namespace

BigInt sphere_multiplicity(int n, int k) {
    if (n < 1 || k < 0) throw DomainError("sphere_multiplicity requires n >= 1 and k >= 0");
    if (k == 0) return 1;
    if (k == 1) return n + 1;
    return binomial(n + k, n) - binomial(n + k - 2, n);
}

SpectralLevel sphere_level(int n, int k) {
    if (n < 2) throw DomainError("sphere dimension must be >= 2, got " + std::to_string(n));
    if (k < 0) throw DomainError("level index must be >= 0");
    return SpectralLevel{n, k, static_cast<long double>(k) * (k + n - 1), sphere_multiplicity(n, k)};
}

TraceResult heat_trace(int n, double t, double eps) {
    if (n < 2) throw DomainError("sphere dimension must be >= 2, got " + std::to_string(n));
    if (!(t > 0.0)) throw DomainError("heat trace diverges at t <= 0");
    if (!(eps > 0.0 && eps <= 1e-6)) throw DomainError("eps must lie in (0, 1e-6]");

    // Level 0 contributes exactly 1 and level 1 is always summed, so the
    // excess over 1 is resolved even when it is far below double epsilon.
    long double excess = level_term(n, 1, t);
    long double current = excess;
    for (int k = 1;; ++k) {
        const long double next = level_term(n, k + 1, t);
        const long double sum = 1.0L + excess;
        const bool decaying = next < 0.5L * current;
        if (decaying && next < eps * sum && 2.0L * next <= 1e-14L * sum) {
            return TraceResult{static_cast<double>(sum), static_cast<double>(excess), k + 1,
                               static_cast<double>(2.0L * next)};
        }
        excess += next;
        current = next;
    }
}

namespace {

LogScalar bound_excess(int n, double t) {
    if (n < 2) throw DomainError("sphere dimension must be >= 2, got " + std::to_string(n));
    if (!(t >= 1.0)) throw PreconditionError("trace bound is only asserted for t >= 1");
    const long double decay = -static_cast<long double>(n) * t;
    const LogScalar level_one = LogScalar::from_real(n + 1.0L) * LogScalar::exp(decay);
    const LogScalar tail = cly_constant_log(n) / LogScalar::from_real(t) * LogScalar::exp(decay);
    return level_one + tail;
}

}  // namespace

double trace_bound(int n, double t) { return (LogScalar::one() + bound_excess(n, t)).to_double(); }

double trace_bound_excess(int n, double t) { return bound_excess(n, t).to_double(); }

}  // namespace volgap
