#pragma once
// Reference implementations used only by the tests. They take different
// routes from the library (quadrature, closed product formulas, direct sums)
// so agreement is evidence rather than tautology.

#include <cmath>
#include <cstdint>
#include <functional>

namespace oracle {

inline long double simpson(const std::function<long double(long double)>& f, long double a, long double b,
                           long double fa, long double fm, long double fb, long double whole, long double eps,
                           int depth) {
    const long double m = (a + b) / 2;
    const long double lm = (a + m) / 2;
    const long double rm = (m + b) / 2;
    const long double flm = f(lm);
    const long double frm = f(rm);
    const long double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const long double right = (b - m) / 6 * (fm + 4 * frm + fb);
    const long double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15 * eps) return left + right + delta / 15;
    return simpson(f, a, m, fa, flm, fm, left, eps / 2, depth - 1) +
           simpson(f, m, b, fm, frm, fb, right, eps / 2, depth - 1);
}

/// Adaptive Simpson; eps is relative to the first estimate over [a, b].
inline long double integrate(const std::function<long double(long double)>& f, long double a, long double b,
                             long double eps) {
    const long double fa = f(a);
    const long double fb = f(b);
    const long double fm = f((a + b) / 2);
    const long double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return simpson(f, a, b, fa, fm, fb, whole, eps * std::fabs(whole), 30);
}

/// Gamma(s, 1) by adaptive Simpson on [1, 1 + L]; the dropped tail is below
/// e^{-L} (1 + L)^{s-1} which is negligible for the L chosen here.
inline long double upper_gamma_at_one(long double s) {
    const long double upper = 1.0L + 90.0L + 4.0L * s;
    const auto f = [s](long double t) { return std::exp(-t + (s - 1.0L) * std::log(t)); };
    // Split so every panel sees a bounded dynamic range.
    long double total = 0.0L;
    for (long double a = 1.0L; a < upper; a += 4.0L) {
        total += integrate(f, a, std::min(a + 4.0L, upper), 1e-14L);
    }
    return total;
}

inline long double cly_constant(int n) {
    return std::pow(static_cast<long double>(n), n / 2.0L) * std::exp(1.0L) * upper_gamma_at_one(n / 2.0L) / 2.0L;
}

/// m_k = (2k + n - 1) (k + n - 2)! / (k! (n - 1)!), exact while it fits.
inline std::uint64_t multiplicity(int n, int k) {
    if (k == 0) return 1;
    // C(k + n - 2, k) built incrementally stays integral at every step.
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - 2 + i) / static_cast<std::uint64_t>(i);
    const std::uint64_t num = c * static_cast<std::uint64_t>(2 * k + n - 1);
    return num / static_cast<std::uint64_t>(n - 1);
}

/// Sum of m_k e^{-k(k+n-1)t} for k < levels, multiplicities through lgamma.
inline long double heat_trace_excess(int n, long double t, int levels = 400) {
    long double sum = 0.0L;
    for (int k = 1; k < levels; ++k) {
        const long double log_m = std::log(2.0L * k + n - 1) + std::lgamma(static_cast<long double>(k + n - 1)) -
                                  std::lgamma(static_cast<long double>(k + 1)) -
                                  std::lgamma(static_cast<long double>(n));
        sum += std::exp(log_m - static_cast<long double>(k) * (k + n - 1) * t);
    }
    return sum;
}

inline long double trace_bound_excess(int n, long double t, long double cn) {
    return (n + 1 + cn / t) * std::exp(-n * t);
}

/// B_{n,alpha} in plain floating point; only valid while e^{alpha n C_n} fits.
inline long double b_alpha(int n, long double alpha, long double cn) {
    return alpha * n + alpha + 1.0L + alpha * std::exp(alpha * n * cn);
}

inline long double h(long double alpha) {
    return 4.0L + (1.0L + 2.0L * alpha - 2.0L * alpha * alpha) * std::exp(2.0L * alpha);
}

inline long double f1(long double alpha, int n, int ell, long double cn) {
    return (alpha * ell - 1.0L) / b_alpha(n, alpha, cn);
}

/// g(beta) from the monotonicity lemma, with e^{beta n C_n} kept explicit.
inline long double g(int n, long double beta, long double cn) {
    const long double s = beta * n * cn;
    return (n + 1.0L + (1.0L + s) * std::exp(s)) / (beta * s * std::exp(s) - 1.0L);
}

}  // namespace oracle
