#pragma once

#include <cmath>
#include <concepts>
#include <string>
#include <vector>

#include "volgap/errors.hpp"
#include "volgap/log_scalar.hpp"

namespace volgap {

template <std::floating_point T>
struct BasicRootResult {
    T bracket_lo{};  // final bracket, f changes sign across it
    T bracket_hi{};
    T root{};
    T residual{};    // f(root), possibly normalised (see the producing function)
    int iterations = 0;
};

using RootResult = BasicRootResult<double>;

namespace detail {

template <std::floating_point T>
int sign_of(T v, const char* where) {
    if (std::isnan(v)) throw EvaluationError(std::string("objective returned NaN at ") + where);
    return (v > 0) - (v < 0);
}

}  // namespace detail

/// Plain bisection to bracket width <= tol.
///
/// Requires f(lo) and f(hi) of strictly opposite sign (BracketError otherwise)
/// and throws EvaluationError if f yields NaN. Deterministic; at most
/// ceil(log2((hi - lo) / tol)) halvings.
template <std::floating_point T, std::invocable<T> F>
BasicRootResult<T> bisect(F&& f, T lo, T hi, T tol) {
    if (!(tol > 0)) throw DomainError("bisect: tol must be positive");
    if (!(lo < hi)) throw BracketError("bisect: need lo < hi");
    const int s_lo = detail::sign_of<T>(f(lo), "lower bracket end");
    const int s_hi = detail::sign_of<T>(f(hi), "upper bracket end");
    if (s_lo * s_hi >= 0) throw BracketError("bisect: no sign change across bracket");

    int iterations = 0;
    while (hi - lo > tol) {
        const T mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;  // bracket at floating resolution
        ++iterations;
        const int s_mid = detail::sign_of<T>(f(mid), "bisection midpoint");
        if (s_mid == 0) {
            const T half = tol / 2;
            return {std::max(lo, mid - half), std::min(hi, mid + half), mid, T{0}, iterations};
        }
        (s_mid == s_lo ? lo : hi) = mid;
    }
    const T root = lo + (hi - lo) / 2;
    return {lo, hi, root, static_cast<T>(f(root)), iterations};
}

/// A critical point written as scale * (1 + offset) with offset > 0.
///
/// Both gamma_n (scale 1) and the optimal alpha (scale 1/ell) sit at
/// 1 + O(1 / (n C_n)) in scaled units, which is below double resolution for
/// n >= ~15, so the solve runs on the offset itself.
struct CriticalPoint {
    BasicRootResult<long double> offset;
    long double scale = 1.0L;
    /// scale * (1 + offset); rounds to scale once the offset underflows the mantissa.
    [[nodiscard]] long double value() const noexcept { return scale * (1.0L + offset.root); }
};

// -- objectives ------------------------------------------------------------

/// f1(alpha) = (alpha ell - 1) / (alpha n + alpha + 1 + alpha e^{alpha n C_n}).
LogScalar f1(double alpha, int n, int ell);

/// Closed-form numerator of f1':
/// -ell (alpha^2 n C_n e^{alpha n C_n} - 1) + n + 1 + (1 + alpha n C_n) e^{alpha n C_n}.
LogScalar f1_prime_numerator(double alpha, int n, int ell);

/// f1' = numerator / B_{n,alpha}^2.
LogScalar f1_prime(double alpha, int n, int ell);

/// 4 + (1 + 2 alpha - 2 alpha^2) e^{2 alpha}: the f1' numerator at (n, ell) = (2, 1).
double h(double alpha);

// -- critical points -------------------------------------------------------

/// Default absolute tolerance on the tuning parameter.
inline constexpr long double kDefaultTol = 1e-12L;

/// Maximiser of f1 over alpha at fixed (n, ell). Writing alpha = (1 + d)/ell the
/// stationarity condition becomes
///   (nC_n/ell) d (1 + d) - 1 = (ell + n + 1) e^{-(nC_n/ell)(1 + d)},
/// strictly increasing in d with a negative value at d = 0, hence a unique root.
/// The residual reported is that equation's defect divided by max(1, (nC_n/ell) d (1+d)).
/// Throws BracketError if 60 upward doublings fail to bracket.
CriticalPoint optimal_alpha(int n, int ell, long double tol = kDefaultTol);

/// gamma_n > 1 solving (gamma^2 nC_n - gamma nC_n - 1) e^{gamma nC_n} = n + 2.
/// Equal to optimal_alpha(n, 1).
CriticalPoint gamma_n(int n, long double tol = kDefaultTol);

/// Whether f1 at the optimum is at least f1 at the perturbed points
/// alpha (1 +- 10 tol); also checks the f1' numerator changes sign + to -
/// across the final bracket.
bool is_local_maximum(const CriticalPoint& cp, int n, int ell, long double tol = kDefaultTol);

// -- lemma helpers ---------------------------------------------------------

/// g(beta) = (n + 1 + (1 + beta nC_n) e^{beta nC_n}) / (beta^2 nC_n e^{beta nC_n} - 1).
/// Throws DomainError when the denominator is not positive.
LogScalar leml_g(int n, double beta);

/// Numerator of g'(beta) in the simplified closed form
/// -nC_n e^{2 beta nC_n}(2 beta + beta^2 nC_n) - nC_n e^{beta nC_n}[beta nC_n (1 + beta(n+1)) + 2(beta n + beta + 1)].
LogScalar g_prime_numerator(int n, double beta);

/// Same numerator assembled from the quotient-rule pieces I and II before simplification.
LogScalar g_prime_numerator_split(int n, double beta);

struct GPrimeSample {
    double beta = 0.0;
    int sign = 0;
    long double log_mag = 0.0L;  // log |numerator|
    bool domain_ok = true;       // beta^2 nC_n e^{beta nC_n} > 1
};

/// Sign of g' on each grid point; points failing the domain condition are
/// flagged rather than aborting the scan.
std::vector<GPrimeSample> g_prime_sign_scan(int n, const std::vector<double>& beta_grid);

/// Positive root of 3C_3 x^2 - 3C_3 x - 1: (1 + sqrt(1 + 4/(3 C_3))) / 2.
double aux_root_tilde_gamma3();
double aux_root_tilde_gamma3(double c3);

/// phi_3(1.3) = 3C_3 * 1.3 * 0.3 - 1 = 1.17 C_3 - 1.
double phi3_threshold();
double phi3_threshold(double c3);

struct PsiCheck {
    int n_lo = 0;
    int n_hi = 0;
    bool decreasing = false;
    long double log_psi_lo = 0.0L;  // log psi(n_lo)
    int first_violation = -1;       // n where psi(n+1) >= psi(n), or -1
};

/// psi(n) = (n + 2) e^{-20 n} strictly decreasing on [n_lo, n_hi], compared in log form.
/// Requires 4 <= n_lo < n_hi <= 200.
PsiCheck psi_decreasing_check(int n_lo, int n_hi);

}  // namespace volgap
