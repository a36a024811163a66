#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace volgap {

using BigInt = boost::multiprecision::cpp_int;

/// Level k of the Laplace spectrum on the round unit sphere S^n.
struct SpectralLevel {
    int n = 0;
    int k = 0;
    long double eigenvalue = 0.0L;  // k (k + n - 1)
    BigInt multiplicity;            // dimension of degree-k spherical harmonics
};

/// Exact multiplicity of eigenvalue k(k+n-1) on S^n:
/// 1 for k = 0, n + 1 for k = 1, binom(n+k, n) - binom(n+k-2, n) otherwise.
/// Accepts n >= 1 so that dimension recurrences can reach S^1.
BigInt sphere_multiplicity(int n, int k);

/// Throws DomainError for n < 2 or k < 0.
SpectralLevel sphere_level(int n, int k);

struct TraceResult {
    double value = 0.0;
    double excess = 0.0;      // value - 1, summed separately so it survives rounding

    int levels_used = 0;
    double tail_bound = 0.0;  // certified bound on the omitted remainder
};

/// Heat-kernel trace sum_k m_k e^{-k(k+n-1) t} on S^n.
///
/// Levels are added until the next term is less than half the current one,
/// below eps times the partial sum, and small enough that twice it is below
/// 1e-14 of the sum. Term ratios decrease monotonically past that point, so
/// the remainder is at most twice the first omitted term.
///
/// Throws DomainError for n < 2, t <= 0, or eps outside (0, 1e-6].
TraceResult heat_trace(int n, double t, double eps = 1e-15);

/// Closed-form trace bound 1 + (n+1) e^{-nt} + C_n t^{-1} e^{-nt}.
/// Only asserted for t >= 1; smaller t throws PreconditionError.
double trace_bound(int n, double t);

/// trace_bound(n, t) - 1 = (n+1) e^{-nt} + C_n t^{-1} e^{-nt}, kept separately
/// so comparisons at large t are not swamped by the leading 1.
double trace_bound_excess(int n, double t);

}  // namespace volgap
