#include "volgap/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "volgap/bounds.hpp"
#include "volgap/special_fns.hpp"

namespace volgap {

namespace {

LogScalar real(long double x) { return LogScalar::from_real(x); }

// Stationarity equation in the offset d = alpha * ell - 1, with a = nC_n / ell:
//   F(d) = a d (1 + d) - 1 - (ell + n + 1) e^{-a (1 + d)}.
// The f1' numerator equals -e^{a (1 + d)} F(d).
struct OffsetEquation {
    long double a;
    long double k;

    [[nodiscard]] long double quadratic(long double d) const { return a * d * (1.0L + d); }
    [[nodiscard]] long double operator()(long double d) const {
        return quadratic(d) - 1.0L - k * std::exp(-(a + a * d));
    }
    [[nodiscard]] long double normalised(long double d) const {
        return (*this)(d) / std::max(1.0L, quadratic(d));
    }
};

OffsetEquation offset_equation(int n, int ell) {
    if (n < 2) throw DomainError("dimension n must be >= 2, got " + std::to_string(n));
    if (ell < 1) throw DomainError("codimension ell must be >= 1");
    return OffsetEquation{scaled_cly_exponent(n, 1.0) / ell, static_cast<long double>(ell + n + 1)};
}

// log f1 evaluated at alpha = (1 + d) / ell without rounding alpha to double.
long double log_f1_at_offset(const OffsetEquation& eq, int n, int ell, long double d) {
    const long double alpha = (1.0L + d) / ell;
    const LogScalar denom = real(alpha * (n + 1) + 1.0L) + real(alpha) * LogScalar::exp(eq.a + eq.a * d);
    return std::log(d) - denom.log_mag();
}

}  // namespace

LogScalar f1(double alpha, int n, int ell) {
    if (ell < 1) throw DomainError("codimension ell must be >= 1");
    return real(static_cast<long double>(alpha) * ell - 1.0L) / b_alpha(n, alpha);
}

LogScalar f1_prime_numerator(double alpha, int n, int ell) {
    if (ell < 1) throw DomainError("codimension ell must be >= 1");
    const long double s = scaled_cly_exponent(n, alpha);  // alpha n C_n
    const long double coeff = 1.0L + s - static_cast<long double>(ell) * alpha * s;
    return real(coeff) * LogScalar::exp(s) + real(static_cast<long double>(ell + n + 1));
}

LogScalar f1_prime(double alpha, int n, int ell) {
    const LogScalar b = b_alpha(n, alpha);
    return f1_prime_numerator(alpha, n, ell) / (b * b);
}

double h(double alpha) {
    return 4.0 + (1.0 + 2.0 * alpha - 2.0 * alpha * alpha) * std::exp(2.0 * alpha);
}

CriticalPoint optimal_alpha(int n, int ell, long double tol) {
    if (!(tol > 0.0L)) throw DomainError("tolerance must be positive");
    const OffsetEquation eq = offset_equation(n, ell);

    long double lo = 0.25L / std::max(eq.a, 1.0L);
    long double hi = 2.0L;
    if (detail::sign_of(eq(lo), "lower offset bound") >= 0) {
        throw BracketError("stationarity equation is not negative near alpha = 1/ell");
    }
    int doublings = 0;
    while (detail::sign_of(eq(hi), "upper offset bound") <= 0) {
        if (++doublings > 60) throw BracketError("no critical point found after 60 bracket doublings");
        lo = hi;
        hi *= 2.0L;
    }

    int iterations = 0;
    while (hi - lo > tol * std::min(1.0L, hi)) {
        // Geometric midpoints first: the offset can be as small as 1e-380.
        const long double mid = hi > 2.0L * lo ? std::sqrt(lo) * std::sqrt(hi) : lo + (hi - lo) / 2.0L;
        if (mid <= lo || mid >= hi) break;
        ++iterations;
        const int s = detail::sign_of(eq(mid), "offset midpoint");
        if (s == 0) {
            lo = std::nextafter(mid, 0.0L);
            hi = std::nextafter(mid, 3.0L * hi);
            break;
        }
        (s < 0 ? lo : hi) = mid;
    }
    const long double root = lo + (hi - lo) / 2.0L;
    BasicRootResult<long double> r{lo, hi, root, eq.normalised(root), iterations};
    return CriticalPoint{r, 1.0L / ell};
}

CriticalPoint gamma_n(int n, long double tol) { return optimal_alpha(n, 1, tol); }

bool is_local_maximum(const CriticalPoint& cp, int n, int ell, long double tol) {
    const OffsetEquation eq = offset_equation(n, ell);
    const bool sign_change = eq(cp.offset.bracket_lo) < 0.0L && eq(cp.offset.bracket_hi) > 0.0L;

    const long double d = cp.offset.root;
    const long double step = 10.0L * tol;
    const long double at_root = log_f1_at_offset(eq, n, ell, d);
    const long double slack = 64.0L * std::numeric_limits<long double>::epsilon() * std::max(1.0L, std::fabs(at_root));
    const bool sampled = at_root + slack >= log_f1_at_offset(eq, n, ell, d * (1.0L - step)) &&
                         at_root + slack >= log_f1_at_offset(eq, n, ell, d * (1.0L + step));
    return sign_change && sampled;
}

LogScalar leml_g(int n, double beta) {
    const long double s = scaled_cly_exponent(n, beta);  // beta n C_n
    // Divide through by e^s so nothing overflows and no precision is lost.
    const long double decay = std::exp(-s);
    const long double num = (n + 1.0L) * decay + 1.0L + s;
    const long double den = beta * s - decay;
    if (!(den > 0.0L)) throw DomainError("g(beta) undefined: beta^2 nC_n e^{beta nC_n} <= 1");
    return real(num / den);
}

LogScalar g_prime_numerator(int n, double beta) {
    const long double c = scaled_cly_exponent(n, 1.0);
    const long double b = beta;
    const long double s = b * c;
    const LogScalar first = real(c * (2.0L * b + b * s)) * LogScalar::exp(2.0L * s);
    const LogScalar second =
        real(c * (s * (1.0L + b * (n + 1)) + 2.0L * (b * n + b + 1.0L))) * LogScalar::exp(s);
    return -(first + second);
}

LogScalar g_prime_numerator_split(int n, double beta) {
    const long double c = scaled_cly_exponent(n, 1.0);
    const long double b = beta;
    const long double s = b * c;
    const LogScalar es = LogScalar::exp(s);
    const LogScalar q = real(b * s) * es - LogScalar::one();             // beta^2 c e^s - 1
    const LogScalar p = real(n + 1.0L) + real(1.0L + s) * es;            // n + 1 + (1 + s) e^s
    const LogScalar part_i = real(c) * es * real(2.0L + s) * q;          // P' Q
    const LogScalar part_ii = -(real(c) * es * real(2.0L * b + b * s) * p);  // -P Q'
    return part_i + part_ii;
}

std::vector<GPrimeSample> g_prime_sign_scan(int n, const std::vector<double>& beta_grid) {
    std::vector<GPrimeSample> out;
    out.reserve(beta_grid.size());
    const long double c = scaled_cly_exponent(n, 1.0);
    for (double beta : beta_grid) {
        GPrimeSample sample{beta, 0, 0.0L, false};
        const long double s = beta * c;
        sample.domain_ok = beta > 0.0 && std::log(static_cast<long double>(beta) * s) + s > 0.0L;
        if (sample.domain_ok) {
            const LogScalar num = g_prime_numerator(n, beta);
            sample.sign = num.sign();
            sample.log_mag = num.log_mag();
        }
        out.push_back(sample);
    }
    return out;
}

double aux_root_tilde_gamma3(double c3) { return (1.0 + std::sqrt(1.0 + 4.0 / (3.0 * c3))) / 2.0; }
double aux_root_tilde_gamma3() { return aux_root_tilde_gamma3(cly_constant(3)); }

double phi3_threshold(double c3) {
    constexpr double gamma = 1.3;
    return 3.0 * c3 * gamma * gamma - 3.0 * c3 * gamma - 1.0;
}
double phi3_threshold() { return phi3_threshold(cly_constant(3)); }

PsiCheck psi_decreasing_check(int n_lo, int n_hi) {
    if (n_lo < 4 || n_hi > 200 || n_lo >= n_hi) throw DomainError("psi check range must satisfy 4 <= lo < hi <= 200");
    const auto log_psi = [](int n) { return std::log(static_cast<long double>(n + 2)) - 20.0L * n; };
    PsiCheck out{n_lo, n_hi, true, log_psi(n_lo), -1};
    for (int n = n_lo; n < n_hi; ++n) {
        if (!(log_psi(n + 1) < log_psi(n))) {
            out.decreasing = false;
            out.first_violation = n;
            break;
        }
    }
    return out;
}

}  // namespace volgap
