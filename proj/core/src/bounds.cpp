#include "volgap/bounds.hpp"

#include <cmath>
#include <string>

#include "volgap/errors.hpp"
#include "volgap/special_fns.hpp"

namespace volgap {

namespace {

void require_dimension(int n) {
    if (n < 2) throw DomainError("dimension n must be >= 2, got " + std::to_string(n));
}

LogScalar real(long double x) { return LogScalar::from_real(x); }

struct ResolvedCorrection {
    long double d_n;
    long double lambda1;
};

ResolvedCorrection resolve(int n, const CorrectionOptions& opts) {
    const long double d = opts.d_n.value_or(n + 4.0);
    const long double lambda1 = opts.lambda1.value_or(static_cast<double>(n));
    if (!(d > 0.0L)) throw DomainError("D_n must be positive");
    if (!(lambda1 > 0.0L && lambda1 <= n)) throw DomainError("lambda_1 must lie in (0, n]");
    return {d, lambda1};
}

LogScalar thm2_correction(const GapParams& p, const CorrectionOptions& opts) {
    const long double e = correction_exponent(p.n(), p.ell(), p.alpha(), opts);
    return real(static_cast<long double>(p.alpha()) * (p.n() + p.ell() + 2)) * LogScalar::exp(e);
}

}  // namespace

std::string_view to_string(GapVariant v) noexcept {
    switch (v) {
        case GapVariant::Cly: return "CLY";
        case GapVariant::Thm1: return "THM1";
        case GapVariant::Thm2Case1: return "THM2_CASE1";
        case GapVariant::Thm2Case2: return "THM2_CASE2";
    }
    return "?";
}

GapParams::GapParams(int n, int ell, double alpha) : n_(n), ell_(ell), alpha_(alpha) {
    require_dimension(n);
    if (ell < 1) throw DomainError("codimension ell must be >= 1, got " + std::to_string(ell));
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    if (!(static_cast<long double>(alpha) * ell - 1.0L > 0.0L)) {
        throw DomainError("alpha * ell - 1 must be positive for a volume gap");
    }
}

LogScalar b_alpha(int n, double alpha) {
    require_dimension(n);
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    const long double a = alpha;
    const LogScalar linear = real(a * n + a + 1.0L);
    const LogScalar exponential = real(a) * LogScalar::exp(scaled_cly_exponent(n, alpha));
    return linear + exponential;
}

LogScalar b_cly(int n) { return b_alpha(n, kClyAlpha); }

long double correction_exponent(int n, int ell, double alpha, const CorrectionOptions& opts) {
    require_dimension(n);
    if (ell < 1) throw DomainError("codimension ell must be >= 1");
    const auto [d, lambda1] = resolve(n, opts);
    const long double growth = std::pow(static_cast<long double>(n + 2 * ell), 2.0L / n) *
                               std::pow(4.0L, 1.0L / n);
    return scaled_cly_exponent(n, alpha) * (1.0L - d * growth * lambda1 / n);
}

GapBound gap_excess(const GapParams& params, GapVariant variant, const CorrectionOptions& opts) {
    const int n = params.n();
    const int ell = params.ell();
    const long double a = params.alpha();

    GapBound out{params, variant, params.alpha(), {}, {}, {}, {}, {}};
    switch (variant) {
        case GapVariant::Cly:
            out.effective_alpha = kClyAlpha;
            out.numerator = real(2.0L * ell - 1.0L);
            out.denominator = b_cly(n);
            break;
        case GapVariant::Thm1:
            out.numerator = real(a * ell - 1.0L);
            out.denominator = b_alpha(n, params.alpha());
            break;
        case GapVariant::Thm2Case1:
            out.correction = thm2_correction(params, opts);
            out.numerator = real(a * ell - 1.0L) + out.correction;
            out.denominator = b_alpha(n, params.alpha());
            break;
        case GapVariant::Thm2Case2:
            out.numerator = real(2.0L * a * ell - 1.0L);
            out.denominator = b_alpha(n, params.alpha());
            break;
    }
    out.excess = out.numerator / out.denominator;
    // Grouped so the O(1) numerator factor is not absorbed into the huge denominators.
    out.ratio_vs_cly = (out.numerator / real(2.0L * ell - 1.0L)) * (b_cly(n) / out.denominator);
    return out;
}

GapBound theorem2_unconditional(const GapParams& params, const CorrectionOptions& opts) {
    GapBound first = gap_excess(params, GapVariant::Thm2Case1, opts);
    GapBound second = gap_excess(params, GapVariant::Thm2Case2, opts);
    return second.excess < first.excess ? second : first;
}

LogScalar min_volume_ratio_from_multiplicity(int n, int k, long double t) {
    require_dimension(n);
    if (k < 0) throw DomainError("multiplicity index k must be >= 0");
    if (!(t > 0.0L)) throw DomainError("t must be positive");
    const LogScalar et = LogScalar::exp(t);
    const LogScalar tail = real(n) * cly_constant_log(n) / real(t);
    return (real(k) + et) / (et + real(n + 1.0L) + tail);
}

double cheng_yang_bound(int n, int k, double lambda1, std::optional<double> d_n) {
    require_dimension(n);
    if (k < 1) throw DomainError("k must be >= 1");
    const auto [d, l1] = resolve(n, CorrectionOptions{d_n, lambda1});
    return static_cast<double>(d * std::pow(static_cast<long double>(k), 2.0L / n) * l1);
}

Thm2Ratios improvement_ratio_thm2(const GapParams& params, const CorrectionOptions& opts) {
    const long double a = params.alpha();
    const long double base = a * params.ell() - 1.0L;
    const LogScalar over_one = thm2_correction(params, opts) / real(base);
    return Thm2Ratios{LogScalar::one() + over_one, over_one,
                      real(2.0L * a * params.ell() - 1.0L) / real(base)};
}

}  // namespace volgap
