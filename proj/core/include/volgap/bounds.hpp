#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "volgap/log_scalar.hpp"

namespace volgap {

inline constexpr double kDefaultAlpha = 1.43;
inline constexpr double kClyAlpha = 2.0;

enum class GapVariant { Cly, Thm1, Thm2Case1, Thm2Case2 };

inline constexpr std::array<GapVariant, 4> kAllVariants{
    GapVariant::Cly, GapVariant::Thm1, GapVariant::Thm2Case1, GapVariant::Thm2Case2};

std::string_view to_string(GapVariant v) noexcept;

/// (n, ell, alpha) with n >= 2, ell >= 1, alpha > 0 and alpha*ell - 1 > 0.
/// The last condition is what makes every gap excess strictly positive.
class GapParams {
public:
    /// Throws DomainError on any violated condition.
    GapParams(int n, int ell, double alpha = kDefaultAlpha);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int ell() const noexcept { return ell_; }
    [[nodiscard]] double alpha() const noexcept { return alpha_; }

private:
    int n_;
    int ell_;
    double alpha_;
};

/// Knobs for the eigenvalue-enhanced gap. Defaults reproduce D_n = n + 4 and
/// the worst case lambda_1 = n.
struct CorrectionOptions {
    std::optional<double> d_n;
    std::optional<double> lambda1;
};

/// vol(M)/vol(S^n) >= 1 + excess, with excess = numerator / denominator.
struct GapBound {
    GapParams params;
    GapVariant variant;
    double effective_alpha;   // 2 for the CLY variant
    LogScalar numerator;
    LogScalar denominator;    // B_n or B_{n,alpha}
    LogScalar correction;     // alpha (n+ell+2) e^{E_{n,ell}} for THM2_CASE1, else zero
    LogScalar excess;
    LogScalar ratio_vs_cly;   // excess / CLY excess at the same (n, ell)
};

/// 2n + 3 + 2 e^{2 n C_n}; identical to b_alpha(n, 2).
LogScalar b_cly(int n);

/// alpha n + alpha + 1 + alpha e^{alpha n C_n}.
LogScalar b_alpha(int n, double alpha);

/// E_{n,ell} = alpha C_n (n - D_n (n+2 ell)^{2/n} 4^{1/n} lambda_1), which with
/// the defaults is alpha n C_n (1 - (n+4)(n+2 ell)^{2/n} 4^{1/n}).
long double correction_exponent(int n, int ell, double alpha, const CorrectionOptions& opts = {});

GapBound gap_excess(const GapParams& params, GapVariant variant, const CorrectionOptions& opts = {});

/// min(THM2_CASE1, THM2_CASE2): the bound that holds whatever the multiplicity k.
GapBound theorem2_unconditional(const GapParams& params, const CorrectionOptions& opts = {});

/// Lower bound on vol(M)/vol(S^n) when eigenvalue n has index k:
/// (k + e^t) / (e^t + n + 1 + n C_n / t). Requires n >= 2, k >= 0, t > 0.
LogScalar min_volume_ratio_from_multiplicity(int n, int k, long double t);

/// Upper bound D_n k^{2/n} lambda_1 on lambda_{k+1}, D_n defaulting to n + 4.
/// Requires n >= 2, k >= 1, 0 < lambda1 <= n.
double cheng_yang_bound(int n, int k, double lambda1, std::optional<double> d_n = std::nullopt);

/// Ratios of the two eigenvalue-enhanced excesses to the THM1 excess.
struct Thm2Ratios {
    LogScalar case_i;           // 1 + alpha (n+ell+2) e^E / (alpha ell - 1)
    LogScalar case_i_over_one;  // case_i - 1, kept exactly
    LogScalar case_ii;          // (2 alpha ell - 1) / (alpha ell - 1)
};

Thm2Ratios improvement_ratio_thm2(const GapParams& params, const CorrectionOptions& opts = {});

}  // namespace volgap
