#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "volgap/gap_table.hpp"
#include "volgap/log_scalar.hpp"

namespace volgap {

enum class ClaimStatus { Pass, Fail, Skipped };

std::string_view to_string(ClaimStatus s) noexcept;

/// A named value backing a verdict. Log-domain quantities are stored as
/// log10 |x| with the sign kept separately.
struct Witness {
    std::string name;
    long double value = 0.0L;
    bool log10_scale = false;
    int sign = 1;

    static Witness plain(std::string name, long double value);
    static Witness log10(std::string name, const LogScalar& x);
};

struct ClaimVerdict {
    std::string claim_id;
    std::string anchor;  // the statement being checked
    ClaimStatus status = ClaimStatus::Skipped;
    std::vector<Witness> witnesses;
    double tolerance = 0.0;
    std::string grid_note;
};

/// Grid bounds and tolerances for run_claim_suite.
struct SuiteConfig {
    IntRange n{2, 30};
    IntRange ell{1, 30};
    double alpha = 1.43;
    IntRange trace_n{2, 10};
    double t_lo = 1.0;
    double t_hi = 10.0;
    double t_step = 0.25;
    IntRange cn_monotone{4, 200};
    long double tol = 1e-12L;
    /// Test hook: relative perturbation applied to C_n in the constant-level
    /// claims. Zero in every real run.
    double cn_perturbation = 0.0;

    /// Throws UsageError when any bound is outside the supported ranges.
    void validate() const;
};

/// Runs every claim, never stopping at the first failure. Exceptions inside
/// a claim become FAIL verdicts. Output is sorted by claim_id and claim ids
/// are unique.
std::vector<ClaimVerdict> run_claim_suite(const SuiteConfig& config);

/// Identifiers run_claim_suite always produces, sorted.
std::vector<std::string> claim_ids();

[[nodiscard]] bool all_passed(const std::vector<ClaimVerdict>& verdicts) noexcept;

std::string render_verdicts_pretty(const std::vector<ClaimVerdict>& verdicts);
std::string render_verdicts_json(const std::vector<ClaimVerdict>& verdicts);

}  // namespace volgap
