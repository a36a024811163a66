#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "volgap/bounds.hpp"
#include "volgap/log_scalar.hpp"

namespace volgap {

/// Inclusive integer range lo..hi.
struct IntRange {
    int lo = 0;
    int hi = 0;
    [[nodiscard]] bool empty() const noexcept { return hi < lo; }
    [[nodiscard]] int size() const noexcept { return empty() ? 0 : hi - lo + 1; }
};

/// Parses "a:b" (or a single "a"). Throws UsageError on malformed or empty ranges.
IntRange parse_range(std::string_view text);

enum class TableFormat { Csv, Json, Pretty };

/// Throws UsageError for anything but csv, json, pretty.
TableFormat parse_table_format(std::string_view text);

struct GapTableRow {
    int n = 0;
    int ell = 0;
    double alpha = 0.0;  // effective alpha (2 on CLY rows)
    GapVariant variant = GapVariant::Cly;
    long double log10_B = 0.0L;
    long double log10_excess = 0.0L;
    LogScalar ratio_vs_cly;
};

inline constexpr std::string_view kGapTableHeader = "n,ell,alpha,variant,log10_B,log10_excess,ratio_vs_cly";

/// One row per (n, ell, variant) sorted by (n, ell, variant). alpha = nullopt
/// selects the per-(n, ell) optimum from optimal_alpha. Ranges must be non-empty
/// with 2 <= n <= 200 and 1 <= ell <= 200 (UsageError otherwise).
std::vector<GapTableRow> build_gap_table(IntRange n_range, IntRange ell_range, std::optional<double> alpha);

std::string render_gap_table(const std::vector<GapTableRow>& rows, TableFormat format);

std::string emit_gap_table(IntRange n_range, IntRange ell_range, std::optional<double> alpha, TableFormat format);

}  // namespace volgap
