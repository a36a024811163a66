#include "volgap/gap_table.hpp"

#include <charconv>
#include <cstdio>
#include <string>

#include "volgap/errors.hpp"
#include "volgap/format.hpp"
#include "volgap/solver.hpp"

namespace volgap {

namespace {

int parse_int(std::string_view text) {
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw UsageError("not an integer: '" + std::string(text) + "'");
    }
    return value;
}

double resolve_alpha(int n, int ell, std::optional<double> alpha) {
    if (alpha) return *alpha;
    const CriticalPoint cp = optimal_alpha(n, ell);
    return static_cast<double>(cp.value());
}

GapParams make_params(int n, int ell, double alpha, bool automatic) {
    try {
        return GapParams(n, ell, alpha);
    } catch (const DomainError& e) {
        if (!automatic) throw;
        throw DomainError("optimal alpha at n=" + std::to_string(n) + ", ell=" + std::to_string(ell) +
                          " is indistinguishable from 1/ell in double precision");
    }
}

std::string render_csv(const std::vector<GapTableRow>& rows) {
    std::string out(kGapTableHeader);
    out += '\n';
    for (const auto& r : rows) {
        out += std::to_string(r.n) + ',' + std::to_string(r.ell) + ',' + format_number(r.alpha) + ',' +
               std::string(to_string(r.variant)) + ',' + format_number(r.log10_B) + ',' +
               format_number(r.log10_excess) + ',' + format_log_scalar(r.ratio_vs_cly) + '\n';
    }
    return out;
}

std::string render_json(const std::vector<GapTableRow>& rows) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out += "  {\"n\": " + std::to_string(r.n) + ", \"ell\": " + std::to_string(r.ell) +
               ", \"alpha\": " + json_number(r.alpha) + ", \"variant\": " + json_string(to_string(r.variant)) +
               ", \"log10_B\": " + json_number(r.log10_B) + ", \"log10_excess\": " + json_number(r.log10_excess) +
               ", \"ratio_vs_cly\": " + format_log_scalar(r.ratio_vs_cly) + "}";
        out += i + 1 < rows.size() ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

std::string render_pretty(const std::vector<GapTableRow>& rows) {
    std::string out;
    char line[256];
    std::snprintf(line, sizeof line, "%4s %4s %8s %-11s %20s %20s %20s  %s\n", "n", "ell", "alpha", "variant",
                  "log10_B", "log10_excess", "ratio_vs_cly", "vol(M)/vol(S^n) >");
    out += line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%4d %4d %8s %-11s %20s %20s %20s  1 + 10^%s\n", r.n, r.ell,
                      format_number(r.alpha, 6).c_str(), std::string(to_string(r.variant)).c_str(),
                      format_number(r.log10_B).c_str(), format_number(r.log10_excess).c_str(),
                      format_log_scalar(r.ratio_vs_cly).c_str(), format_number(r.log10_excess, 6).c_str());
        out += line;
    }
    return out;
}

}  // namespace

IntRange parse_range(std::string_view text) {
    const auto colon = text.find(':');
    IntRange r;
    if (colon == std::string_view::npos) {
        r.lo = r.hi = parse_int(text);
    } else {
        r.lo = parse_int(text.substr(0, colon));
        r.hi = parse_int(text.substr(colon + 1));
    }
    if (r.empty()) throw UsageError("empty range '" + std::string(text) + "'");
    return r;
}

TableFormat parse_table_format(std::string_view text) {
    if (text == "csv") return TableFormat::Csv;
    if (text == "json") return TableFormat::Json;
    if (text == "pretty") return TableFormat::Pretty;
    throw UsageError("unknown format '" + std::string(text) + "' (expected csv, json or pretty)");
}

std::vector<GapTableRow> build_gap_table(IntRange n_range, IntRange ell_range, std::optional<double> alpha) {
    if (n_range.empty() || ell_range.empty()) throw UsageError("table ranges must be non-empty");
    if (n_range.lo < 2 || n_range.hi > 200) throw UsageError("n range must lie within [2, 200]");
    if (ell_range.lo < 1 || ell_range.hi > 200) throw UsageError("ell range must lie within [1, 200]");

    std::vector<GapTableRow> rows;
    rows.reserve(static_cast<std::size_t>(n_range.size()) * ell_range.size() * kAllVariants.size());
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
        for (int ell = ell_range.lo; ell <= ell_range.hi; ++ell) {
            const GapParams params = make_params(n, ell, resolve_alpha(n, ell, alpha), !alpha);
            for (GapVariant v : kAllVariants) {
                const GapBound b = gap_excess(params, v);
                rows.push_back(GapTableRow{n, ell, b.effective_alpha, v, b.denominator.log10_mag(),
                                           b.excess.log10_mag(), b.ratio_vs_cly});
            }
        }
    }
    return rows;
}

std::string render_gap_table(const std::vector<GapTableRow>& rows, TableFormat format) {
    switch (format) {
        case TableFormat::Csv: return render_csv(rows);
        case TableFormat::Json: return render_json(rows);
        case TableFormat::Pretty: return render_pretty(rows);
    }
    return {};
}

std::string emit_gap_table(IntRange n_range, IntRange ell_range, std::optional<double> alpha, TableFormat format) {
    return render_gap_table(build_gap_table(n_range, ell_range, alpha), format);
}

}  // namespace volgap
