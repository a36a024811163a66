// volgap: volume-gap bounds for minimal submanifolds of spheres.
//
// Exit codes: 0 success (verify: every claim passed), 1 computation error or
// failed claim, 2 usage error.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "volgap/bounds.hpp"
#include "volgap/claims.hpp"
#include "volgap/errors.hpp"
#include "volgap/format.hpp"
#include "volgap/gap_table.hpp"
#include "volgap/solver.hpp"
#include "volgap/special_fns.hpp"
#include "volgap/spectral.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    bool json = false;
    bool meta = false;
    double tol = 0.0;  // 0: per-command default
    int n = 2;
    int l = 1;
    std::string alpha = "1.43";
    std::string n_range = "2:30";
    std::string l_range = "1:30";
    std::string format = "csv";
    std::string out;
    double t = 1.0;
    double perturb_cn = 0.0;
};

std::optional<double> parse_alpha(const std::string& text) {
    if (text == "auto") return std::nullopt;
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) throw volgap::UsageError("--alpha expects a real number or 'auto'");
    return value;
}

double fixed_alpha(const std::string& text) {
    const auto a = parse_alpha(text);
    if (!a) throw volgap::UsageError("--alpha auto is not supported by this command");
    return *a;
}

void write_output(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + opt.out + "'");
    file << text;
}

void write_meta(const Options& opt, const std::string& command) {
    if (!opt.meta) return;
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    std::cerr << "# volgap " << VOLGAP_VERSION << " " << command << " generated " << stamp << '\n';
}

std::string num(long double x) { return volgap::format_number(x); }

int run_verify(const Options& opt) {
    volgap::SuiteConfig config;
    config.n = volgap::parse_range(opt.n_range);
    config.ell = volgap::parse_range(opt.l_range);
    config.alpha = fixed_alpha(opt.alpha);
    if (opt.tol > 0.0) config.tol = opt.tol;
    config.cn_perturbation = opt.perturb_cn;
    const auto verdicts = volgap::run_claim_suite(config);
    write_meta(opt, "verify");
    write_output(opt, opt.json ? volgap::render_verdicts_json(verdicts) : volgap::render_verdicts_pretty(verdicts));
    return volgap::all_passed(verdicts) ? 0 : kExitFailure;
}

int run_table(const Options& opt) {
    const auto format = volgap::parse_table_format(opt.format);
    const auto text = volgap::emit_gap_table(volgap::parse_range(opt.n_range), volgap::parse_range(opt.l_range),
                                             parse_alpha(opt.alpha), format);
    write_meta(opt, "table");
    write_output(opt, text);
    return 0;
}

int run_constants(const Options& opt) {
    const double alpha = fixed_alpha(opt.alpha);
    const volgap::LogScalar cn = volgap::cly_constant_log(opt.n);
    const volgap::LogScalar b_cly = volgap::b_cly(opt.n);
    const volgap::LogScalar b_alpha = volgap::b_alpha(opt.n, alpha);
    std::ostringstream os;
    if (opt.json) {
        os << "{\"n\": " << opt.n << ", \"alpha\": " << volgap::json_number(alpha)
           << ", \"C_n\": " << volgap::format_log_scalar(cn) << ", \"log10_C_n\": " << volgap::json_number(cn.log10_mag())
           << ", \"log10_B_n\": " << volgap::json_number(b_cly.log10_mag())
           << ", \"log10_B_n_alpha\": " << volgap::json_number(b_alpha.log10_mag()) << "}\n";
    } else {
        os << "n                 " << opt.n << '\n'
           << "C_n               " << volgap::format_log_scalar(cn) << '\n'
           << "log10 C_n         " << num(cn.log10_mag()) << '\n'
           << "log10 B_n         " << num(b_cly.log10_mag()) << "   (2n + 3 + 2 e^{2 n C_n})\n"
           << "log10 B_n,alpha   " << num(b_alpha.log10_mag()) << "   (alpha = " << num(alpha) << ")\n";
    }
    write_output(opt, os.str());
    return 0;
}

int run_gap(const Options& opt) {
    const auto alpha_choice = parse_alpha(opt.alpha);
    const double alpha = alpha_choice ? *alpha_choice : static_cast<double>(volgap::optimal_alpha(opt.n, opt.l).value());
    const volgap::GapParams params(opt.n, opt.l, alpha);
    const volgap::GapBound unconditional = volgap::theorem2_unconditional(params);
    std::ostringstream os;
    if (opt.json) {
        os << "{\"n\": " << opt.n << ", \"ell\": " << opt.l << ", \"alpha\": " << volgap::json_number(alpha)
           << ", \"variants\": [";
        bool first = true;
        for (auto v : volgap::kAllVariants) {
            const auto b = volgap::gap_excess(params, v);
            os << (first ? "" : ", ") << "{\"variant\": " << volgap::json_string(volgap::to_string(v))
               << ", \"alpha\": " << volgap::json_number(b.effective_alpha)
               << ", \"log10_B\": " << volgap::json_number(b.denominator.log10_mag())
               << ", \"log10_excess\": " << volgap::json_number(b.excess.log10_mag())
               << ", \"ratio_vs_cly\": " << volgap::format_log_scalar(b.ratio_vs_cly) << "}";
            first = false;
        }
        os << "], \"log10_thm2_unconditional_excess\": " << volgap::json_number(unconditional.excess.log10_mag())
           << "}\n";
    } else {
        os << "n = " << opt.n << ", ell = " << opt.l << ", alpha = " << num(alpha) << '\n';
        for (auto v : volgap::kAllVariants) {
            const auto b = volgap::gap_excess(params, v);
            char line[200];
            std::snprintf(line, sizeof line, "%-11s vol(M)/vol(S^n) > 1 + 10^%-20s log10_B = %-20s ratio_vs_cly = %s\n",
                          std::string(volgap::to_string(v)).c_str(), num(b.excess.log10_mag()).c_str(),
                          num(b.denominator.log10_mag()).c_str(),
                          volgap::format_log_scalar(b.ratio_vs_cly).c_str());
            os << line;
        }
        os << "THM2 (any multiplicity): 1 + 10^" << num(unconditional.excess.log10_mag()) << '\n';
    }
    write_output(opt, os.str());
    return 0;
}

int run_optimize_alpha(const Options& opt) {
    const long double tol = opt.tol > 0.0 ? opt.tol : volgap::kDefaultTol;
    const volgap::CriticalPoint cp = volgap::optimal_alpha(opt.n, opt.l, tol);
    const bool maximum = volgap::is_local_maximum(cp, opt.n, opt.l, tol);
    const long double lo = cp.scale * (1.0L + cp.offset.bracket_lo);
    const long double hi = cp.scale * (1.0L + cp.offset.bracket_hi);
    const volgap::LogScalar offset = volgap::LogScalar::from_real(cp.offset.root);
    std::ostringstream os;
    if (opt.json) {
        os << "{\"n\": " << opt.n << ", \"ell\": " << opt.l << ", \"alpha\": " << volgap::json_number(cp.value(), 15)
           << ", \"bracket\": [" << volgap::json_number(lo, 15) << ", " << volgap::json_number(hi, 15) << "]"
           << ", \"log10_alpha_ell_minus_one\": " << volgap::json_number(offset.log10_mag())
           << ", \"residual\": " << volgap::json_number(cp.offset.residual)
           << ", \"iterations\": " << cp.offset.iterations << ", \"local_maximum\": " << (maximum ? "true" : "false")
           << "}\n";
    } else {
        os << "optimal alpha     " << volgap::format_number(cp.value(), 15) << '\n'
           << "bracket           (" << volgap::format_number(lo, 15) << ", " << volgap::format_number(hi, 15) << ")\n"
           << "alpha*ell - 1     10^" << num(offset.log10_mag()) << '\n'
           << "residual          " << num(cp.offset.residual) << '\n'
           << "iterations        " << cp.offset.iterations << '\n'
           << "local maximum     " << (maximum ? "yes" : "no") << '\n';
    }
    write_output(opt, os.str());
    return maximum ? 0 : kExitFailure;
}

int run_trace(const Options& opt) {
    const double eps = opt.tol > 0.0 ? opt.tol : 1e-15;
    const volgap::TraceResult tr = volgap::heat_trace(opt.n, opt.t, eps);
    std::optional<double> bound;
    if (opt.t >= 1.0) bound = volgap::trace_bound(opt.n, opt.t);
    const char* status = !bound ? "SKIPPED" : (tr.value <= *bound ? "PASS" : "FAIL");
    std::ostringstream os;
    if (opt.json) {
        os << "{\"n\": " << opt.n << ", \"t\": " << volgap::json_number(opt.t) << ", \"trace\": " << volgap::json_number(tr.value)
           << ", \"tail_bound\": " << volgap::json_number(tr.tail_bound) << ", \"levels_used\": " << tr.levels_used
           << ", \"bound\": " << (bound ? volgap::json_number(*bound) : std::string("null"))
           << ", \"status\": " << volgap::json_string(status) << "}\n";
    } else {
        os << "trace             " << num(tr.value) << '\n'
           << "tail bound        " << num(tr.tail_bound) << '\n'
           << "levels used       " << tr.levels_used << '\n'
           << "bound             " << (bound ? num(*bound) : std::string("not asserted for t < 1")) << '\n'
           << "status            " << status << '\n';
    }
    write_output(opt, os.str());
    return std::string(status) == "FAIL" ? kExitFailure : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Volume-gap bounds for compact minimal submanifolds of spheres"};
    app.require_subcommand(1);
    Options opt;

    const auto add_common = [&opt](CLI::App* cmd) {
        cmd->add_flag("--json", opt.json, "Machine-readable output");
        cmd->add_option("--out", opt.out, "Output path (default: standard output)");
    };

    auto* verify = app.add_subcommand("verify", "Run the claim suite; exit 0 iff every claim passes");
    add_common(verify);
    verify->add_option("--n-range", opt.n_range, "Dimension grid a:b")->capture_default_str();
    verify->add_option("--l-range", opt.l_range, "Codimension grid a:b")->capture_default_str();
    verify->add_option("--alpha", opt.alpha, "Tuning parameter")->capture_default_str();
    verify->add_option("--tol", opt.tol, "Root-finding tolerance");
    verify->add_flag("--meta", opt.meta, "Print run metadata to standard error");
    verify->add_option("--perturb-cn", opt.perturb_cn)->group("");  // fault injection for tests

    auto* table = app.add_subcommand("table", "Gap table over an (n, ell) grid");
    table->add_option("--out", opt.out, "Output path (default: standard output)");
    table->add_option("--n-range", opt.n_range, "Dimension range a:b")->capture_default_str();
    table->add_option("--l-range", opt.l_range, "Codimension range a:b")->capture_default_str();
    table->add_option("--alpha", opt.alpha, "Tuning parameter or 'auto'")->capture_default_str();
    table->add_option("--format", opt.format, "csv, json or pretty")->capture_default_str();
    table->add_flag("--meta", opt.meta, "Print run metadata to standard error");

    auto* constants = app.add_subcommand("constants", "C_n and the gap denominators");
    add_common(constants);
    constants->add_option("--n", opt.n, "Dimension")->required();
    constants->add_option("--alpha", opt.alpha, "Tuning parameter")->capture_default_str();

    auto* gap = app.add_subcommand("gap", "Volume-gap excess for every variant");
    add_common(gap);
    gap->add_option("--n", opt.n, "Dimension")->required();
    gap->add_option("--l", opt.l, "Codimension")->required();
    gap->add_option("--alpha", opt.alpha, "Tuning parameter or 'auto'")->capture_default_str();

    auto* optimize = app.add_subcommand("optimize-alpha", "Maximiser of the gap over alpha");
    add_common(optimize);
    optimize->add_option("--n", opt.n, "Dimension")->required();
    optimize->add_option("--l", opt.l, "Codimension")->required();
    optimize->add_option("--tol", opt.tol, "Tolerance on alpha");

    auto* trace = app.add_subcommand("trace", "Heat trace on S^n against its closed-form bound");
    add_common(trace);
    trace->add_option("--n", opt.n, "Sphere dimension")->required();
    trace->add_option("--t", opt.t, "Time")->required();
    trace->add_option("--tol", opt.tol, "Relative truncation tolerance, in (0, 1e-6]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) return run_verify(opt);
        if (*table) return run_table(opt);
        if (*constants) return run_constants(opt);
        if (*gap) return run_gap(opt);
        if (*optimize) return run_optimize_alpha(opt);
        if (*trace) return run_trace(opt);
    } catch (const volgap::UsageError& e) {
        std::cerr << "volgap: usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "volgap: error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
