// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes. Tolerances and time budgets are fixed below.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "volgap/bounds.hpp"
#include "volgap/claims.hpp"
#include "volgap/format.hpp"
#include "volgap/log_scalar.hpp"
#include "volgap/solver.hpp"
#include "volgap/special_fns.hpp"
#include "volgap/spectral.hpp"

namespace {

using volgap::format_number;
using volgap::GapParams;
using volgap::GapVariant;
using volgap::LogScalar;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char* title;
    double budget_ms;
    std::function<Outcome()> check;
};

std::string num(long double x) { return format_number(x); }

struct Cli {
    int status = -1;
    std::string out;
};

Cli run_cli(const std::string& args) {
    Cli r;
    const std::string cmd = std::string(VOLGAP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

Outcome constants_c3_c4() {
    const double c3 = volgap::cly_constant(3);
    const double c4_rel = std::fabs(volgap::cly_constant(4) - 16.0) / 16.0;
    const bool ok = std::fabs(c3 - 3.58) <= 0.01 && c4_rel <= 1e-9;
    return {ok, "C_3=" + num(c3) + " (|C_3-3.58|<=0.01), C_4 rel.err=" + num(c4_rel) + " (<=1e-9)"};
}

Outcome h_bracket() {
    const double h142 = volgap::h(1.42);
    const double h144 = volgap::h(1.44);
    const auto root = volgap::bisect([](double a) { return volgap::h(a); }, 1.42, 1.44, 1e-12);
    const bool regress = std::fabs(h142 - static_cast<double>(oracle::h(1.42L))) <= 0.01 &&
                         std::fabs(h144 - static_cast<double>(oracle::h(1.44L))) <= 0.01 &&
                         std::fabs(h142 - 0.699) <= 0.01 && std::fabs(h144 + 0.760) <= 0.01;
    const bool ok = h142 > 0 && h144 < 0 && root.root > 1.42 && root.root < 1.44 &&
                    std::fabs(root.residual) <= 1e-9 && regress;
    return {ok, "h(1.42)=" + num(h142) + ", h(1.44)=" + num(h144) + ", root=" + num(root.root) +
                    ", residual=" + num(root.residual) + " (<=1e-9), regression tol 0.01"};
}

Outcome ratio_at_2_1() {
    const auto thm1 = volgap::gap_excess(GapParams(2, 1, 1.43), GapVariant::Thm1);
    const double ratio = thm1.ratio_vs_cly.to_double();
    const double plain = 0.43 * (7.0 + 2.0 * std::exp(4.0)) / (5.29 + 1.43 * std::exp(2.86));
    const bool ok = ratio > 1.65 && std::fabs(ratio - plain) <= 1e-4;
    return {ok, "ratio=" + num(ratio) + ", plain arithmetic=" + num(plain) + " (tol 1e-4), > 1.65"};
}

Outcome trace_dominance() {
    int points = 0;
    int passed = 0;
    for (int n = 2; n <= 10; ++n) {
        for (int i = 0; i <= 36; ++i) {
            const double t = 1.0 + 0.25 * i;
            const auto tr = volgap::heat_trace(n, t);
            ++points;
            // Also compared on the excess over 1, where rounding cannot hide a violation.
            if (tr.value <= volgap::trace_bound(n, t) && tr.excess + tr.tail_bound <= volgap::trace_bound_excess(n, t)) {
                ++passed;
            }
        }
    }
    return {passed == points, std::to_string(passed) + "/" + std::to_string(points) +
                                   " grid points (n in 2..10, t in 1, 1.25, ..., 10)"};
}

Outcome gamma_bounds() {
    const auto g2 = volgap::gamma_n(2);
    bool ok = g2.value() > 1.3L && std::fabs(g2.offset.residual) <= 1e-9L;
    long double worst = std::fabs(g2.offset.residual);
    long double max_gamma = 0.0L;
    for (int n = 3; n <= 30; ++n) {
        const auto g = volgap::gamma_n(n);
        ok = ok && g.offset.root > 0.0L && g.value() <= 1.3L && std::fabs(g.offset.residual) <= 1e-9L;
        worst = std::max(worst, std::fabs(g.offset.residual));
        max_gamma = std::max(max_gamma, g.value());
    }
    return {ok, "gamma_2=" + num(g2.value()) + ", max gamma_n (n=3..30)=" + num(max_gamma) +
                    ", max residual=" + num(worst) + " (<=1e-9)"};
}

Outcome gap_orderings() {
    int points = 0;
    int passed = 0;
    for (int n = 2; n <= 30; ++n) {
        for (int ell = 1; ell <= 30; ++ell) {
            const GapParams p(n, ell, 1.43);
            const auto cly = volgap::gap_excess(p, GapVariant::Cly);
            const auto thm1 = volgap::gap_excess(p, GapVariant::Thm1);
            const auto case1 = volgap::gap_excess(p, GapVariant::Thm2Case1);
            const auto case2 = volgap::gap_excess(p, GapVariant::Thm2Case2);
            const bool finite = std::isfinite(cly.excess.log_mag()) && std::isfinite(case2.excess.log_mag());
            const bool a = thm1.excess > LogScalar::from_real(1.65L) * cly.excess;
            // case1 - thm1 = correction / B exactly; its sign decides strictness.
            const bool b = case1.excess >= thm1.excess && (case1.correction / case1.denominator).sign() > 0;
            const bool c = case2.denominator == thm1.denominator &&
                           case2.numerator > LogScalar::from_real(2.0L) * thm1.numerator;
            const long double lhs = -volgap::scaled_cly_exponent(n, 1.43) * (n + 3);
            const bool d = lhs < std::log(static_cast<long double>(ell) / (n + ell + 3));
            ++points;
            if (finite && a && b && c && d) ++passed;
        }
    }
    return {passed == points, std::to_string(passed) + "/" + std::to_string(points) +
                                   " grid points (n in 2..30, ell in 1..30, alpha 1.43), all four orderings"};
}

Outcome property_suites() {
    std::vector<std::string> failed;

    bool recurrence = true;
    for (int twice = 1; twice <= 100; ++twice) {
        const long double s = twice / 2.0L;
        const long double lhs = volgap::upper_incomplete_gamma_at_one_ext(volgap::HalfInteger(twice + 2));
        const long double rhs = s * volgap::upper_incomplete_gamma_at_one_ext(volgap::HalfInteger(twice)) + std::exp(-1.0L);
        recurrence = recurrence && std::fabs(lhs - rhs) / rhs <= 1e-10L;
    }
    if (!recurrence) failed.push_back("gamma recurrence");

    bool fd = true;
    const long double c2 = oracle::cly_constant(2);
    for (double alpha = 1.05; alpha < 2.5; alpha += 0.05) {
        const double step = 1e-6;
        const long double diff = (oracle::f1(alpha + step, 2, 1, c2) - oracle::f1(alpha - step, 2, 1, c2)) / (2 * step);
        const long double got = volgap::f1_prime(alpha, 2, 1).to_real();
        fd = fd && std::fabs(got - diff) <= 1e-6L * std::max(std::fabs(diff), 1e-6L);
    }
    if (!fd) failed.push_back("f1' finite differences");

    bool gscan = true;
    std::vector<double> grid;
    for (int i = 0; i <= 40; ++i) grid.push_back(1.0 + 0.05 * i);
    for (int n = 2; n <= 30; ++n) {
        for (const auto& s : volgap::g_prime_sign_scan(n, grid)) gscan = gscan && s.domain_ok && s.sign < 0;
    }
    if (!gscan) failed.push_back("g' sign scan");

    bool mult = true;
    for (int n = 2; n <= 12; ++n) {
        for (int k = 0; k <= 20; ++k) mult = mult && volgap::sphere_multiplicity(n, k) == oracle::multiplicity(n, k);
    }
    if (!mult) failed.push_back("multiplicities");

    bool logs = true;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-1e3, 1e3);
    for (int i = 0; i < 2000; ++i) {
        const double x = dist(rng), y = dist(rng);
        const LogScalar a = LogScalar::from_real(x), b = LogScalar::from_real(y);
        logs = logs && std::fabs(a.to_double() - x) <= std::numeric_limits<double>::epsilon() * std::fabs(x);
        logs = logs && (a + b) == (b + a) && (a * b) == (b * a) && (a - a).is_zero();
    }
    if (!logs) failed.push_back("LogScalar laws");

    const Cli t1 = run_cli("table --n-range 2:30 --l-range 1:30");
    const Cli t2 = run_cli("table --n-range 2:30 --l-range 1:30");
    const bool det = t1.status == 0 && !t1.out.empty() && t1.out == t2.out &&
                     volgap::optimal_alpha(9, 4).offset.root == volgap::optimal_alpha(9, 4).offset.root;
    if (!det) failed.push_back("deterministic output");

    std::string detail = "gamma recurrence 1e-10, f1' FD 1e-6, g' scan, multiplicities, LogScalar laws, determinism";
    if (!failed.empty()) {
        detail += "; failing:";
        for (const auto& f : failed) detail += " " + f;
    }
    return {failed.empty(), detail};
}

Outcome verify_contract() {
    const Cli clean = run_cli("verify");
    const Cli perturbed = run_cli("verify --perturb-cn 0.1");
    const bool names_claim = perturbed.out.find("FAIL     C4_EXACT") != std::string::npos;
    const bool ok = clean.status == 0 && perturbed.status != 0 && names_claim;
    return {ok, "default exit=" + std::to_string(clean.status) + ", perturbed exit=" + std::to_string(perturbed.status) +
                    (names_claim ? " with FAIL C4_EXACT" : " without a named FAIL")};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "C_3 and C_4 reproduce their stated values", 1000, constants_c3_c4},
        {2, "h changes sign on (1.42, 1.44) and the root lies inside", 1000, h_bracket},
        {3, "improvement ratio at (2, 1) exceeds 1.65", 1000, ratio_at_2_1},
        {4, "heat trace never exceeds its closed-form bound", 1000, trace_dominance},
        {5, "gamma_2 > 1.3 and 1 < gamma_n <= 1.3 for n in 3..30", 1000, gamma_bounds},
        {6, "gap orderings and final inequality on the full grid", 5000, gap_orderings},
        {7, "property suites", 30000, property_suites},
        {8, "verify exit-code contract", 30000, verify_contract},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = ms <= c.budget_ms;
        const bool pass = o.pass && in_budget;
        failures += pass ? 0 : 1;
        std::printf("[%s] criterion %d: %s | %s | %.1f ms (budget %.0f ms)\n", pass ? "PASS" : "FAIL", c.id, c.title,
                    o.detail.c_str(), ms, c.budget_ms);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
