#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "volgap/claims.hpp"
#include "volgap/errors.hpp"
#include "volgap/format.hpp"
#include "volgap/gap_table.hpp"
#include "volgap/solver.hpp"

using nlohmann::json;
using volgap::ClaimStatus;
using volgap::IntRange;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

const volgap::ClaimVerdict& find(const std::vector<volgap::ClaimVerdict>& vs, const std::string& id) {
    const auto it = std::find_if(vs.begin(), vs.end(), [&](const auto& v) { return v.claim_id == id; });
    REQUIRE(it != vs.end());
    return *it;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("number formatting") {
    CHECK(volgap::format_number(1.6511710588547064L) == "1.65117105885");
    CHECK(volgap::format_number(16.0L) == "16");
    CHECK(volgap::format_number(-2.5e-20L) == "-2.5e-20");
    CHECK(volgap::json_number(std::numeric_limits<long double>::infinity()) == "null");
    CHECK(volgap::format_log_scalar(volgap::LogScalar::from_real(0.25L)) == "0.25");
    // 10^10000 is outside long double; the mantissa/exponent path takes over.
    const auto huge = volgap::LogScalar::exp(10000.0L * std::log(10.0L));
    CHECK(volgap::format_log_scalar(huge) == "1e+10000");
    CHECK(volgap::json_string("a\"b\\c\n") == "\"a\\\"b\\\\c\\n\"");
}

TEST_CASE("range and format parsing") {
    const IntRange r = volgap::parse_range("2:5");
    CHECK(r.lo == 2);
    CHECK(r.hi == 5);
    CHECK(r.size() == 4);
    CHECK(volgap::parse_range("7").size() == 1);
    CHECK_THROWS_AS(volgap::parse_range("5:3"), volgap::UsageError);
    CHECK_THROWS_AS(volgap::parse_range("a:b"), volgap::UsageError);
    CHECK_THROWS_AS(volgap::parse_range("2:"), volgap::UsageError);
    CHECK_THROWS_AS(volgap::parse_table_format("xml"), volgap::UsageError);
    CHECK(volgap::parse_table_format("pretty") == volgap::TableFormat::Pretty);
}

TEST_CASE("CSV table at (2, 1)") {
    const auto text = volgap::emit_gap_table({2, 2}, {1, 1}, 1.43, volgap::TableFormat::Csv);
    const auto lines = lines_of(text);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "n,ell,alpha,variant,log10_B,log10_excess,ratio_vs_cly");
    CHECK(lines[1].rfind("2,1,2,CLY,", 0) == 0);
    CHECK(lines[2].rfind("2,1,1.43,THM1,", 0) == 0);
    CHECK(lines[2].substr(lines[2].rfind(',') + 1) == "1.65117105885");
    CHECK(lines[3].find("THM2_CASE1") != std::string::npos);
    CHECK(lines[4].find("THM2_CASE2") != std::string::npos);
}

TEST_CASE("CLY denominator at n = 4") {
    const auto rows = volgap::build_gap_table({4, 4}, {1, 1}, 1.43);
    REQUIRE(rows.size() == 4);
    CHECK(static_cast<double>(rows[0].log10_B) == doctest::Approx(55.8907).epsilon(1e-6));
}

TEST_CASE("rows are sorted and every excess is finite") {
    const auto rows = volgap::build_gap_table({2, 40}, {1, 12}, 1.43);
    CHECK(rows.size() == 39u * 12u * 4u);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto key = [](const volgap::GapTableRow& r) {
            return std::tuple(r.n, r.ell, std::string(volgap::to_string(r.variant)));
        };
        CHECK(key(rows[i - 1]) < key(rows[i]));
    }
    for (const auto& r : rows) {
        CHECK(std::isfinite(r.log10_excess));
        if (r.variant != volgap::GapVariant::Cly) CHECK(r.ratio_vs_cly > volgap::LogScalar::one());
    }
}

TEST_CASE("table output is byte-identical across runs") {
    for (auto format : {volgap::TableFormat::Csv, volgap::TableFormat::Json, volgap::TableFormat::Pretty}) {
        CHECK(volgap::emit_gap_table({2, 9}, {1, 5}, 1.43, format) ==
              volgap::emit_gap_table({2, 9}, {1, 5}, 1.43, format));
    }
}

TEST_CASE("JSON table parses") {
    const json doc = json::parse(volgap::emit_gap_table({2, 3}, {1, 2}, 1.43, volgap::TableFormat::Json));
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 16);
    CHECK(doc[1]["variant"] == "THM1");
    CHECK(doc[1]["ratio_vs_cly"].get<double>() == doctest::Approx(1.65117105885).epsilon(1e-11));
}

TEST_CASE("alpha auto uses the per-point optimum") {
    const auto rows = volgap::build_gap_table({2, 3}, {1, 3}, std::nullopt);
    for (const auto& r : rows) {
        if (r.variant == volgap::GapVariant::Cly) continue;
        CHECK(r.alpha == doctest::Approx(static_cast<double>(volgap::optimal_alpha(r.n, r.ell).value())).epsilon(1e-15));
    }
}

TEST_CASE("table range errors") {
    CHECK_THROWS_AS(volgap::build_gap_table({1, 3}, {1, 1}, 1.43), volgap::UsageError);
    CHECK_THROWS_AS(volgap::build_gap_table({2, 201}, {1, 1}, 1.43), volgap::UsageError);
    CHECK_THROWS_AS(volgap::build_gap_table({3, 2}, {1, 1}, 1.43), volgap::UsageError);
}

TEST_CASE("default claim suite passes") {
    const auto verdicts = volgap::run_claim_suite(volgap::SuiteConfig{});
    CHECK(volgap::all_passed(verdicts));
    std::set<std::string> ids;
    for (const auto& v : verdicts) {
        CAPTURE(v.claim_id);
        CHECK(v.status == ClaimStatus::Pass);
        CHECK_FALSE(v.witnesses.empty());
        CHECK(ids.insert(v.claim_id).second);
    }
    CHECK(std::is_sorted(verdicts.begin(), verdicts.end(),
                         [](const auto& a, const auto& b) { return a.claim_id < b.claim_id; }));
    for (const char* required :
         {"LEM3_TRACE_BOUND", "C3_APPROX", "C4_EXACT", "CN_MONOTONE", "H_SIGN_142", "H_SIGN_144", "ALPHA_STAR_BRACKET",
          "RATIO_165", "GAMMA2_GT_13", "GAMMAN_LE_13", "TILDE_GAMMA3_LT_11", "PHI3_GT_2", "PSI_DECREASING", "RHS_GT_20",
          "LEML_GPRIME_NEG", "FINAL_INEQ", "GAP_ORDER_THM1_CLY", "GAP_ORDER_THM2_THM1", "THM6_CONSISTENCY"}) {
        CHECK(ids.count(required) == 1);
    }
    CHECK(volgap::claim_ids().size() == verdicts.size());
}

TEST_CASE("ell grid of one point is recorded in the grid note") {
    volgap::SuiteConfig config;
    config.ell = {1, 1};
    const auto verdicts = volgap::run_claim_suite(config);
    for (const char* id : {"GAP_ORDER_THM1_CLY", "GAP_ORDER_THM2_THM1"}) {
        const auto& v = find(verdicts, id);
        CHECK(v.status == ClaimStatus::Pass);
        CHECK(v.grid_note.find("ell in [1, 1]") != std::string::npos);
    }
}

TEST_CASE("perturbed C_n is caught") {
    volgap::SuiteConfig config;
    config.cn_perturbation = 0.10;
    const auto verdicts = volgap::run_claim_suite(config);
    CHECK_FALSE(volgap::all_passed(verdicts));
    const auto& c4 = find(verdicts, "C4_EXACT");
    CHECK(c4.status == ClaimStatus::Fail);
    CHECK_FALSE(c4.witnesses.empty());
    CHECK(volgap::render_verdicts_pretty(verdicts).find("FAIL     C4_EXACT") != std::string::npos);
    for (const auto& v : verdicts) {
        if (v.status == ClaimStatus::Fail) CHECK_FALSE(v.witnesses.empty());
    }
}

TEST_CASE("a grid without n >= 3 skips the n >= 3 claim") {
    volgap::SuiteConfig config;
    config.n = {2, 2};
    const auto verdicts = volgap::run_claim_suite(config);
    CHECK(find(verdicts, "GAMMAN_LE_13").status == ClaimStatus::Skipped);
}

TEST_CASE("verdict JSON parses and mirrors the verdicts") {
    const auto verdicts = volgap::run_claim_suite(volgap::SuiteConfig{});
    const json doc = json::parse(volgap::render_verdicts_json(verdicts));
    CHECK(doc["all_pass"] == true);
    REQUIRE(doc["claims"].size() == verdicts.size());
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        CHECK(doc["claims"][i]["claim_id"] == verdicts[i].claim_id);
        CHECK(doc["claims"][i]["status"] == "PASS");
        CHECK(doc["claims"][i]["witnesses"].size() == verdicts[i].witnesses.size());
    }
}

TEST_CASE("suite configuration is validated before any work") {
    volgap::SuiteConfig config;
    config.alpha = 1.0;
    CHECK_THROWS_AS(volgap::run_claim_suite(config), volgap::UsageError);
    config = {};
    config.tol = 1e-3L;
    CHECK_THROWS_AS(volgap::run_claim_suite(config), volgap::UsageError);
    config = {};
    config.n = {2, 500};
    CHECK_THROWS_AS(volgap::run_claim_suite(config), volgap::UsageError);
}

}
