#include <doctest.h>

#include <cmath>

#include "contactgeo/report.hpp"

using namespace contactgeo;

TEST_CASE("check reports round-trip through JSON") {
    CheckReport report;
    report.check_name = "theorem1-contact";
    report.params = {{"n", 3.0}, {"r", 0.30000000000000004}, {"seed", 7.0}};
    report.residuals = {{"contact_defect", 1.2345e-13}, {"pairing", M_PI * 1e-12}};
    report.tolerance = 1e-10;
    report.pass = true;
    report.runtime_ms = 42;

    const std::string line = nlohmann::json(report).dump();
    const CheckReport parsed = nlohmann::json::parse(line).get<CheckReport>();
    CHECK(parsed == report);
}

TEST_CASE("csv rows carry the same fields") {
    CheckReport report;
    report.check_name = "einstein-quadric";
    report.params = {{"epsilon", 1.0}, {"n", 4.0}};
    report.residuals = {{"ricci", 0.0}};
    report.tolerance = 1e-12;
    report.pass = true;

    CHECK(csv_header().find("check_name") == 0);
    const std::string row = to_csv_row(report);
    CHECK(row.find("einstein-quadric") == 0);
    CHECK(row.find("ricci=0.0") != std::string::npos);
    CHECK(row.find("true") != std::string::npos);
}

TEST_CASE("suites are deterministic for a fixed seed") {
    SuiteParams params;
    params.seed = 7;
    auto first = run_suite("singular-sweep", params);
    auto second = run_suite("singular-sweep", params);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        first[i].runtime_ms = 0; // wall time is the one nondeterministic field
        second[i].runtime_ms = 0;
        CHECK(first[i] == second[i]);
    }
}

TEST_CASE("reports come out in canonical order") {
    const auto reports = run_suite("einstein", SuiteParams{});
    REQUIRE(!reports.empty());
    for (std::size_t i = 1; i < reports.size(); ++i) {
        const auto key = [](const CheckReport& r) {
            return std::make_pair(r.check_name, nlohmann::json(r.params).dump());
        };
        CHECK(key(reports[i - 1]) <= key(reports[i]));
    }
}

TEST_CASE("pass is derived from residuals and tolerance") {
    SuiteParams params;
    params.n = 3;
    for (const CheckReport& r : run_suite("theorem1", params)) {
        bool expected = true;
        for (const auto& [name, value] : r.residuals) expected = expected && value < r.tolerance;
        CHECK(r.pass == expected);
    }
}

TEST_CASE("tolerance override flips marginal checks") {
    SuiteParams params;
    params.n = 3;
    params.r = 0.3;
    params.tol = 0.0;
    for (const CheckReport& r : run_suite("theorem1", params)) CHECK_FALSE(r.pass);
}

TEST_CASE("unknown suites raise usage errors") {
    CHECK_THROWS_AS(run_suite("bogus", SuiteParams{}), UsageError);
    CHECK_THROWS_AS(run_suite("", SuiteParams{}), UsageError);
}

TEST_CASE("suite name list is stable") {
    const auto& names = suite_names();
    CHECK(names.size() == 10);
    CHECK(names.front() == "curvature-selftest");
    CHECK(names.back() == "all");
}
