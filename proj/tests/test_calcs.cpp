#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "octapet/calcs.hpp"

using namespace octapet;

namespace {

const PiecewiseAffineSystem& system_fixture() {
    static PiecewiseAffineSystem sys = load_fixtures(FIXTURES_DIR);
    return sys;
}

}  // namespace

TEST_CASE("partition verification is clean") {
    PartitionReport report = verify_partition(system_fixture());
    for (const std::string& f : report.failures) CAPTURE(f);
    CHECK(report.ok());
}

TEST_CASE("all eight calculations pass") {
    std::vector<CalcReport> reports = run_all_calcs(system_fixture(), FIXTURES_DIR);
    REQUIRE(reports.size() == 8);
    for (const CalcReport& r : reports) {
        CHECK(!r.checks.empty());
        for (const CalcCheck& c : r.checks) {
            CAPTURE(r.name);
            CAPTURE(c.label);
            CAPTURE(c.detail);
            CHECK(c.ok);
        }
        CHECK(r.ok());
    }
}

TEST_CASE("structural counts of the conjugation calculations") {
    const PiecewiseAffineSystem& sys = system_fixture();
    CalcReport r1 = calc1(sys, FIXTURES_DIR);
    bool saw_pairs1 = false;
    for (const CalcCheck& c : r1.checks) {
        if (c.detail.find("48") != std::string::npos) saw_pairs1 = true;
    }
    CHECK(saw_pairs1);
    CalcReport r2 = calc2(sys, FIXTURES_DIR);
    bool saw_pairs2 = false;
    for (const CalcCheck& c : r2.checks) {
        if (c.detail.find("27") != std::string::npos) saw_pairs2 = true;
    }
    CHECK(saw_pairs2);
}

TEST_CASE("report serialization carries every calculation") {
    std::vector<CalcReport> reports = run_all_calcs(system_fixture(), FIXTURES_DIR);
    std::string json = calc_reports_to_json(reports);
    for (const CalcReport& r : reports) CHECK(json.find(r.name) != std::string::npos);
    CHECK(json == calc_reports_to_json(reports));
}
