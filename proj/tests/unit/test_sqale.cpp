#include <doctest.h>

#include "helpers.hpp"
#include "maintlab/sqale.hpp"

using namespace maintlab;

namespace {

std::vector<SmellFinding> findings_with_minutes(std::initializer_list<int> minutes) {
    std::vector<SmellFinding> out;
    int line = 1;
    for (int m : minutes) {
        SmellFinding f;
        f.rule_id = "R" + std::to_string(m);
        f.span = {line, line};
        f.remediation_minutes = m;
        out.push_back(std::move(f));
        ++line;
    }
    return out;
}

}  // namespace

TEST_CASE("debt time is the exact sum of remediation minutes") {
    CHECK(td_time(findings_with_minutes({10, 5, 20})) == 35.0);
    CHECK(td_time({}) == 0.0);
    // 31 findings worth 281 minutes
    std::vector<int> minutes(9, 10);
    minutes.insert(minutes.end(), 9, 5);
    minutes.insert(minutes.end(), 6, 20);
    minutes.insert(minutes.end(), 3, 2);
    minutes.insert(minutes.end(), 4, 5);
    std::vector<SmellFinding> many;
    for (int m : minutes) many.push_back({"r", "", {1, 1}, "", m, Severity::Minor});
    REQUIRE(many.size() == 31);
    CHECK(td_time(many) == 281.0);
}

TEST_CASE("debt ratio matches the worked figures") {
    CHECK(td_ratio(35, 5, 30) == doctest::Approx(0.233333333).epsilon(1e-9));
    CHECK(td_ratio(0, 100, 30) == 0.0);
    CHECK(td_ratio(281, 28, 30) == doctest::Approx(0.334523809).epsilon(1e-9));
    // zero-line guard
    CHECK(td_ratio(10, 0, 30) == td_ratio(10, 1, 30));
}

TEST_CASE("rating thresholds are inclusive upper bounds") {
    CHECK(maintainability_rating(0.0) == Rating::A);
    CHECK(maintainability_rating(0.05) == Rating::A);
    CHECK(maintainability_rating(0.0500001) == Rating::B);
    CHECK(maintainability_rating(0.10) == Rating::B);
    CHECK(maintainability_rating(0.101) == Rating::C);
    CHECK(maintainability_rating(0.20) == Rating::C);
    CHECK(maintainability_rating(0.233) == Rating::D);
    CHECK(maintainability_rating(0.50) == Rating::D);
    CHECK(maintainability_rating(0.51) == Rating::E);
}

TEST_CASE("additivity over disjoint finding sets") {
    const auto f1 = findings_with_minutes({10, 20});
    const auto f2 = findings_with_minutes({5, 2, 30});
    auto merged = f1;
    merged.insert(merged.end(), f2.begin(), f2.end());
    CHECK(td_time(merged) == td_time(f1) + td_time(f2));
}

TEST_CASE("ratio strictly decreases as the file grows") {
    const auto findings = findings_with_minutes({10, 5, 20});
    double previous = td_ratio(td_time(findings), 1, 30);
    for (int lines = 2; lines <= 200; ++lines) {
        const double current = td_ratio(td_time(findings), lines, 30);
        CHECK(current < previous);
        previous = current;
    }
}

TEST_CASE("padding a rating-D file with 100 blank-ish lines drops it to A") {
    const auto findings = findings_with_minutes({10, 5, 20});
    const SqaleResult small = sqale(findings, 5);
    CHECK(small.rating == Rating::D);
    const SqaleResult padded = sqale(findings, 105);
    CHECK(padded.rating == Rating::A);
    CHECK(padded.td_time_minutes == small.td_time_minutes);
}

TEST_CASE("sqale result is internally consistent") {
    const auto findings = findings_with_minutes({10, 5, 20});
    const SqaleResult r = sqale(findings, 5, 30);
    CHECK(r.td_time_minutes == 35.0);
    CHECK(r.dev_cost_minutes == 150.0);
    CHECK(r.td_ratio == doctest::Approx(0.2333333).epsilon(1e-6));
    CHECK(r.rating == Rating::D);
}
