#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "maintlab/health.hpp"

using namespace maintlab;

namespace {

SmellFinding finding(const char* rule, int minutes = 10) {
    return {rule, "", {1, 1}, "", minutes, Severity::Major};
}

std::vector<SmellFinding> repeat(const char* rule, int count) {
    std::vector<SmellFinding> out;
    for (int i = 0; i < count; ++i) out.push_back(finding(rule));
    return out;
}

}  // namespace

TEST_CASE("no findings scores a perfect ten") {
    const HealthScore score = health_score({}, RuleCatalog::defaults());
    CHECK(score.value == 10.0);
    CHECK(score.category == HealthCategory::Healthy);
    CHECK(score.contributing.empty());
}

TEST_CASE("one god class costs two points") {
    const auto findings = repeat(rule_id::kGodClass, 1);
    const HealthScore score = health_score(findings, RuleCatalog::defaults());
    CHECK(score.value == 8.0);
    CHECK(score.category == HealthCategory::Warning);
    CHECK(score.contributing.at(rule_id::kGodClass) == 1);
}

TEST_CASE("huge penalties clamp the score at one") {
    RuleCatalog catalog;
    RuleSpec rule;
    rule.id = "MegaSmell";
    rule.tier = RuleTier::Structural;
    rule.remediation_minutes = 10;
    rule.health_penalty = 40.0;
    rule.params["health_cap"] = 40.0;
    catalog.add(rule);
    const auto findings = repeat("MegaSmell", 1);
    const HealthScore score = health_score(findings, catalog);
    CHECK(score.value == 1.0);
    CHECK(score.category == HealthCategory::Alert);
}

TEST_CASE("per-category caps bound repeated findings") {
    const RuleCatalog catalog = RuleCatalog::defaults();
    // GodMethod: 1.0 per finding, cap 3.0
    CHECK(health_score(repeat(rule_id::kGodMethod, 2), catalog).value == 8.0);
    CHECK(health_score(repeat(rule_id::kGodMethod, 3), catalog).value == 7.0);
    CHECK(health_score(repeat(rule_id::kGodMethod, 5), catalog).value == 7.0);
    CHECK(health_score(repeat(rule_id::kGodMethod, 50), catalog).value == 7.0);
}

TEST_CASE("lint findings never move the score") {
    const RuleCatalog catalog = RuleCatalog::defaults();
    std::vector<SmellFinding> lint = repeat(rule_id::kPublicMutableField, 10);
    auto more = repeat(rule_id::kEmptyBody, 10);
    lint.insert(lint.end(), more.begin(), more.end());
    const HealthScore score = health_score(lint, catalog);
    CHECK(score.value == 10.0);
    CHECK(score.category == HealthCategory::Healthy);
}

TEST_CASE("adding findings never raises the score") {
    const RuleCatalog catalog = RuleCatalog::defaults();
    const char* rules[] = {rule_id::kGodClass,          rule_id::kGodMethod,
                           rule_id::kLongParameterList, rule_id::kDeepNesting,
                           rule_id::kHighMethodComplexity, rule_id::kDuplicatedBlock};
    std::mt19937 rng(7);
    for (int round = 0; round < 50; ++round) {
        std::vector<SmellFinding> findings;
        double previous = 10.0;
        for (int i = 0; i < 20; ++i) {
            findings.push_back(finding(rules[rng() % 6]));
            const double value = health_score(findings, catalog).value;
            CHECK(value <= previous);
            CHECK(value >= 1.0);
            CHECK(value <= 10.0);
            previous = value;
        }
    }
}

TEST_CASE("category boundaries follow the score intervals") {
    const RuleCatalog catalog = RuleCatalog::defaults();
    const char* rules[] = {rule_id::kGodClass,          rule_id::kGodMethod,
                           rule_id::kLongParameterList, rule_id::kDeepNesting,
                           rule_id::kHighMethodComplexity, rule_id::kDuplicatedBlock};
    std::mt19937 rng(11);
    for (int round = 0; round < 200; ++round) {
        std::vector<SmellFinding> findings;
        const int count = static_cast<int>(rng() % 8);
        for (int i = 0; i < count; ++i) findings.push_back(finding(rules[rng() % 6]));
        const HealthScore score = health_score(findings, catalog);
        CHECK((score.value >= 9.0) == (score.category == HealthCategory::Healthy));
        CHECK((score.value < 4.0) == (score.category == HealthCategory::Alert));
        // one-decimal rounding
        CHECK(score.value * 10.0 == doctest::Approx(std::round(score.value * 10.0)));
    }
}
