#include <doctest.h>

#include <map>
#include <sstream>

#include "helpers.hpp"
#include "maintlab/lexer.hpp"
#include "maintlab/smells.hpp"

using namespace maintlab;

namespace {

struct Analyzed {
    std::vector<Token> tokens;
    StructuralModel model;
    LocCounts loc;
};

Analyzed analyze(const SourceUnit& unit) {
    Analyzed a;
    a.tokens = tokenize_java(unit.text);
    a.model = parse_structure(a.tokens);
    a.loc = count_loc(unit);
    return a;
}

std::map<std::string, int> count_by_rule(const std::vector<SmellFinding>& findings) {
    std::map<std::string, int> counts;
    for (const SmellFinding& f : findings) ++counts[f.rule_id];
    return counts;
}

int total_minutes(const std::vector<SmellFinding>& findings) {
    int sum = 0;
    for (const SmellFinding& f : findings) sum += f.remediation_minutes;
    return sum;
}

}  // namespace

TEST_CASE("five-line fixture: exactly three lint findings, zero structural") {
    const auto unit = testutil::load_fixture("SVGFEFuncBElement.java");
    const Analyzed a = analyze(unit);
    const RuleCatalog catalog = RuleCatalog::defaults();

    const auto structural = detect_structural_smells(a.model, a.loc, catalog, {}, unit.path);
    CHECK(structural.empty());

    const auto lint = detect_lint_rules(a.model, a.tokens, catalog, unit.path);
    REQUIRE(lint.size() == 3);
    const auto counts = count_by_rule(lint);
    CHECK(counts.at(rule_id::kPublicMutableField) == 1);
    CHECK(counts.at(rule_id::kNonFinalAssignedOnceField) == 1);
    CHECK(counts.at(rule_id::kEmptyBody) == 1);
    CHECK(total_minutes(lint) == 35);
}

TEST_CASE("28-line fixture: 31 findings worth 281 minutes") {
    const auto unit = testutil::load_fixture("SVGMaskElement.java");
    const Analyzed a = analyze(unit);
    const RuleCatalog catalog = RuleCatalog::defaults();

    auto findings = detect_structural_smells(a.model, a.loc, catalog, {}, unit.path);
    CHECK(findings.empty());
    const auto lint = detect_lint_rules(a.model, a.tokens, catalog, unit.path);
    findings.insert(findings.end(), lint.begin(), lint.end());

    const auto counts = count_by_rule(findings);
    CHECK(counts.at(rule_id::kPublicMutableField) == 9);
    CHECK(counts.at(rule_id::kNonFinalAssignedOnceField) == 9);
    CHECK(counts.at(rule_id::kEmptyBody) == 6);
    CHECK(counts.at(rule_id::kModifierOrder) == 3);
    CHECK(counts.at(rule_id::kNamingConvention) == 4);
    CHECK(findings.size() == 31);
    CHECK(total_minutes(findings) == 281);
}

TEST_CASE("a canonical constant raises no findings") {
    const auto a = analyze(testutil::java_unit("class A { static final int MAX = 3; }"));
    const RuleCatalog catalog = RuleCatalog::defaults();
    CHECK(detect_lint_rules(a.model, a.tokens, catalog).empty());
    CHECK(detect_structural_smells(a.model, a.loc, catalog).empty());
}

TEST_CASE("parameter limit is strict: equal is fine, one more violates") {
    const RuleCatalog catalog = RuleCatalog::defaults();
    const auto at_limit =
        analyze(testutil::java_unit("class A { void f(int a, int b, int c, int d) { } }"));
    CHECK(count_by_rule(detect_structural_smells(at_limit.model, at_limit.loc, catalog))
              .count(rule_id::kLongParameterList) == 0);

    const auto over = analyze(
        testutil::java_unit("class A { void f(int a, int b, int c, int d, int e) { } }"));
    const auto counts = count_by_rule(detect_structural_smells(over.model, over.loc, catalog));
    CHECK(counts.at(rule_id::kLongParameterList) == 1);
}

TEST_CASE("god class requires both size and method count over their limits") {
    const RuleCatalog catalog = RuleCatalog::defaults();
    std::ostringstream big;
    big << "class Giant {\n";
    for (int i = 0; i < 30; ++i) {
        big << "  int field" << i << ";\n";
        big << "  void method" << i << "() {\n";
        for (int k = 0; k < 19; ++k) big << "    use(" << i << ", " << k << ");\n";
        big << "  }\n";
    }
    big << "}\n";
    const auto a = analyze(testutil::java_unit(big.str()));
    REQUIRE(a.loc.code_lines > 600);
    REQUIRE(a.model.types.at(0).method_count > 25);
    const auto counts = count_by_rule(detect_structural_smells(a.model, a.loc, catalog));
    CHECK(counts.at(rule_id::kGodClass) == 1);

    // same methods but a small file: no god class
    const auto small = analyze(testutil::java_unit(
        "class A { void a() { } void b() { } void c() { } }"));
    CHECK(count_by_rule(detect_structural_smells(small.model, small.loc, catalog))
              .count(rule_id::kGodClass) == 0);
}

TEST_CASE("god method, deep nesting, and complexity detectors fire past their limits") {
    const RuleCatalog catalog = RuleCatalog::defaults();
    std::ostringstream text;
    text << "class A { void big() {\n";
    for (int i = 0; i < 75; ++i) text << "  use(" << i << ");\n";
    text << "}\n";
    text << "void nested() { if (a) { if (b) { if (c) { if (d) { go(); } } } } }\n";
    text << "void branchy(int v) { if (a || b || c || d || e || f || g || h || i || j) { go(); } "
            "}\n";
    text << "}\n";
    const auto a = analyze(testutil::java_unit(text.str()));
    const auto counts = count_by_rule(detect_structural_smells(a.model, a.loc, catalog));
    CHECK(counts.at(rule_id::kGodMethod) == 1);
    CHECK(counts.at(rule_id::kDeepNesting) == 1);
    CHECK(counts.at(rule_id::kHighMethodComplexity) == 1);
}

TEST_CASE("duplicate pairs become DuplicatedBlock findings") {
    const RuleCatalog catalog = RuleCatalog::defaults();
    StructuralModel model;
    LocCounts loc;
    std::vector<DuplicatePair> pairs(2);
    pairs[0].first_lines = {1, 4};
    pairs[0].second_lines = {10, 13};
    pairs[1].first_lines = {2, 5};
    pairs[1].second_lines = {20, 23};
    const auto findings = detect_structural_smells(model, loc, catalog, pairs);
    REQUIRE(findings.size() == 2);
    CHECK(findings[0].rule_id == rule_id::kDuplicatedBlock);
    CHECK(findings[0].span.first_line == 10);
}

TEST_CASE("modifier order violations are reported per site") {
    CHECK(modifiers_in_canonical_order(std::vector<std::string>{"public", "static", "final"}));
    CHECK(!modifiers_in_canonical_order(std::vector<std::string>{"static", "public"}));
    CHECK(!modifiers_in_canonical_order(std::vector<std::string>{"final", "public"}));
    CHECK(modifiers_in_canonical_order(std::vector<std::string>{}));

    const auto a = analyze(testutil::java_unit(
        "class A { static public int ugly() { return 1; } final static public int WORSE = 2; }"));
    const auto counts =
        count_by_rule(detect_lint_rules(a.model, a.tokens, RuleCatalog::defaults()));
    CHECK(counts.at(rule_id::kModifierOrder) == 2);
}

TEST_CASE("naming convention distinguishes constants from instance fields") {
    const auto a = analyze(testutil::java_unit(
        "class A { static final int lower_const = 1; int Bad_Field; int okField; void "
        "Bad_Method() { } void okMethod() { } }"));
    const auto findings = detect_lint_rules(a.model, a.tokens, RuleCatalog::defaults());
    int naming = 0;
    for (const auto& f : findings) {
        if (f.rule_id == rule_id::kNamingConvention) ++naming;
    }
    CHECK(naming == 3);  // lower_const, Bad_Field, Bad_Method
}

TEST_CASE("reassigned fields escape the assigned-once rule") {
    const auto once = analyze(testutil::java_unit(
        "class A { int count; A(int c) { count = c; } }"));
    auto counts = count_by_rule(detect_lint_rules(once.model, once.tokens,
                                                  RuleCatalog::defaults()));
    CHECK(counts.at(rule_id::kNonFinalAssignedOnceField) == 1);

    const auto twice = analyze(testutil::java_unit(
        "class A { int count; A(int c) { count = c; } void bump() { count += 1; } }"));
    counts = count_by_rule(detect_lint_rules(twice.model, twice.tokens,
                                             RuleCatalog::defaults()));
    CHECK(counts.count(rule_id::kNonFinalAssignedOnceField) == 0);

    const auto incremented = analyze(testutil::java_unit(
        "class A { int count = 0; void bump() { count++; } }"));
    counts = count_by_rule(detect_lint_rules(incremented.model, incremented.tokens,
                                             RuleCatalog::defaults()));
    CHECK(counts.count(rule_id::kNonFinalAssignedOnceField) == 0);
}

TEST_CASE("findings carry their rule's catalog minutes") {
    const RuleCatalog catalog = RuleCatalog::defaults();
    const auto unit = testutil::load_fixture("SVGMaskElement.java");
    const Analyzed a = analyze(unit);
    for (const SmellFinding& f : detect_lint_rules(a.model, a.tokens, catalog, unit.path)) {
        const RuleSpec* rule = catalog.find(f.rule_id);
        REQUIRE(rule != nullptr);
        CHECK(f.remediation_minutes == rule->remediation_minutes);
        CHECK(f.span.first_line >= 1);
        CHECK(f.span.last_line <= a.loc.total_lines);
    }
}

TEST_CASE("appending a violating declaration never removes findings") {
    const RuleCatalog catalog = RuleCatalog::defaults();
    const std::string base = "class A { public int exposed; void f() { } ";
    const auto before = analyze(testutil::java_unit(base + "}"));
    const auto after =
        analyze(testutil::java_unit(base + "public int alsoExposed; }"));
    const auto counts_before =
        count_by_rule(detect_lint_rules(before.model, before.tokens, catalog));
    const auto counts_after =
        count_by_rule(detect_lint_rules(after.model, after.tokens, catalog));
    for (const auto& [rule, count] : counts_before) {
        CHECK(counts_after.at(rule) >= count);
    }
}

TEST_CASE("detection is deterministic") {
    const auto unit = testutil::load_fixture("SVGMaskElement.java");
    const Analyzed a = analyze(unit);
    const RuleCatalog catalog = RuleCatalog::defaults();
    const auto first = detect_lint_rules(a.model, a.tokens, catalog, unit.path);
    const auto second = detect_lint_rules(a.model, a.tokens, catalog, unit.path);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].rule_id == second[i].rule_id);
        CHECK(first[i].span.first_line == second[i].span.first_line);
        CHECK(first[i].message == second[i].message);
    }
}

TEST_CASE("catalog JSON round-trips and validates") {
    const RuleCatalog defaults = RuleCatalog::defaults();
    std::istringstream in(defaults.to_json());
    const RuleCatalog loaded = RuleCatalog::from_json(in);
    REQUIRE(loaded.rules().size() == defaults.rules().size());
    const RuleSpec* god = loaded.find(rule_id::kGodClass);
    REQUIRE(god != nullptr);
    CHECK(god->remediation_minutes == 240);
    CHECK(god->param("max_methods", 0) == 25);
    CHECK(god->param("health_cap", 0) == 2.0);

    std::istringstream bad("{\"rules\":[{\"id\":\"X\",\"tier\":\"lint\",\"severity\":\"MINOR\","
                           "\"remediation_minutes\":0}]}");
    CHECK_THROWS_AS(RuleCatalog::from_json(bad), AnalysisError);
}
