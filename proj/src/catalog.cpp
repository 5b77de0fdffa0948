#include "maintlab/catalog.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "maintlab/token.hpp"

namespace maintlab {

Severity severity_from_name(std::string_view name) {
    if (name == "INFO") return Severity::Info;
    if (name == "MINOR") return Severity::Minor;
    if (name == "MAJOR") return Severity::Major;
    if (name == "CRITICAL") return Severity::Critical;
    if (name == "BLOCKER") return Severity::Blocker;
    throw AnalysisError("unknown severity: " + std::string(name));
}

std::string_view severity_name(Severity severity) {
    switch (severity) {
        case Severity::Info: return "INFO";
        case Severity::Minor: return "MINOR";
        case Severity::Major: return "MAJOR";
        case Severity::Critical: return "CRITICAL";
        case Severity::Blocker: return "BLOCKER";
    }
    return "?";
}

RuleTier tier_from_name(std::string_view name) {
    if (name == "structural") return RuleTier::Structural;
    if (name == "lint") return RuleTier::Lint;
    throw AnalysisError("unknown rule tier: " + std::string(name));
}

std::string_view tier_name(RuleTier tier) {
    return tier == RuleTier::Structural ? "structural" : "lint";
}

double RuleSpec::param(const std::string& key, double fallback) const {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

RuleCatalog RuleCatalog::defaults() {
    RuleCatalog catalog;
    auto structural = [&](const char* id, Severity sev, int minutes, double penalty, double cap,
                          std::map<std::string, double> params) {
        params["health_cap"] = cap;
        catalog.add({id, RuleTier::Structural, sev, minutes, penalty, std::move(params)});
    };
    structural(rule_id::kGodClass, Severity::Critical, 240, 2.0, 2.0,
               {{"max_code_lines", 600}, {"max_methods", 25}});
    structural(rule_id::kGodMethod, Severity::Major, 60, 1.0, 3.0, {{"max_lines", 70}});
    structural(rule_id::kLongParameterList, Severity::Minor, 20, 0.4, 1.2,
               {{"max_parameters", 4}});
    structural(rule_id::kDeepNesting, Severity::Major, 15, 0.6, 1.8, {{"max_depth", 3}});
    structural(rule_id::kHighMethodComplexity, Severity::Major, 30, 0.8, 2.4,
               {{"max_complexity", 10}});
    structural(rule_id::kDuplicatedBlock, Severity::Major, 20, 0.5, 2.0,
               {{"min_window_tokens", 40}});

    auto lint = [&](const char* id, Severity sev, int minutes) {
        catalog.add({id, RuleTier::Lint, sev, minutes, 0.0, {}});
    };
    lint(rule_id::kPublicMutableField, Severity::Minor, 10);
    lint(rule_id::kNonFinalAssignedOnceField, Severity::Minor, 5);
    lint(rule_id::kEmptyBody, Severity::Minor, 20);
    lint(rule_id::kModifierOrder, Severity::Info, 2);
    lint(rule_id::kNamingConvention, Severity::Minor, 5);
    return catalog;
}

RuleCatalog RuleCatalog::from_json(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw AnalysisError(std::string("catalog JSON parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rules") || !doc["rules"].is_array()) {
        throw AnalysisError("catalog JSON must be an object with a \"rules\" array");
    }
    RuleCatalog catalog;
    for (const auto& entry : doc["rules"]) {
        RuleSpec rule;
        try {
            rule.id = entry.at("id").get<std::string>();
            rule.tier = tier_from_name(entry.at("tier").get<std::string>());
            rule.severity = severity_from_name(entry.at("severity").get<std::string>());
            rule.remediation_minutes = entry.at("remediation_minutes").get<int>();
            rule.health_penalty = entry.value("health_penalty", 0.0);
            if (entry.contains("params")) {
                for (const auto& [key, value] : entry["params"].items()) {
                    rule.params[key] = value.get<double>();
                }
            }
        } catch (const nlohmann::json::exception& e) {
            throw AnalysisError("catalog rule entry malformed: " + std::string(e.what()));
        }
        if (rule.remediation_minutes <= 0) {
            throw AnalysisError("rule " + rule.id + ": remediation_minutes must be positive");
        }
        if (rule.health_penalty < 0) {
            throw AnalysisError("rule " + rule.id + ": health_penalty must be non-negative");
        }
        catalog.add(std::move(rule));
    }
    return catalog;
}

RuleCatalog RuleCatalog::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw AnalysisError("cannot open catalog file: " + path);
    return from_json(in);
}

void RuleCatalog::add(RuleSpec rule) {
    rules_.push_back(std::move(rule));
}

const RuleSpec* RuleCatalog::find(std::string_view id) const {
    for (const RuleSpec& rule : rules_) {
        if (rule.id == id) return &rule;
    }
    return nullptr;
}

std::string RuleCatalog::to_json() const {
    nlohmann::ordered_json doc;
    doc["rules"] = nlohmann::ordered_json::array();
    for (const RuleSpec& rule : rules_) {
        nlohmann::ordered_json entry;
        entry["id"] = rule.id;
        entry["tier"] = std::string(tier_name(rule.tier));
        entry["severity"] = std::string(severity_name(rule.severity));
        entry["remediation_minutes"] = rule.remediation_minutes;
        entry["health_penalty"] = rule.health_penalty;
        entry["params"] = rule.params;
        doc["rules"].push_back(std::move(entry));
    }
    return doc.dump(2);
}

}  // namespace maintlab
