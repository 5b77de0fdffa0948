#include "maintlab/smells.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "maintlab/metrics.hpp"

namespace maintlab {

namespace {

SmellFinding make_finding(const RuleSpec& rule, const std::string& path, Span span,
                          std::string message) {
    return {rule.id, path, span, std::move(message), rule.remediation_minutes, rule.severity};
}

bool lower_camel_case(const std::string& name) {
    if (name.empty() || !std::islower(static_cast<unsigned char>(name.front()))) return false;
    return std::all_of(name.begin(), name.end(),
                       [](unsigned char c) { return std::isalnum(c); });
}

bool upper_snake_case(const std::string& name) {
    if (name.empty() || !std::isupper(static_cast<unsigned char>(name.front()))) return false;
    return std::all_of(name.begin(), name.end(), [](unsigned char c) {
        return std::isupper(c) || std::isdigit(c) || c == '_';
    });
}

int modifier_rank(const std::string& modifier) {
    static const std::unordered_map<std::string, int> kRank = {
        {"public", 0},    {"protected", 0}, {"private", 0},      {"abstract", 1},
        {"default", 1},   {"static", 2},    {"final", 3},        {"transient", 4},
        {"volatile", 5},  {"synchronized", 6}, {"native", 7},    {"strictfp", 8},
    };
    const auto it = kRank.find(modifier);
    return it == kRank.end() ? 9 : it->second;
}

std::string join(std::span<const std::string> parts) {
    std::string out;
    for (const std::string& p : parts) {
        if (!out.empty()) out += ' ';
        out += p;
    }
    return out;
}

const std::unordered_set<std::string_view> kCompoundAssignmentOps = {
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>=",
};

struct WriteCounts {
    int plain = 0;      // `name = ...` sites, declaration initializer included
    int modifying = 0;  // compound assignment or ++/--; rules out finality
};

// Lexical scan for writes to each field name. Local variables shadowing a
// field inflate the counts; the rule only gets more conservative from that.
std::unordered_map<std::string, WriteCounts> count_field_writes(
    const StructuralModel& model, std::span<const Token> tokens) {
    std::unordered_set<std::string> field_names;
    for (const TypeDecl& type : model.types) {
        for (const FieldDecl& field : type.fields) field_names.insert(field.name);
    }
    std::unordered_map<std::string, WriteCounts> counts;
    std::vector<const Token*> sig;
    for (const Token& t : tokens) {
        if (t.kind != TokenKind::Whitespace && t.kind != TokenKind::Comment) sig.push_back(&t);
    }
    for (std::size_t i = 0; i < sig.size(); ++i) {
        if (sig[i]->kind != TokenKind::Operand || field_names.count(sig[i]->lexeme) == 0) {
            continue;
        }
        const Token* next = i + 1 < sig.size() ? sig[i + 1] : nullptr;
        const Token* prev = i > 0 ? sig[i - 1] : nullptr;
        WriteCounts& c = counts[sig[i]->lexeme];
        if (next != nullptr && next->kind == TokenKind::Operator && next->lexeme == "=") {
            ++c.plain;
        } else if ((next != nullptr && (kCompoundAssignmentOps.count(next->lexeme) != 0 ||
                                        next->lexeme == "++" || next->lexeme == "--")) ||
                   (prev != nullptr && (prev->lexeme == "++" || prev->lexeme == "--"))) {
            ++c.modifying;
        }
    }
    return counts;
}

}  // namespace

bool modifiers_in_canonical_order(std::span<const std::string> modifiers) {
    int last = -1;
    for (const std::string& m : modifiers) {
        const int rank = modifier_rank(m);
        if (rank < last) return false;
        last = rank;
    }
    return true;
}

std::vector<SmellFinding> detect_structural_smells(const StructuralModel& model,
                                                   const LocCounts& loc,
                                                   const RuleCatalog& catalog,
                                                   std::span<const DuplicatePair> duplicates,
                                                   const std::string& path) {
    std::vector<SmellFinding> findings;

    if (const RuleSpec* rule = catalog.find(rule_id::kGodClass)) {
        const double max_lines = rule->param("max_code_lines", 600);
        const double max_methods = rule->param("max_methods", 25);
        for (const TypeDecl& type : model.types) {
            if (loc.code_lines > max_lines && type.method_count > max_methods) {
                std::ostringstream msg;
                msg << "Type '" << type.name << "' concentrates " << type.method_count
                    << " methods in a file of " << loc.code_lines
                    << " code lines; split its responsibilities into smaller classes.";
                findings.push_back(make_finding(*rule, path, type.span, msg.str()));
            }
        }
    }
    if (const RuleSpec* rule = catalog.find(rule_id::kGodMethod)) {
        const double max_lines = rule->param("max_lines", 70);
        for (const MethodDecl& method : model.methods) {
            if (method.span.lines() > max_lines) {
                std::ostringstream msg;
                msg << "Method '" << method.name << "' spans " << method.span.lines()
                    << " lines (limit " << max_lines << "); extract helper methods.";
                findings.push_back(make_finding(*rule, path, method.span, msg.str()));
            }
        }
    }
    if (const RuleSpec* rule = catalog.find(rule_id::kLongParameterList)) {
        const double max_params = rule->param("max_parameters", 4);
        for (const MethodDecl& method : model.methods) {
            if (method.parameter_count > max_params) {
                std::ostringstream msg;
                msg << "Method '" << method.name << "' takes " << method.parameter_count
                    << " parameters (limit " << max_params
                    << "); group related parameters into an object.";
                findings.push_back(make_finding(*rule, path, method.span, msg.str()));
            }
        }
    }
    if (const RuleSpec* rule = catalog.find(rule_id::kDeepNesting)) {
        const double max_depth = rule->param("max_depth", 3);
        for (const MethodDecl& method : model.methods) {
            if (method.max_nesting_depth > max_depth) {
                std::ostringstream msg;
                msg << "Method '" << method.name << "' nests blocks " << method.max_nesting_depth
                    << " levels deep (limit " << max_depth
                    << "); flatten with early returns or extracted methods.";
                findings.push_back(make_finding(*rule, path, method.span, msg.str()));
            }
        }
    }
    if (const RuleSpec* rule = catalog.find(rule_id::kHighMethodComplexity)) {
        const double max_cc = rule->param("max_complexity", 10);
        for (const MethodDecl& method : model.methods) {
            const int cc = cyclomatic_complexity(method);
            if (cc > max_cc) {
                std::ostringstream msg;
                msg << "Method '" << method.name << "' has cyclomatic complexity " << cc
                    << " (limit " << max_cc << "); simplify its branching.";
                findings.push_back(make_finding(*rule, path, method.span, msg.str()));
            }
        }
    }
    if (const RuleSpec* rule = catalog.find(rule_id::kDuplicatedBlock)) {
        for (const DuplicatePair& pair : duplicates) {
            std::ostringstream msg;
            msg << "Lines " << pair.second_lines.first_line << "-" << pair.second_lines.last_line
                << " duplicate lines " << pair.first_lines.first_line << "-"
                << pair.first_lines.last_line << " (" << pair.token_length()
                << " tokens); extract the shared logic.";
            findings.push_back(make_finding(*rule, path, pair.second_lines, msg.str()));
        }
    }
    return findings;
}

std::vector<SmellFinding> detect_lint_rules(const StructuralModel& model,
                                            std::span<const Token> tokens,
                                            const RuleCatalog& catalog,
                                            const std::string& path) {
    std::vector<SmellFinding> findings;
    const RuleSpec* public_mutable = catalog.find(rule_id::kPublicMutableField);
    const RuleSpec* assigned_once = catalog.find(rule_id::kNonFinalAssignedOnceField);
    const RuleSpec* empty_body = catalog.find(rule_id::kEmptyBody);
    const RuleSpec* modifier_order = catalog.find(rule_id::kModifierOrder);
    const RuleSpec* naming = catalog.find(rule_id::kNamingConvention);

    const auto writes = assigned_once != nullptr
                            ? count_field_writes(model, tokens)
                            : std::unordered_map<std::string, WriteCounts>{};

    for (const TypeDecl& type : model.types) {
        for (const FieldDecl& field : type.fields) {
            if (public_mutable != nullptr && field.is_public && !field.is_final &&
                !field.is_static) {
                findings.push_back(make_finding(
                    *public_mutable, path, field.span,
                    "Field '" + field.name +
                        "' is public and mutable; make it private with accessor methods or a "
                        "static final constant."));
            }
            if (assigned_once != nullptr && !field.is_final) {
                const auto it = writes.find(field.name);
                const WriteCounts c = it == writes.end() ? WriteCounts{} : it->second;
                if (c.modifying == 0 && c.plain <= 1) {
                    findings.push_back(make_finding(
                        *assigned_once, path, field.span,
                        "Field '" + field.name +
                            "' is assigned at most once; declare it final."));
                }
            }
            if (modifier_order != nullptr &&
                !modifiers_in_canonical_order(field.modifier_order)) {
                findings.push_back(make_finding(
                    *modifier_order, path, field.span,
                    "Field '" + field.name + "' declares modifiers as '" +
                        join(field.modifier_order) + "'; use the canonical order."));
            }
            if (naming != nullptr) {
                const bool constant = field.is_static && field.is_final;
                const bool ok = constant ? upper_snake_case(field.name)
                                         : lower_camel_case(field.name);
                if (!ok) {
                    findings.push_back(make_finding(
                        *naming, path, field.span,
                        "Field '" + field.name + "' does not follow " +
                            (constant ? "UPPER_SNAKE_CASE" : "lowerCamelCase") +
                            " naming."));
                }
            }
        }
    }

    for (const MethodDecl& method : model.methods) {
        if (empty_body != nullptr && method.body_is_empty) {
            findings.push_back(make_finding(
                *empty_body, path, method.span,
                std::string(method.is_constructor ? "Constructor '" : "Method '") + method.name +
                    "' has an empty body; remove it or document why it is intentionally "
                    "empty."));
        }
        if (modifier_order != nullptr && !modifiers_in_canonical_order(method.modifier_order)) {
            findings.push_back(make_finding(
                *modifier_order, path, method.span,
                "Method '" + method.name + "' declares modifiers as '" +
                    join(method.modifier_order) + "'; use the canonical order."));
        }
        if (naming != nullptr && !method.is_constructor && !lower_camel_case(method.name)) {
            findings.push_back(make_finding(
                *naming, path, method.span,
                "Method '" + method.name + "' does not follow lowerCamelCase naming."));
        }
    }
    return findings;
}

}  // namespace maintlab
