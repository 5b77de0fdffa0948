#pragma once

#include <span>
#include <string>
#include <vector>

#include "maintlab/catalog.hpp"
#include "maintlab/duplication.hpp"
#include "maintlab/loc.hpp"
#include "maintlab/structure.hpp"
#include "maintlab/token.hpp"

namespace maintlab {

struct SmellFinding {
    std::string rule_id;
    std::string path;
    Span span;
    std::string message;  // remediation hint
    int remediation_minutes = 0;
    Severity severity = Severity::Minor;
};

/// Structural-tier detectors: GodClass, GodMethod, LongParameterList,
/// DeepNesting, HighMethodComplexity, and DuplicatedBlock (one finding per
/// detected pair, passed in precomputed). All thresholds are strict:
/// a value equal to its limit does not violate.
std::vector<SmellFinding> detect_structural_smells(
    const StructuralModel& model, const LocCounts& loc, const RuleCatalog& catalog,
    std::span<const DuplicatePair> duplicates = {}, const std::string& path = {});

/// Lint-tier detectors: PublicMutableField, NonFinalAssignedOnceField,
/// EmptyBody, ModifierOrder, NamingConvention. One finding per violating
/// site. Field writes are counted lexically over the token stream; a
/// non-final field with at most one plain `name = ...` site and no compound
/// assignment or ++/-- is flagged as effectively final.
std::vector<SmellFinding> detect_lint_rules(const StructuralModel& model,
                                            std::span<const Token> tokens,
                                            const RuleCatalog& catalog,
                                            const std::string& path = {});

/// Canonical Java modifier order; returns true when `modifiers` is sorted
/// according to it.
bool modifiers_in_canonical_order(std::span<const std::string> modifiers);

}  // namespace maintlab
