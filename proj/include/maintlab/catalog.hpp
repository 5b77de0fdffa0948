#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace maintlab {

enum class Severity { Info, Minor, Major, Critical, Blocker };
enum class RuleTier { Structural, Lint };

Severity severity_from_name(std::string_view name);
std::string_view severity_name(Severity severity);
RuleTier tier_from_name(std::string_view name);
std::string_view tier_name(RuleTier tier);

/// One configurable rule. `params` carries the rule's thresholds (e.g.
/// max_methods for GodClass) and, for structural rules, the health-score cap
/// under key "health_cap".
struct RuleSpec {
    std::string id;
    RuleTier tier = RuleTier::Lint;
    Severity severity = Severity::Minor;
    int remediation_minutes = 5;
    double health_penalty = 0.0;  // structural tier only
    std::map<std::string, double> params;

    double param(const std::string& key, double fallback) const;
};

class RuleCatalog {
  public:
    static RuleCatalog defaults();
    /// Parse {"rules":[{id,tier,severity,remediation_minutes,health_penalty,params}]}.
    /// Throws AnalysisError on schema problems.
    static RuleCatalog from_json(std::istream& in);
    static RuleCatalog load_file(const std::string& path);

    void add(RuleSpec rule);
    const RuleSpec* find(std::string_view id) const;
    const std::vector<RuleSpec>& rules() const { return rules_; }
    std::string to_json() const;

  private:
    std::vector<RuleSpec> rules_;
};

// Rule ids shipped in the default catalog.
namespace rule_id {
inline constexpr const char* kGodClass = "GodClass";
inline constexpr const char* kGodMethod = "GodMethod";
inline constexpr const char* kLongParameterList = "LongParameterList";
inline constexpr const char* kDeepNesting = "DeepNesting";
inline constexpr const char* kHighMethodComplexity = "HighMethodComplexity";
inline constexpr const char* kDuplicatedBlock = "DuplicatedBlock";
inline constexpr const char* kPublicMutableField = "PublicMutableField";
inline constexpr const char* kNonFinalAssignedOnceField = "NonFinalAssignedOnceField";
inline constexpr const char* kEmptyBody = "EmptyBody";
inline constexpr const char* kModifierOrder = "ModifierOrder";
inline constexpr const char* kNamingConvention = "NamingConvention";
}  // namespace rule_id

}  // namespace maintlab
