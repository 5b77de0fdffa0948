#include "maintlab/health.hpp"

#include <algorithm>
#include <cmath>

namespace maintlab {

std::string_view health_category_name(HealthCategory category) {
    switch (category) {
        case HealthCategory::Healthy: return "healthy";
        case HealthCategory::Warning: return "warning";
        case HealthCategory::Alert: return "alert";
    }
    return "?";
}

HealthScore health_score(std::span<const SmellFinding> findings, const RuleCatalog& catalog) {
    HealthScore score;
    for (const SmellFinding& finding : findings) {
        const RuleSpec* rule = catalog.find(finding.rule_id);
        if (rule == nullptr || rule->tier != RuleTier::Structural) continue;
        ++score.contributing[finding.rule_id];
    }
    double penalty = 0.0;
    for (const auto& [rule_id, count] : score.contributing) {
        const RuleSpec* rule = catalog.find(rule_id);
        const double per_finding = rule->health_penalty;
        const double cap = rule->param("health_cap", per_finding * count);
        penalty += std::min(per_finding * count, cap);
    }
    const double raw = std::clamp(10.0 - penalty, 1.0, 10.0);
    score.value = std::round(raw * 10.0) / 10.0;
    score.category = score.value >= 9.0   ? HealthCategory::Healthy
                     : score.value < 4.0 ? HealthCategory::Alert
                                         : HealthCategory::Warning;
    return score;
}

}  // namespace maintlab
