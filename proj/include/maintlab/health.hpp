#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "maintlab/smells.hpp"

namespace maintlab {

enum class HealthCategory { Healthy, Warning, Alert };

std::string_view health_category_name(HealthCategory category);

struct HealthScore {
    double value = 10.0;  // 1.0..10.0, one decimal
    HealthCategory category = HealthCategory::Healthy;
    std::map<std::string, int> contributing;  // structural rule id -> finding count
};

/// Aggregate structural findings into a 1-10 score. Each rule contributes
/// min(count * health_penalty, health_cap) penalty points; the score is
/// 10 minus the total, clamped to [1, 10] and rounded to one decimal.
/// Lint-tier findings never reach the score; only high-level smells drive
/// it. healthy >= 9.0, alert < 4.0, warning between.
HealthScore health_score(std::span<const SmellFinding> findings, const RuleCatalog& catalog);

}  // namespace maintlab
