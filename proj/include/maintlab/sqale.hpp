#pragma once

#include <span>
#include <string_view>

#include "maintlab/smells.hpp"

namespace maintlab {

enum class Rating { A, B, C, D, E };

std::string_view rating_name(Rating rating);

struct SqaleResult {
    double td_time_minutes = 0.0;
    double dev_cost_minutes = 0.0;  // cost_per_line * max(code_lines, 1)
    double td_ratio = 0.0;
    Rating rating = Rating::A;
};

inline constexpr double kDefaultCostPerLine = 30.0;  // minutes per code line

/// Sum of remediation minutes over all findings (both tiers).
double td_time(std::span<const SmellFinding> findings);

/// Debt divided by estimated development cost; a zero-line file is costed as
/// one line so the ratio stays defined.
double td_ratio(double td_time_minutes, int code_lines, double cost_per_line);

/// A <= 0.05 < B <= 0.10 < C <= 0.20 < D <= 0.50 < E (inclusive upper bounds).
Rating maintainability_rating(double ratio);

SqaleResult sqale(std::span<const SmellFinding> findings, int code_lines,
                  double cost_per_line = kDefaultCostPerLine);

}  // namespace maintlab
