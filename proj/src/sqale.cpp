#include "maintlab/sqale.hpp"

#include <algorithm>

namespace maintlab {

std::string_view rating_name(Rating rating) {
    switch (rating) {
        case Rating::A: return "A";
        case Rating::B: return "B";
        case Rating::C: return "C";
        case Rating::D: return "D";
        case Rating::E: return "E";
    }
    return "?";
}

double td_time(std::span<const SmellFinding> findings) {
    double total = 0.0;
    for (const SmellFinding& finding : findings) total += finding.remediation_minutes;
    return total;
}

double td_ratio(double td_time_minutes, int code_lines, double cost_per_line) {
    const double cost = cost_per_line * std::max(code_lines, 1);
    return td_time_minutes / cost;
}

Rating maintainability_rating(double ratio) {
    if (ratio <= 0.05) return Rating::A;
    if (ratio <= 0.10) return Rating::B;
    if (ratio <= 0.20) return Rating::C;
    if (ratio <= 0.50) return Rating::D;
    return Rating::E;
}

SqaleResult sqale(std::span<const SmellFinding> findings, int code_lines, double cost_per_line) {
    SqaleResult result;
    result.td_time_minutes = td_time(findings);
    result.dev_cost_minutes = cost_per_line * std::max(code_lines, 1);
    result.td_ratio = result.td_time_minutes / result.dev_cost_minutes;
    result.rating = maintainability_rating(result.td_ratio);
    return result;
}

}  // namespace maintlab
