#include "maintlab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace maintlab {

HalsteadMetrics halstead(std::span<const Token> tokens) {
    std::unordered_map<std::string_view, int> operators;
    std::unordered_map<std::string_view, int> operands;
    for (const Token& t : tokens) {
        switch (t.kind) {
            case TokenKind::Comment:
            case TokenKind::Whitespace:
                break;
            case TokenKind::Operand:
            case TokenKind::Literal:
                ++operands[t.lexeme];
                break;
            case TokenKind::Keyword:
            case TokenKind::Operator:
                ++operators[t.lexeme];
                break;
            case TokenKind::Punctuation:
                if (t.lexeme == ";" || t.lexeme == ",") {
                    ++operators[t.lexeme];
                } else if (t.lexeme == "(") {
                    ++operators["()"];
                } else if (t.lexeme == "{") {
                    ++operators["{}"];
                } else if (t.lexeme == "[") {
                    ++operators["[]"];
                }
                // closing halves of grouping pairs are already covered
                break;
        }
    }
    HalsteadMetrics m;
    m.distinct_operators = static_cast<int>(operators.size());
    m.distinct_operands = static_cast<int>(operands.size());
    for (const auto& [_, count] : operators) m.total_operators += count;
    for (const auto& [_, count] : operands) m.total_operands += count;
    if (m.vocabulary() > 0) {
        m.volume = static_cast<double>(m.length()) * std::log2(static_cast<double>(m.vocabulary()));
    }
    return m;
}

int cyclomatic_complexity(const MethodDecl& method) {
    return 1 + method.decision_point_count;
}

double maintainability_index(double halstead_volume, double complexity, double code_lines) {
    const double hv = std::max(halstead_volume, 1.0);
    const double loc = std::max(code_lines, 1.0);
    const double raw =
        (171.0 - 5.2 * std::log(hv) - 0.23 * complexity - 16.2 * std::log(loc)) * 100.0 / 171.0;
    return std::max(0.0, raw);
}

MiBand mi_band(double mi) {
    if (mi < 10.0) return MiBand::Red;
    if (mi < 20.0) return MiBand::Yellow;
    return MiBand::Green;
}

std::string_view mi_band_name(MiBand band) {
    switch (band) {
        case MiBand::Red: return "Red";
        case MiBand::Yellow: return "Yellow";
        case MiBand::Green: return "Green";
    }
    return "?";
}

MetricVector compute_metrics(std::span<const Token> tokens, const StructuralModel& model,
                             const LocCounts& loc, CcAggregate aggregate) {
    MetricVector v;
    v.loc = loc.code_lines;
    v.halstead = halstead(tokens);
    for (const MethodDecl& method : model.methods) {
        const int cc = cyclomatic_complexity(method);
        v.cc_file += cc;
        v.cc_max = std::max(v.cc_max, cc);
    }
    double cc_for_index = static_cast<double>(v.cc_file);
    if (!model.methods.empty()) {
        if (aggregate == CcAggregate::Max) {
            cc_for_index = static_cast<double>(v.cc_max);
        } else if (aggregate == CcAggregate::Mean) {
            cc_for_index = static_cast<double>(v.cc_file) /
                           static_cast<double>(model.methods.size());
        }
    }
    v.mi = maintainability_index(v.halstead.volume, cc_for_index, static_cast<double>(v.loc));
    v.band = mi_band(v.mi);
    return v;
}

}  // namespace maintlab
