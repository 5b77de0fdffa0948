#pragma once

#include <span>
#include <string_view>

#include "maintlab/loc.hpp"
#include "maintlab/structure.hpp"
#include "maintlab/token.hpp"

namespace maintlab {

/// Operator/operand counts over a token stream. Classification:
/// keywords and symbolic operators are operators; `;` and `,` are operators;
/// each grouping pair () {} [] counts as a single operator, tallied at the
/// opening token; identifiers and literals are operands. Comments and
/// whitespace never count.
struct HalsteadMetrics {
    int distinct_operators = 0;  // n1
    int distinct_operands = 0;   // n2
    int total_operators = 0;     // N1
    int total_operands = 0;      // N2
    double volume = 0.0;         // (N1+N2) * log2(n1+n2), 0 when vocabulary is 0

    int vocabulary() const { return distinct_operators + distinct_operands; }
    int length() const { return total_operators + total_operands; }
};

HalsteadMetrics halstead(std::span<const Token> tokens);

/// 1 + decision points; never below 1.
int cyclomatic_complexity(const MethodDecl& method);

/// 0..100 index from volume, complexity, and code lines. Volume and lines
/// are clamped to 1 before taking logs so trivial files score 100.
double maintainability_index(double halstead_volume, double complexity, double code_lines);

enum class MiBand { Red, Yellow, Green };

/// Red < 10, Yellow < 20, Green otherwise.
MiBand mi_band(double mi);

std::string_view mi_band_name(MiBand band);

/// How per-method complexities combine into the file-level figure fed to the
/// index formula.
enum class CcAggregate { Sum, Max, Mean };

struct MetricVector {
    int loc = 0;      // code lines
    int cc_file = 0;  // sum of per-method complexities
    int cc_max = 0;
    HalsteadMetrics halstead;
    double mi = 0.0;
    MiBand band = MiBand::Green;
};

MetricVector compute_metrics(std::span<const Token> tokens, const StructuralModel& model,
                             const LocCounts& loc, CcAggregate aggregate = CcAggregate::Sum);

}  // namespace maintlab
