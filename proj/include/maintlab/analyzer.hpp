#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maintlab/catalog.hpp"
#include "maintlab/duplication.hpp"
#include "maintlab/health.hpp"
#include "maintlab/loc.hpp"
#include "maintlab/metrics.hpp"
#include "maintlab/smells.hpp"
#include "maintlab/sqale.hpp"
#include "maintlab/structure.hpp"
#include "maintlab/token.hpp"

namespace maintlab {

enum class AnalysisStatus {
    Ok,
    TokenizeFailed,   // malformed text; only diagnostics are available
    StructureFailed,  // unbalanced braces; line counts available, metrics absent
};

struct AnalyzerConfig {
    RuleCatalog catalog = RuleCatalog::defaults();
    double cost_per_line = kDefaultCostPerLine;
    CcAggregate cc_aggregate = CcAggregate::Sum;
};

/// Everything the pipeline produces for one file. Optional results stay
/// empty when the stage they depend on failed.
struct FileAnalysis {
    std::string path;
    std::string project;
    AnalysisStatus status = AnalysisStatus::Ok;
    std::vector<std::string> diagnostics;

    LocCounts loc;
    std::vector<Token> tokens;
    std::optional<StructuralModel> structure;
    std::vector<DuplicatePair> duplicates;
    std::vector<SmellFinding> findings;  // structural first, then lint
    std::optional<MetricVector> metrics;
    std::optional<SqaleResult> sqale;
    std::optional<HealthScore> health;
};

/// Run the full per-file pipeline. Pure in (unit, config); never throws for
/// malformed input, only for unsupported languages.
FileAnalysis analyze_unit(const SourceUnit& unit, const AnalyzerConfig& config);

/// Names of the learner features, in column order.
std::vector<std::string> feature_names(const RuleCatalog& catalog);

/// Numeric feature row for one fully analyzed file, aligned with
/// feature_names(). Returns nullopt when the analysis is incomplete.
std::optional<std::vector<double>> feature_row(const FileAnalysis& analysis,
                                               const RuleCatalog& catalog);

/// Analyze many units with `jobs` worker threads; the result order matches
/// the input order regardless of scheduling.
std::vector<FileAnalysis> analyze_corpus(const std::vector<SourceUnit>& units,
                                         const AnalyzerConfig& config, int jobs = 1);

}  // namespace maintlab
