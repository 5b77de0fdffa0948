#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "maintlab/analyzer.hpp"
#include "maintlab/bench.hpp"
#include "maintlab/harness.hpp"

namespace maintlab {

// Analyze-stage writers. Only fully analyzed files appear in the tables;
// failures land in the diagnostics stream. Each per-file table ships as CSV
// and as an equivalent JSON-lines stream.
void write_metrics_csv(std::ostream& out, std::span<const FileAnalysis> analyses);
void write_metrics_jsonl(std::ostream& out, std::span<const FileAnalysis> analyses);
void write_findings_jsonl(std::ostream& out, std::span<const FileAnalysis> analyses);
void write_sqale_csv(std::ostream& out, std::span<const FileAnalysis> analyses);
void write_sqale_jsonl(std::ostream& out, std::span<const FileAnalysis> analyses);
void write_health_csv(std::ostream& out, std::span<const FileAnalysis> analyses);
void write_health_jsonl(std::ostream& out, std::span<const FileAnalysis> analyses);
void write_features_csv(std::ostream& out, std::span<const FileAnalysis> analyses,
                        const RuleCatalog& catalog);
void write_diagnostics_jsonl(std::ostream& out, std::span<const FileAnalysis> analyses);

/// Read the analyze outputs back into one table keyed by path.
/// `cost_per_line` rebuilds the debt ratio at full precision (the CSV keeps
/// three decimals for display).
MetricTable read_metric_table(std::istream& metrics_csv, std::istream& sqale_csv,
                              std::istream& health_csv, std::istream& features_csv,
                              double cost_per_line);

/// Benchmark table, one row per approach, already sorted.
void write_report_csv(std::ostream& out, std::span<const EvalReport> rows);

/// `path,score` predictions, e.g. the learner's out-of-fold scores.
void write_predictions_csv(std::ostream& out, std::span<const std::string> paths,
                           std::span<const double> scores);
std::vector<std::pair<std::string, double>> read_predictions_csv(std::istream& in);

/// All curves of one use case: approach,threshold,fpr,tpr rows (synthetic
/// endpoints carry an empty threshold cell).
void write_roc_csv(std::ostream& out,
                   const std::map<std::string, RocCurve>& curves_by_approach);

}  // namespace maintlab
