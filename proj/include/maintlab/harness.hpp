#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "maintlab/bench.hpp"
#include "maintlab/learner.hpp"

namespace maintlab {

class PathMismatchError : public AnalysisError {
  public:
    explicit PathMismatchError(std::vector<std::string> missing);
    const std::vector<std::string>& missing() const { return missing_; }

  private:
    std::vector<std::string> missing_;
};

/// Analyze-stage numbers for one file, as read back from the output tables.
struct MetricRecord {
    double mi = 0.0;
    double health = 10.0;
    double code_lines = 0.0;
    double td_time = 0.0;
    double td_ratio = 0.0;
    std::vector<double> features;
};

struct MetricTable {
    std::vector<std::string> feature_names;
    std::map<std::string, MetricRecord> rows;  // keyed by path
};

/// Metric vectors reordered to match the label file. Labeled paths missing
/// from the table raise PathMismatchError; analyzed-but-unlabeled paths are
/// listed in `unlabeled` for diagnostics.
struct AlignedCorpus {
    std::vector<std::string> paths;
    std::vector<bool> truth;  // maintainable
    std::vector<double> mi;
    std::vector<double> health;
    std::vector<double> code_lines;
    std::vector<double> td_time;
    std::vector<double> td_ratio;
    std::vector<std::vector<double>> features;
    std::vector<std::string> unlabeled;
};

AlignedCorpus align_corpus(const MetricTable& table,
                           std::span<const GroundTruthLabel> labels);

struct BenchOptions {
    std::set<std::string> approaches;  // empty = all of A..G
    LearnerConfig learner;
    /// Out-of-process scores for approach A (path-aligned with the corpus);
    /// when absent, A trains in-process via cross-validation.
    std::optional<std::vector<double>> external_scores;
};

struct BenchOutcome {
    std::vector<EvalReport> rows;  // sorted by AUC descending, then id
    std::map<std::string, RocCurve> uc1_curves;
    std::map<std::string, RocCurve> uc2_curves;
    std::map<std::string, RocPoint> uc1_stars;  // performance at the default threshold
    std::map<std::string, RocPoint> uc2_stars;
    std::vector<double> learner_scores;  // out-of-fold, aligned with corpus paths
};

/// Run every selected approach as a binary classifier at its default
/// threshold, sweep its grid into ROC curves, and assemble the report rows
/// (including the human-expert reference row F).
BenchOutcome run_bench(const AlignedCorpus& corpus, const BenchOptions& options);

const std::vector<double>& metric_values(const AlignedCorpus& corpus, MetricSource source,
                                         const std::vector<double>& learner_scores);

}  // namespace maintlab
