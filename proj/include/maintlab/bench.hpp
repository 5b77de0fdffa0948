#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maintlab/token.hpp"

namespace maintlab {

/// Human ground truth for one file: a 0..3 ordinal where the lower two
/// values mean maintainable.
struct GroundTruthLabel {
    std::string path;
    std::string project;
    int ordinal = 0;
    bool maintainable = true;  // ordinal <= 1
};

class LabelsError : public AnalysisError {
  public:
    using AnalysisError::AnalysisError;
};

/// Parse a `path,project,ordinal` CSV (header required). Rejects duplicate
/// paths, out-of-range ordinals, and malformed rows, reporting line numbers.
std::vector<GroundTruthLabel> load_labels(std::istream& in);
std::vector<GroundTruthLabel> load_labels_file(const std::string& path);

enum class MetricSource {
    LearnerScore,  // (A)
    HealthValue,   // (B)
    CodeLines,     // (C)
    Mi,            // (D)
    TdTime,        // (E)
    TdRatio,       // (G)
};

/// How a metric value at a threshold maps to a "maintainable" verdict.
enum class ThresholdRule {
    GreaterEqual,  // value >= t  (health, index, learner score)
    LessEqual,     // value <= t  (code lines, debt ratio)
    LessThan,      // value <  t  (debt time)
};

struct SweepGrid {
    double lo = 0.0;
    double hi = 1.0;
    double step = 0.1;

    int point_count() const;
    /// i-th threshold, snapped to the grid's decimal resolution so that e.g.
    /// 1.0 + 80*0.1 lands exactly on 9.0.
    double threshold_at(int i) const;
};

struct ApproachSpec {
    std::string id;    // "A".."G"
    std::string name;  // human label for reports
    MetricSource source = MetricSource::Mi;
    ThresholdRule rule = ThresholdRule::GreaterEqual;
    double default_threshold = 0.0;
    SweepGrid grid;
};

/// The shipped approaches A-E and G (F is the human-expert reference row and
/// has no metric to sweep).
std::vector<ApproachSpec> default_approaches();
const ApproachSpec* find_approach(std::span<const ApproachSpec> approaches, std::string_view id);

/// Maintainable/unmaintainable verdict for one metric value.
bool classify(double value, const ApproachSpec& approach, double threshold);

enum class UseCase { UC1, UC2 };  // positive class: maintainable / unmaintainable

struct ConfusionMatrix {
    long tp = 0;
    long fp = 0;
    long tn = 0;
    long fn = 0;
    UseCase use_case = UseCase::UC1;

    long total() const { return tp + fp + tn + fn; }
};

/// Precision or recall is empty when its denominator is zero (the undefined
/// marker); the F-score is 0 in that case.
struct Scores {
    double accuracy = 0.0;
    std::optional<double> precision;
    std::optional<double> recall;
    double f1 = 0.0;
    double f_beta = 0.0;  // at the beta passed to evaluate
};

double f_beta_score(double precision, double recall, double beta);

/// Confusion counts + scores for aligned prediction/truth vectors. UC2
/// inverts both the ground truth and the positive class, so accuracy is
/// identical across use cases.
std::pair<ConfusionMatrix, Scores> evaluate(const std::vector<bool>& predicted_maintainable,
                                            const std::vector<bool>& truth_maintainable,
                                            UseCase use_case, double beta = 0.5);

struct RocPoint {
    double threshold = 0.0;
    double fpr = 0.0;
    double tpr = 0.0;
};

struct RocCurve {
    std::vector<RocPoint> points;  // deduplicated, sorted by (fpr, tpr)
    double auc = 0.0;
    int grid_points = 0;  // thresholds swept, before dedup
};

class EmptyCorpusError : public AnalysisError {
  public:
    EmptyCorpusError() : AnalysisError("empty corpus: no values to sweep") {}
};

class UnsortedPointsError : public AnalysisError {
  public:
    UnsortedPointsError() : AnalysisError("ROC points are not sorted by FPR") {}
};

/// Sweep the approach's grid, classifying every file at each threshold.
/// Synthetic endpoints (0,0) and (1,1) are appended when the grid does not
/// produce them.
RocCurve roc_sweep(std::span<const double> values, const std::vector<bool>& truth_maintainable,
                   const ApproachSpec& approach, UseCase use_case);

/// Composite trapezoid over points sorted by FPR. Throws UnsortedPointsError.
double auc_trapezoid(std::span<const RocPoint> points);

/// Table row for one approach at its default threshold.
struct EvalReport {
    std::string approach_id;
    std::string approach_name;
    double threshold = 0.0;
    double accuracy = 0.0;
    Scores uc1;
    Scores uc2;  // f_beta carries F0.5
    double auc = 0.0;
};

/// Average-human-expert reference constants, rendered in reports for
/// comparison only.
struct ReferenceBaselines {
    static constexpr double kAccuracy = 0.70;
    static constexpr double kPrecision = 0.88;
    static constexpr double kRecall = 0.88;
    static constexpr double kF1 = 0.88;
    static constexpr double kAuc = 0.83;
};

}  // namespace maintlab
