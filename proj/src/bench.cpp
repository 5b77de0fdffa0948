#include "maintlab/bench.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "maintlab/csv.hpp"

namespace maintlab {

std::vector<GroundTruthLabel> load_labels(std::istream& in) {
    std::vector<GroundTruthLabel> labels;
    std::set<std::string> seen;
    std::string line;
    int line_no = 0;
    bool header_checked = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> cells = csv::split_row(line);
        if (!header_checked) {
            header_checked = true;
            if (cells.size() < 3 || cells[0] != "path" || cells[1] != "project" ||
                cells[2] != "ordinal") {
                throw LabelsError("labels CSV must start with header path,project,ordinal (line " +
                                  std::to_string(line_no) + ")");
            }
            continue;
        }
        if (cells.size() != 3) {
            throw LabelsError("malformed label row: expected 3 cells, got " +
                              std::to_string(cells.size()) + " (line " + std::to_string(line_no) +
                              ")");
        }
        GroundTruthLabel label;
        label.path = cells[0];
        label.project = cells[1];
        if (label.path.empty()) {
            throw LabelsError("malformed label row: empty path (line " + std::to_string(line_no) +
                              ")");
        }
        try {
            std::size_t consumed = 0;
            label.ordinal = std::stoi(cells[2], &consumed);
            if (consumed != cells[2].size()) throw std::invalid_argument(cells[2]);
        } catch (const std::exception&) {
            throw LabelsError("malformed label row: ordinal '" + cells[2] +
                              "' is not an integer (line " + std::to_string(line_no) + ")");
        }
        if (label.ordinal < 0 || label.ordinal > 3) {
            throw LabelsError("ordinal out of range 0..3: " + std::to_string(label.ordinal) +
                              " (line " + std::to_string(line_no) + ")");
        }
        if (!seen.insert(label.path).second) {
            throw LabelsError("duplicate path '" + label.path + "' (line " +
                              std::to_string(line_no) + ")");
        }
        label.maintainable = label.ordinal <= 1;
        labels.push_back(std::move(label));
    }
    return labels;
}

std::vector<GroundTruthLabel> load_labels_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LabelsError("cannot open labels file: " + path);
    return load_labels(in);
}

int SweepGrid::point_count() const {
    return static_cast<int>(std::llround((hi - lo) / step)) + 1;
}

double SweepGrid::threshold_at(int i) const {
    const double raw = lo + static_cast<double>(i) * step;
    // snap to the step's decimal resolution (three extra digits of headroom)
    double scale = 1.0;
    double s = step;
    while (s < 1.0 && scale < 1e9) {
        s *= 10.0;
        scale *= 10.0;
    }
    scale *= 1000.0;
    return std::round(raw * scale) / scale;
}

std::vector<ApproachSpec> default_approaches() {
    return {
        {"A", "Boosted stumps", MetricSource::LearnerScore, ThresholdRule::GreaterEqual, 0.5,
         {0.0, 1.0, 0.01}},
        {"B", "Health score", MetricSource::HealthValue, ThresholdRule::GreaterEqual, 9.0,
         {1.0, 10.0, 0.1}},
        {"C", "Code lines", MetricSource::CodeLines, ThresholdRule::LessEqual, 275.0,
         {0.0, 1000.0, 10.0}},
        {"D", "Maintainability index", MetricSource::Mi, ThresholdRule::GreaterEqual, 20.0,
         {0.0, 100.0, 1.0}},
        {"E", "Debt time", MetricSource::TdTime, ThresholdRule::LessThan, 189.0,
         {0.0, 600.0, 5.0}},
        {"G", "Debt ratio", MetricSource::TdRatio, ThresholdRule::LessEqual, 0.05,
         {0.0, 1.0, 0.005}},
    };
}

const ApproachSpec* find_approach(std::span<const ApproachSpec> approaches, std::string_view id) {
    for (const ApproachSpec& spec : approaches) {
        if (spec.id == id) return &spec;
    }
    return nullptr;
}

bool classify(double value, const ApproachSpec& approach, double threshold) {
    switch (approach.rule) {
        case ThresholdRule::GreaterEqual: return value >= threshold;
        case ThresholdRule::LessEqual: return value <= threshold;
        case ThresholdRule::LessThan: return value < threshold;
    }
    return false;
}

double f_beta_score(double precision, double recall, double beta) {
    const double b2 = beta * beta;
    const double denom = b2 * precision + recall;
    if (denom == 0.0) return 0.0;
    return (1.0 + b2) * precision * recall / denom;
}

std::pair<ConfusionMatrix, Scores> evaluate(const std::vector<bool>& predicted_maintainable,
                                            const std::vector<bool>& truth_maintainable,
                                            UseCase use_case, double beta) {
    ConfusionMatrix m;
    m.use_case = use_case;
    const bool positive_is_maintainable = use_case == UseCase::UC1;
    for (std::size_t i = 0; i < truth_maintainable.size(); ++i) {
        const bool predicted_positive = predicted_maintainable[i] == positive_is_maintainable;
        const bool actual_positive = truth_maintainable[i] == positive_is_maintainable;
        if (predicted_positive && actual_positive) ++m.tp;
        if (predicted_positive && !actual_positive) ++m.fp;
        if (!predicted_positive && actual_positive) ++m.fn;
        if (!predicted_positive && !actual_positive) ++m.tn;
    }
    Scores s;
    const long n = m.total();
    s.accuracy = n == 0 ? 0.0 : static_cast<double>(m.tp + m.tn) / static_cast<double>(n);
    if (m.tp + m.fp > 0) s.precision = static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fp);
    if (m.tp + m.fn > 0) s.recall = static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fn);
    if (s.precision && s.recall) {
        s.f1 = f_beta_score(*s.precision, *s.recall, 1.0);
        s.f_beta = f_beta_score(*s.precision, *s.recall, beta);
    }
    return {m, s};
}

RocCurve roc_sweep(std::span<const double> values, const std::vector<bool>& truth_maintainable,
                   const ApproachSpec& approach, UseCase use_case) {
    if (values.empty() || values.size() != truth_maintainable.size()) {
        throw EmptyCorpusError();
    }
    RocCurve curve;
    curve.grid_points = approach.grid.point_count();
    std::vector<bool> predictions(values.size());
    curve.points.reserve(static_cast<std::size_t>(curve.grid_points) + 2);
    for (int i = 0; i < curve.grid_points; ++i) {
        const double threshold = approach.grid.threshold_at(i);
        for (std::size_t k = 0; k < values.size(); ++k) {
            predictions[k] = classify(values[k], approach, threshold);
        }
        const auto [m, _] = evaluate(predictions, truth_maintainable, use_case);
        const double fpr =
            m.fp + m.tn == 0 ? 0.0 : static_cast<double>(m.fp) / static_cast<double>(m.fp + m.tn);
        const double tpr =
            m.tp + m.fn == 0 ? 0.0 : static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fn);
        curve.points.push_back({threshold, fpr, tpr});
    }
    auto has_point = [&](double fpr, double tpr) {
        return std::any_of(curve.points.begin(), curve.points.end(), [&](const RocPoint& p) {
            return p.fpr == fpr && p.tpr == tpr;
        });
    };
    if (!has_point(0.0, 0.0)) curve.points.push_back({std::nan(""), 0.0, 0.0});
    if (!has_point(1.0, 1.0)) curve.points.push_back({std::nan(""), 1.0, 1.0});

    // stable: among identical (fpr,tpr) points the earliest grid threshold
    // survives dedup
    std::stable_sort(curve.points.begin(), curve.points.end(),
                     [](const RocPoint& a, const RocPoint& b) {
                         if (a.fpr != b.fpr) return a.fpr < b.fpr;
                         return a.tpr < b.tpr;
                     });
    curve.points.erase(std::unique(curve.points.begin(), curve.points.end(),
                                   [](const RocPoint& a, const RocPoint& b) {
                                       return a.fpr == b.fpr && a.tpr == b.tpr;
                                   }),
                       curve.points.end());
    curve.auc = auc_trapezoid(curve.points);
    return curve;
}

double auc_trapezoid(std::span<const RocPoint> points) {
    double area = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].fpr < points[i - 1].fpr) throw UnsortedPointsError();
        area += (points[i].fpr - points[i - 1].fpr) * (points[i].tpr + points[i - 1].tpr) / 2.0;
    }
    return area;
}

}  // namespace maintlab
