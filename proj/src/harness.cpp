#include "maintlab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace maintlab {

namespace {

std::string join_paths(const std::vector<std::string>& paths) {
    std::ostringstream out;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (i > 0) out << ", ";
        out << paths[i];
    }
    return out.str();
}

}  // namespace

PathMismatchError::PathMismatchError(std::vector<std::string> missing)
    : AnalysisError("labeled paths missing from the analyzed corpus: " + join_paths(missing)),
      missing_(std::move(missing)) {}

AlignedCorpus align_corpus(const MetricTable& table, std::span<const GroundTruthLabel> labels) {
    AlignedCorpus corpus;
    std::vector<std::string> missing;
    std::set<std::string> labeled;
    for (const GroundTruthLabel& label : labels) {
        labeled.insert(label.path);
        const auto it = table.rows.find(label.path);
        if (it == table.rows.end()) {
            missing.push_back(label.path);
            continue;
        }
        const MetricRecord& r = it->second;
        corpus.paths.push_back(label.path);
        corpus.truth.push_back(label.maintainable);
        corpus.mi.push_back(r.mi);
        corpus.health.push_back(r.health);
        corpus.code_lines.push_back(r.code_lines);
        corpus.td_time.push_back(r.td_time);
        corpus.td_ratio.push_back(r.td_ratio);
        corpus.features.push_back(r.features);
    }
    if (!missing.empty()) throw PathMismatchError(std::move(missing));
    for (const auto& [path, _] : table.rows) {
        if (labeled.count(path) == 0) corpus.unlabeled.push_back(path);
    }
    return corpus;
}

const std::vector<double>& metric_values(const AlignedCorpus& corpus, MetricSource source,
                                         const std::vector<double>& learner_scores) {
    switch (source) {
        case MetricSource::LearnerScore: return learner_scores;
        case MetricSource::HealthValue: return corpus.health;
        case MetricSource::CodeLines: return corpus.code_lines;
        case MetricSource::Mi: return corpus.mi;
        case MetricSource::TdTime: return corpus.td_time;
        case MetricSource::TdRatio: return corpus.td_ratio;
    }
    return corpus.mi;
}

BenchOutcome run_bench(const AlignedCorpus& corpus, const BenchOptions& options) {
    BenchOutcome outcome;
    auto selected = [&](const std::string& id) {
        return options.approaches.empty() || options.approaches.count(id) != 0;
    };

    std::optional<EvalReport> learner_report;
    if (selected("A")) {
        if (options.external_scores) {
            if (options.external_scores->size() != corpus.paths.size()) {
                throw AnalysisError("external prediction scores do not cover the corpus");
            }
            outcome.learner_scores = *options.external_scores;
        } else {
            CrossValidationResult cv =
                cross_validate(corpus.features, corpus.truth, options.learner);
            outcome.learner_scores = std::move(cv.out_of_fold_scores);
            learner_report = std::move(cv.mean_report);
        }
    }

    for (const ApproachSpec& spec : default_approaches()) {
        if (!selected(spec.id)) continue;
        const std::vector<double>& values =
            metric_values(corpus, spec.source, outcome.learner_scores);

        EvalReport row;
        if (spec.id == "A" && learner_report) {
            row = *learner_report;  // fold-averaged scores, per the CV protocol
        } else {
            std::vector<bool> predictions(values.size());
            for (std::size_t i = 0; i < values.size(); ++i) {
                predictions[i] = classify(values[i], spec, spec.default_threshold);
            }
            auto [m1, s1] = evaluate(predictions, corpus.truth, UseCase::UC1);
            auto [m2, s2] = evaluate(predictions, corpus.truth, UseCase::UC2);
            row.accuracy = s1.accuracy;
            row.uc1 = s1;
            row.uc2 = s2;
        }
        row.approach_id = spec.id;
        row.approach_name = spec.name;
        row.threshold = spec.default_threshold;

        RocCurve uc1 = roc_sweep(values, corpus.truth, spec, UseCase::UC1);
        RocCurve uc2 = roc_sweep(values, corpus.truth, spec, UseCase::UC2);
        row.auc = uc1.auc;

        // star marker: the default threshold's operating point
        for (UseCase uc : {UseCase::UC1, UseCase::UC2}) {
            std::vector<bool> predictions(values.size());
            for (std::size_t i = 0; i < values.size(); ++i) {
                predictions[i] = classify(values[i], spec, spec.default_threshold);
            }
            const auto [m, _] = evaluate(predictions, corpus.truth, uc);
            RocPoint star;
            star.threshold = spec.default_threshold;
            star.fpr = m.fp + m.tn == 0
                           ? 0.0
                           : static_cast<double>(m.fp) / static_cast<double>(m.fp + m.tn);
            star.tpr = m.tp + m.fn == 0
                           ? 0.0
                           : static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fn);
            (uc == UseCase::UC1 ? outcome.uc1_stars : outcome.uc2_stars)[spec.id] = star;
        }
        outcome.uc1_curves[spec.id] = std::move(uc1);
        outcome.uc2_curves[spec.id] = std::move(uc2);
        outcome.rows.push_back(std::move(row));
    }

    if (selected("F")) {
        EvalReport human;
        human.approach_id = "F";
        human.approach_name = "Average human expert";
        human.threshold = std::nan("");
        human.accuracy = ReferenceBaselines::kAccuracy;
        human.uc1.accuracy = ReferenceBaselines::kAccuracy;
        human.uc1.precision = ReferenceBaselines::kPrecision;
        human.uc1.recall = ReferenceBaselines::kRecall;
        human.uc1.f1 = ReferenceBaselines::kF1;
        human.uc1.f_beta = ReferenceBaselines::kF1;
        human.auc = ReferenceBaselines::kAuc;
        outcome.rows.push_back(std::move(human));
    }

    std::sort(outcome.rows.begin(), outcome.rows.end(),
              [](const EvalReport& a, const EvalReport& b) {
                  if (a.auc != b.auc) return a.auc > b.auc;
                  return a.approach_id < b.approach_id;
              });
    return outcome;
}

}  // namespace maintlab
