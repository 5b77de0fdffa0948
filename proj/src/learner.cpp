#include "maintlab/learner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace maintlab {

namespace {

constexpr double kErrorFloor = 1e-10;  // keeps alpha finite on a perfect stump

struct StumpCandidate {
    int feature;
    double threshold;
    int polarity;
    double error;

    bool better_than(const StumpCandidate& other) const {
        if (error != other.error) return error < other.error;
        if (feature != other.feature) return feature < other.feature;
        if (threshold != other.threshold) return threshold < other.threshold;
        return polarity > other.polarity;
    }
};

// Presorted per-feature sample order, shared across rounds.
std::vector<std::vector<std::size_t>> sort_features(
    std::span<const std::vector<double>> features, std::size_t n_features) {
    std::vector<std::vector<std::size_t>> order(n_features);
    for (std::size_t f = 0; f < n_features; ++f) {
        auto& idx = order[f];
        idx.resize(features.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return features[a][f] < features[b][f];
        });
    }
    return order;
}

}  // namespace

double BoostModel::score(std::span<const double> x) const {
    if (!stumps.empty() && static_cast<int>(x.size()) != n_features) {
        throw LearnerError("feature dimensionality " + std::to_string(x.size()) +
                           " does not match the trained " + std::to_string(n_features));
    }
    double alpha_sum = 0.0;
    double vote_sum = 0.0;
    for (const Stump& stump : stumps) {
        alpha_sum += stump.alpha;
        vote_sum += stump.alpha * stump.vote(x);
    }
    if (alpha_sum == 0.0) return 0.5;
    return (vote_sum / alpha_sum + 1.0) / 2.0;
}

BoostModel train_boost(std::span<const std::vector<double>> features,
                       const std::vector<bool>& labels, const LearnerConfig& config,
                       TrainTrace* trace) {
    const std::size_t n = features.size();
    if (n == 0 || labels.size() != n) throw LearnerError("feature/label size mismatch");
    const std::size_t n_features = features[0].size();
    for (const auto& row : features) {
        if (row.size() != n_features) throw LearnerError("ragged feature matrix");
        for (double v : row) {
            if (!std::isfinite(v)) throw LearnerError("non-finite feature value");
        }
    }
    const bool first = labels[0];
    if (std::all_of(labels.begin(), labels.end(), [&](bool l) { return l == first; })) {
        throw LearnerError("degenerate data: all labels identical");
    }

    std::vector<double> y(n);  // +1 maintainable, -1 not
    for (std::size_t i = 0; i < n; ++i) y[i] = labels[i] ? 1.0 : -1.0;

    const auto order = sort_features(features, n_features);
    std::vector<double> weights(n, 1.0 / static_cast<double>(n));

    BoostModel model;
    model.n_features = static_cast<int>(n_features);

    for (int round = 0; round < config.n_estimators; ++round) {
        StumpCandidate best{0, 0.0, 1, std::numeric_limits<double>::infinity()};
        for (std::size_t f = 0; f < n_features; ++f) {
            const auto& idx = order[f];
            // error of "everything predicted +1" (threshold below the minimum)
            double err_pos = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (y[i] < 0) err_pos += weights[i];
            }
            // walk split points; samples before the split fall to the -1 side
            double moved = 0.0;  // error delta as samples move below the threshold
            for (std::size_t k = 0; k + 1 < n; ++k) {
                const std::size_t sample = idx[k];
                // sample now predicted -1 by positive polarity
                moved += y[sample] > 0 ? weights[sample] : -weights[sample];
                const double lo = features[idx[k]][f];
                const double hi = features[idx[k + 1]][f];
                if (lo == hi) continue;  // not a split between distinct values
                const double threshold = lo + (hi - lo) / 2.0;
                const double error_pos_polarity = err_pos + moved;
                StumpCandidate cand{static_cast<int>(f), threshold, 1, error_pos_polarity};
                StumpCandidate flipped{static_cast<int>(f), threshold, -1,
                                       1.0 - error_pos_polarity};
                if (cand.better_than(best)) best = cand;
                if (flipped.better_than(best)) best = flipped;
            }
        }
        if (!std::isfinite(best.error) || best.error >= 0.5) break;  // no useful stump

        const double eps = std::clamp(best.error, kErrorFloor, 1.0 - kErrorFloor);
        const double alpha = config.learning_rate * 0.5 * std::log((1.0 - eps) / eps);
        Stump stump{best.feature, best.threshold, best.polarity, alpha};
        model.stumps.push_back(stump);

        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const int h = stump.vote(features[i]);
            weights[i] *= std::exp(-alpha * y[i] * h);
            sum += weights[i];
        }
        for (double& w : weights) w /= sum;

        if (trace != nullptr) {
            trace->weight_sums.push_back(
                std::accumulate(weights.begin(), weights.end(), 0.0));
            trace->stump_errors.push_back(best.error);
            trace->normalizers.push_back(sum);
            long wrong = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (model.predict(features[i]) != labels[i]) ++wrong;
            }
            trace->training_errors.push_back(static_cast<double>(wrong) /
                                             static_cast<double>(n));
        }
        if (best.error <= kErrorFloor) break;  // perfect stump, nothing left to learn
    }
    return model;
}

std::vector<std::vector<std::size_t>> stratified_folds(const std::vector<bool>& labels, int k,
                                                       std::uint64_t seed) {
    if (k < 2) throw LearnerError("need at least 2 folds");
    std::vector<std::size_t> positives;
    std::vector<std::size_t> negatives;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        (labels[i] ? positives : negatives).push_back(i);
    }
    for (const auto* cls : {&positives, &negatives}) {
        if (cls->size() < static_cast<std::size_t>(k)) {
            throw LearnerError("class with " + std::to_string(cls->size()) +
                               " samples cannot be split into " + std::to_string(k) + " folds");
        }
    }

    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::size_t>> folds(static_cast<std::size_t>(k));
    // larger class first so the smaller class can even out fold sizes
    std::vector<std::vector<std::size_t>*> classes = {&positives, &negatives};
    if (negatives.size() > positives.size()) std::swap(classes[0], classes[1]);

    for (auto* cls : classes) {
        std::shuffle(cls->begin(), cls->end(), rng);
        const std::size_t base = cls->size() / static_cast<std::size_t>(k);
        const std::size_t extra = cls->size() % static_cast<std::size_t>(k);
        // folds currently smallest take the remainder samples
        std::vector<std::size_t> fold_order(folds.size());
        std::iota(fold_order.begin(), fold_order.end(), 0);
        std::stable_sort(fold_order.begin(), fold_order.end(), [&](std::size_t a, std::size_t b) {
            return folds[a].size() < folds[b].size();
        });
        std::size_t cursor = 0;
        for (std::size_t rank = 0; rank < fold_order.size(); ++rank) {
            const std::size_t take = base + (rank < extra ? 1 : 0);
            auto& fold = folds[fold_order[rank]];
            fold.insert(fold.end(), cls->begin() + cursor, cls->begin() + cursor + take);
            cursor += take;
        }
    }
    for (auto& fold : folds) std::sort(fold.begin(), fold.end());
    return folds;
}

namespace {

EvalReport mean_of(std::span<const EvalReport> reports) {
    EvalReport mean;
    if (reports.empty()) return mean;
    mean.approach_id = reports[0].approach_id;
    mean.approach_name = reports[0].approach_name;
    mean.threshold = reports[0].threshold;
    auto avg = [&](auto pick) {
        double sum = 0.0;
        for (const EvalReport& r : reports) sum += pick(r);
        return sum / static_cast<double>(reports.size());
    };
    auto avg_opt = [&](auto pick) -> std::optional<double> {
        double sum = 0.0;
        int count = 0;
        for (const EvalReport& r : reports) {
            if (const auto v = pick(r)) {
                sum += *v;
                ++count;
            }
        }
        if (count == 0) return std::nullopt;
        return sum / count;
    };
    mean.accuracy = avg([](const EvalReport& r) { return r.accuracy; });
    for (UseCase uc : {UseCase::UC1, UseCase::UC2}) {
        Scores& out = uc == UseCase::UC1 ? mean.uc1 : mean.uc2;
        auto pick_scores = [uc](const EvalReport& r) -> const Scores& {
            return uc == UseCase::UC1 ? r.uc1 : r.uc2;
        };
        out.accuracy = mean.accuracy;
        out.precision = avg_opt([&](const EvalReport& r) { return pick_scores(r).precision; });
        out.recall = avg_opt([&](const EvalReport& r) { return pick_scores(r).recall; });
        out.f1 = avg([&](const EvalReport& r) { return pick_scores(r).f1; });
        out.f_beta = avg([&](const EvalReport& r) { return pick_scores(r).f_beta; });
    }
    return mean;
}

}  // namespace

CrossValidationResult cross_validate(std::span<const std::vector<double>> features,
                                     const std::vector<bool>& labels,
                                     const LearnerConfig& config) {
    const auto folds = stratified_folds(labels, config.folds, config.seed);
    CrossValidationResult result;
    result.out_of_fold_scores.assign(labels.size(), 0.0);

    for (const auto& held_out : folds) {
        std::vector<char> in_fold(labels.size(), 0);
        for (std::size_t i : held_out) in_fold[i] = 1;
        std::vector<std::vector<double>> train_x;
        std::vector<bool> train_y;
        train_x.reserve(labels.size() - held_out.size());
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (in_fold[i] == 0) {
                train_x.push_back(features[i]);
                train_y.push_back(labels[i]);
            }
        }
        const BoostModel model = train_boost(train_x, train_y, config);

        std::vector<bool> fold_pred(held_out.size());
        std::vector<bool> fold_truth(held_out.size());
        for (std::size_t k = 0; k < held_out.size(); ++k) {
            const std::size_t i = held_out[k];
            const double score = model.score(features[i]);
            result.out_of_fold_scores[i] = score;
            fold_pred[k] = score >= 0.5;
            fold_truth[k] = labels[i];
        }
        EvalReport report;
        report.approach_id = "A";
        report.approach_name = "Boosted stumps";
        report.threshold = 0.5;
        auto [m1, s1] = evaluate(fold_pred, fold_truth, UseCase::UC1);
        auto [m2, s2] = evaluate(fold_pred, fold_truth, UseCase::UC2);
        report.accuracy = s1.accuracy;
        report.uc1 = s1;
        report.uc2 = s2;
        result.fold_reports.push_back(std::move(report));
    }

    result.mean_report = mean_of(result.fold_reports);
    // discriminative power from the pooled out-of-fold scores
    std::vector<bool> truth(labels.begin(), labels.end());
    const ApproachSpec spec = default_approaches()[0];
    result.mean_report.auc =
        roc_sweep(result.out_of_fold_scores, truth, spec, UseCase::UC1).auc;
    return result;
}

}  // namespace maintlab
