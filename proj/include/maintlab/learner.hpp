#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "maintlab/bench.hpp"

namespace maintlab {

class LearnerError : public AnalysisError {
  public:
    using AnalysisError::AnalysisError;
};

struct LearnerConfig {
    int n_estimators = 150;
    double learning_rate = 0.5;
    int folds = 5;
    std::uint64_t seed = 42;
};

/// Axis-aligned decision stump: raw vote is +1 when x[feature] >= threshold,
/// -1 otherwise, multiplied by polarity.
struct Stump {
    int feature = 0;
    double threshold = 0.0;
    int polarity = 1;  // +1 or -1
    double alpha = 0.0;

    int vote(std::span<const double> x) const {
        const int raw = x[static_cast<std::size_t>(feature)] >= threshold ? 1 : -1;
        return raw * polarity;
    }
};

struct BoostModel {
    std::vector<Stump> stumps;
    int n_features = 0;

    /// Weighted vote normalized to [0,1]; 0.5 for an empty model.
    double score(std::span<const double> x) const;
    /// Maintainable at the >= 0.5 cutoff.
    bool predict(std::span<const double> x) const { return score(x) >= 0.5; }
};

/// Per-round training evidence, for diagnostics and tests.
struct TrainTrace {
    std::vector<double> weight_sums;      // after each round's renormalization
    std::vector<double> stump_errors;     // weighted error of the accepted stump
    std::vector<double> training_errors;  // ensemble 0/1 error after each round
    std::vector<double> normalizers;      // Z_t; their running product bounds the 0/1 error
};

/// Discrete boosting: each round fits the weighted-error-minimizing stump
/// over all (feature, midpoint threshold, polarity) candidates, weights it
/// by learning_rate * 0.5 * ln((1-e)/e), reweights samples, and renormalizes.
/// Stops early on a perfect stump (it is kept) or when no stump beats 0.5.
/// Ties break toward the lowest feature index, then the lowest threshold,
/// then positive polarity.
BoostModel train_boost(std::span<const std::vector<double>> features,
                       const std::vector<bool>& labels, const LearnerConfig& config,
                       TrainTrace* trace = nullptr);

/// Shuffled stratified partition into k folds of near-equal size; every fold
/// holds each class's floor or ceiling share. Deterministic given the seed.
/// Throws LearnerError when a class has fewer than k members.
std::vector<std::vector<std::size_t>> stratified_folds(const std::vector<bool>& labels, int k,
                                                       std::uint64_t seed);

struct CrossValidationResult {
    EvalReport mean_report;                 // averaged fold scores; AUC from pooled scores
    std::vector<EvalReport> fold_reports;   // one per fold, threshold 0.5
    std::vector<double> out_of_fold_scores; // aligned with the input rows
};

CrossValidationResult cross_validate(std::span<const std::vector<double>> features,
                                     const std::vector<bool>& labels, const LearnerConfig& config);

}  // namespace maintlab
