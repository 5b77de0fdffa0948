#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "maintlab/learner.hpp"

using namespace maintlab;

namespace {

struct Dataset {
    std::vector<std::vector<double>> x;
    std::vector<bool> y;
};

Dataset separable_1d(int n) {
    Dataset d;
    for (int i = 0; i < n; ++i) {
        const double v = (i % 2 == 0 ? 1.0 : -1.0) * (1.0 + i % 7);
        d.x.push_back({v});
        d.y.push_back(v > 0);
    }
    return d;
}

Dataset xor_corpus() {
    Dataset d;
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> jitter(-0.2, 0.2);
    for (int i = 0; i < 120; ++i) {
        const int qa = i % 2;
        const int qb = (i / 2) % 2;
        const double a = (qa == 0 ? -1.0 : 1.0) + jitter(rng);
        const double b = (qb == 0 ? -1.0 : 1.0) + jitter(rng);
        d.x.push_back({a, b});
        d.y.push_back(qa != qb);
    }
    return d;
}

double accuracy(const BoostModel& model, const Dataset& d) {
    int right = 0;
    for (std::size_t i = 0; i < d.x.size(); ++i) {
        if (model.predict(d.x[i]) == d.y[i]) ++right;
    }
    return static_cast<double>(right) / static_cast<double>(d.x.size());
}

// Exhaustive best single stump, the independent oracle for the ensemble test.
double best_single_stump_accuracy(const Dataset& d) {
    double best = 0.0;
    const std::size_t n = d.x.size();
    for (std::size_t f = 0; f < d.x[0].size(); ++f) {
        std::vector<double> values;
        for (const auto& row : d.x) values.push_back(row[f]);
        std::vector<double> sorted = values;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (sorted[k] == sorted[k + 1]) continue;
            const double threshold = (sorted[k] + sorted[k + 1]) / 2.0;
            for (int polarity : {1, -1}) {
                int right = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    const int vote = (values[i] >= threshold ? 1 : -1) * polarity;
                    if ((vote > 0) == d.y[i]) ++right;
                }
                best = std::max(best, static_cast<double>(right) / static_cast<double>(n));
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("one round separates 1-D separable data perfectly") {
    const Dataset d = separable_1d(40);
    LearnerConfig config;
    TrainTrace trace;
    const BoostModel model = train_boost(d.x, d.y, config, &trace);
    REQUIRE(model.stumps.size() == 1);  // perfect stump, early stop
    CHECK(accuracy(model, d) == 1.0);
    CHECK(trace.training_errors.at(0) == 0.0);
}

TEST_CASE("the ensemble beats the best single stump on xor") {
    const Dataset d = xor_corpus();
    const double oracle = best_single_stump_accuracy(d);
    CHECK(oracle < 0.8);  // xor is not stump-separable
    LearnerConfig config;
    const BoostModel model = train_boost(d.x, d.y, config);
    CHECK(accuracy(model, d) > oracle);
}

TEST_CASE("sample weights stay normalized every round") {
    const Dataset d = xor_corpus();
    LearnerConfig config;
    TrainTrace trace;
    train_boost(d.x, d.y, config, &trace);
    REQUIRE(!trace.weight_sums.empty());
    for (double sum : trace.weight_sums) {
        CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
}

TEST_CASE("accepted stumps always beat chance") {
    const Dataset d = xor_corpus();
    LearnerConfig config;
    TrainTrace trace;
    train_boost(d.x, d.y, config, &trace);
    for (double err : trace.stump_errors) {
        CHECK(err < 0.5);
    }
}

TEST_CASE("training error trends down and stays under the normalizer bound") {
    // The raw 0/1 error wiggles round to round; what boosting guarantees is
    // err_T <= prod_t Z_t, which also forces the long-run decrease.
    LearnerConfig config;
    for (unsigned seed : {1u, 2u, 3u}) {
        Dataset d;
        std::mt19937 rng(seed);
        std::normal_distribution<double> a(0.0, 1.0);
        for (int i = 0; i < 80; ++i) {
            const bool label = i % 2 == 0;
            d.x.push_back({a(rng) + (label ? 0.8 : -0.8), a(rng), a(rng)});
            d.y.push_back(label);
        }
        TrainTrace trace;
        train_boost(d.x, d.y, config, &trace);
        REQUIRE(!trace.training_errors.empty());
        double bound = 1.0;
        for (std::size_t t = 0; t < trace.training_errors.size(); ++t) {
            bound *= trace.normalizers[t];
            CHECK(trace.training_errors[t] <= bound + 1e-12);
        }
        CHECK(trace.training_errors.back() <= trace.training_errors.front());
    }
}

TEST_CASE("degenerate labels are rejected") {
    Dataset d;
    for (int i = 0; i < 10; ++i) {
        d.x.push_back({static_cast<double>(i)});
        d.y.push_back(true);
    }
    CHECK_THROWS_AS(train_boost(d.x, d.y, LearnerConfig{}), LearnerError);
}

TEST_CASE("non-finite features are rejected") {
    Dataset d = separable_1d(10);
    d.x[3][0] = std::nan("");
    CHECK_THROWS_AS(train_boost(d.x, d.y, LearnerConfig{}), LearnerError);
}

TEST_CASE("scores live in the unit interval with unanimous votes at the ends") {
    BoostModel model;
    model.n_features = 1;
    model.stumps = {{0, 0.0, 1, 0.7}, {0, -1.0, 1, 0.3}};
    CHECK(model.score(std::vector<double>{5.0}) == 1.0);   // both vote +1
    CHECK(model.score(std::vector<double>{-5.0}) == 0.0);  // both vote -1
    // equal alphas, opposing votes: dead center, maintainable at the boundary
    model.stumps = {{0, 0.0, 1, 0.5}, {0, 0.0, -1, 0.5}};
    CHECK(model.score(std::vector<double>{5.0}) == 0.5);
    CHECK(model.predict(std::vector<double>{5.0}));
    // empty model abstains at 0.5
    CHECK(BoostModel{}.score(std::vector<double>{1.0}) == 0.5);
    // trained dimensionality is enforced
    model.n_features = 1;
    CHECK_THROWS_AS(model.score(std::vector<double>{1.0, 2.0}), LearnerError);
}

TEST_CASE("stratified folds balance both classes within one sample") {
    std::vector<bool> labels(304);
    for (int i = 0; i < 304; ++i) labels[i] = i < 237;
    const auto folds = stratified_folds(labels, 5, 42);
    REQUIRE(folds.size() == 5);
    std::vector<char> seen(304, 0);
    for (const auto& fold : folds) {
        CHECK(fold.size() >= 60);
        CHECK(fold.size() <= 61);
        long positives = 0;
        for (std::size_t i : fold) {
            CHECK(!seen[i]);
            seen[i] = 1;
            if (labels[i]) ++positives;
        }
        CHECK(positives >= 47);
        CHECK(positives <= 48);
    }
    CHECK(std::count(seen.begin(), seen.end(), 1) == 304);
}

TEST_CASE("five folds of a balanced ten-sample corpus hold one of each class") {
    std::vector<bool> labels = {true, false, true, false, true, false, true, false, true, false};
    const auto folds = stratified_folds(labels, 5, 9);
    for (const auto& fold : folds) {
        REQUIRE(fold.size() == 2);
        CHECK(labels[fold[0]] != labels[fold[1]]);
    }
}

TEST_CASE("folds are deterministic in the seed") {
    std::vector<bool> labels(100);
    for (int i = 0; i < 100; ++i) labels[i] = i % 4 != 0;
    CHECK(stratified_folds(labels, 5, 7) == stratified_folds(labels, 5, 7));
    CHECK(stratified_folds(labels, 5, 7) != stratified_folds(labels, 5, 8));
}

TEST_CASE("too-small classes cannot be stratified") {
    std::vector<bool> labels = {true, true, true, true, false, false};
    CHECK_THROWS_AS(stratified_folds(labels, 5, 1), LearnerError);
}

TEST_CASE("cross-validation is deterministic and solves separable data") {
    Dataset d;
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const bool label = i % 2 == 0;
        d.x.push_back({label ? 2.0 + unit(rng) : -2.0 - unit(rng), unit(rng)});
        d.y.push_back(label);
    }
    LearnerConfig config;
    const CrossValidationResult first = cross_validate(d.x, d.y, config);
    const CrossValidationResult second = cross_validate(d.x, d.y, config);
    CHECK(first.mean_report.accuracy == 1.0);
    CHECK(first.mean_report.auc == 1.0);
    CHECK(first.out_of_fold_scores == second.out_of_fold_scores);
    REQUIRE(first.fold_reports.size() == 5);
    for (const EvalReport& fold : first.fold_reports) {
        CHECK(fold.accuracy == 1.0);
    }
}

TEST_CASE("out-of-fold scores come from models that never saw the fold") {
    Dataset d;
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 60; ++i) {
        const bool label = i % 3 != 0;
        d.x.push_back({(label ? 0.6 : -0.6) + unit(rng), unit(rng)});
        d.y.push_back(label);
    }
    LearnerConfig config;
    const CrossValidationResult cv = cross_validate(d.x, d.y, config);

    // second route: rebuild each fold's model from the public pieces
    const auto folds = stratified_folds(d.y, config.folds, config.seed);
    for (const auto& fold : folds) {
        std::vector<char> held(d.x.size(), 0);
        for (std::size_t i : fold) held[i] = 1;
        std::vector<std::vector<double>> train_x;
        std::vector<bool> train_y;
        for (std::size_t i = 0; i < d.x.size(); ++i) {
            if (held[i] == 0) {
                train_x.push_back(d.x[i]);
                train_y.push_back(d.y[i]);
            }
        }
        const BoostModel model = train_boost(train_x, train_y, config);
        for (std::size_t i : fold) {
            CHECK(cv.out_of_fold_scores[i] == model.score(d.x[i]));
        }
    }
}

TEST_CASE("ten percent label noise lands in the pre-computed accuracy band") {
    // [0.85, 0.95] frozen from a 40-seed Monte-Carlo run of this exact
    // generator (observed span 0.875..0.9025)
    for (unsigned seed : {101u, 202u, 303u, 404u, 505u}) {
        Dataset d;
        std::mt19937 rng(seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int i = 0; i < 400; ++i) {
            const bool clean = i % 2 == 0;
            const bool label = i % 10 == 3 ? !clean : clean;  // exactly 10% flipped
            d.x.push_back({clean ? 1.0 + unit(rng) : -1.0 - unit(rng), unit(rng) - 0.5});
            d.y.push_back(label);
        }
        LearnerConfig config;
        config.seed = seed;
        const CrossValidationResult cv = cross_validate(d.x, d.y, config);
        CHECK(cv.mean_report.accuracy >= 0.85);
        CHECK(cv.mean_report.accuracy <= 0.95);
    }
}
