#ifndef CODEMINE_FOREST_HPP
#define CODEMINE_FOREST_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "codemine/dataset.hpp"

namespace codemine {

struct ForestConfig {
    int n_trees = 200;
    int max_depth = 12;
    int n_features_per_split = 12; // clamped to the feature count
    int cv_folds = 10;
    int min_samples_split = 2;
    std::uint64_t seed = 1;
};

// Regression tree over a flat node array. Internal nodes route on
// feature/threshold, leaves hold the mean target of their samples.
struct TreeNode {
    int feature = -1;
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double value = 0.0;
    bool leaf = true;
};

struct RegressionTree {
    std::vector<TreeNode> nodes;
    int depth = 0;
    double predict(std::span<const double> features) const;
};

struct Forest {
    std::vector<RegressionTree> trees;
    std::vector<std::string> feature_names;
};

// Trains n_trees trees, each on a bootstrap sample, with variance-reduction
// splits over a per-node feature subset. Deterministic given (seed, tree
// index). Throws InvalidArgument on empty datasets or bad config.
Forest train_forest(const Dataset& train, const ForestConfig& cfg);

double predict(const Forest& forest, std::span<const double> features);

// The five Table-style statistics; NaN marks an undefined value (constant
// actuals for R, zero baseline deviation for RAE/RRSE). rae/rrse are
// percentages.
struct EvaluationReport {
    double r = 0.0;
    double mae = 0.0;
    double rmse = 0.0;
    double rae = 0.0;
    double rrse = 0.0;
};

EvaluationReport evaluate(std::span<const double> predictions, std::span<const double> actuals,
                          double baseline_mean);

// Seeded shuffle into k near-equal folds; the first n % k folds take one
// extra row. Together the folds cover every index exactly once.
std::vector<std::vector<std::size_t>> make_cv_folds(std::size_t n, std::size_t k,
                                                    std::uint64_t seed);

// Pooled 10-fold (cfg.cv_folds) cross-validation: seeded shuffle, near-equal
// folds, per-fold baseline mean from that fold's training rows.
EvaluationReport cross_validate(const Dataset& ds, const ForestConfig& cfg);

// The 9:1 protocol: seeded split, train on the large part, evaluate the rest
// against the training-part mean baseline.
EvaluationReport holdout_evaluate(const Dataset& ds, const ForestConfig& cfg, double train_fraction);

// `R=... MAE=... RMSE=... RAE=...% RRSE=...%`, 3 significant digits,
// "undefined" for NaN entries.
std::string format_report(const EvaluationReport& report);

} // namespace codemine

#endif
