#include "codemine/forest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "codemine/errors.hpp"
#include "codemine/rng.hpp"

namespace codemine {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct TrainData {
    std::vector<std::vector<double>> features; // row-major
    std::vector<double> targets;
    std::size_t n_features = 0;
};

TrainData extract(const Dataset& ds) {
    TrainData data;
    data.n_features = ds.metric_count();
    data.features.reserve(ds.rows.size());
    data.targets.reserve(ds.rows.size());
    for (const Dataset::Row& row : ds.rows) {
        if (row.values.size() != data.n_features)
            throw InvalidArgument("row with wrong feature count: " + row.class_id);
        data.features.push_back(row.values);
        data.targets.push_back(row.fixing_revisions);
    }
    return data;
}

class TreeBuilder {
public:
    TreeBuilder(const TrainData& data, const ForestConfig& cfg, std::mt19937_64& rng)
        : data_(data), cfg_(cfg), rng_(rng) {}

    RegressionTree build(std::vector<std::size_t> samples) {
        tree_ = RegressionTree{};
        grow(std::move(samples), 0);
        return std::move(tree_);
    }

private:
    struct Split {
        bool found = false;
        std::size_t feature = 0;
        double threshold = 0.0;
        double reduction = 0.0;
    };

    int make_leaf(const std::vector<std::size_t>& samples, int depth) {
        double sum = 0.0;
        for (std::size_t i : samples) sum += data_.targets[i];
        TreeNode node;
        node.leaf = true;
        node.value = sum / static_cast<double>(samples.size());
        tree_.nodes.push_back(node);
        tree_.depth = std::max(tree_.depth, depth);
        return static_cast<int>(tree_.nodes.size() - 1);
    }

    double sse(const std::vector<std::size_t>& samples) const {
        double sum = 0.0, sq = 0.0;
        for (std::size_t i : samples) {
            sum += data_.targets[i];
            sq += data_.targets[i] * data_.targets[i];
        }
        double n = static_cast<double>(samples.size());
        return sq - sum * sum / n;
    }

    // Feature subset without replacement, then ascending so that equal
    // reductions resolve to the lower feature index.
    std::vector<std::size_t> pick_features() {
        std::size_t total = data_.n_features;
        std::size_t want = std::min<std::size_t>(
            total, static_cast<std::size_t>(std::max(1, cfg_.n_features_per_split)));
        std::vector<std::size_t> all(total);
        std::iota(all.begin(), all.end(), 0);
        for (std::size_t i = 0; i < want; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, total - 1);
            std::swap(all[i], all[pick(rng_)]);
        }
        all.resize(want);
        std::sort(all.begin(), all.end());
        return all;
    }

    Split find_split(const std::vector<std::size_t>& samples) {
        Split best;
        double parent_sse = sse(samples);

        for (std::size_t feature : pick_features()) {
            std::vector<std::pair<double, double>> points; // (value, target)
            points.reserve(samples.size());
            for (std::size_t i : samples)
                points.emplace_back(data_.features[i][feature], data_.targets[i]);
            std::sort(points.begin(), points.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });

            double left_sum = 0.0, left_sq = 0.0;
            double total_sum = 0.0, total_sq = 0.0;
            for (const auto& [v, t] : points) {
                total_sum += t;
                total_sq += t * t;
            }

            std::size_t n = points.size();
            for (std::size_t i = 0; i + 1 < n; ++i) {
                left_sum += points[i].second;
                left_sq += points[i].second * points[i].second;
                if (points[i].first == points[i + 1].first) continue;

                double nl = static_cast<double>(i + 1);
                double nr = static_cast<double>(n - i - 1);
                double right_sum = total_sum - left_sum;
                double right_sq = total_sq - left_sq;
                double child_sse = (left_sq - left_sum * left_sum / nl) +
                                   (right_sq - right_sum * right_sum / nr);
                double reduction = parent_sse - child_sse;
                double threshold = points[i].first + (points[i + 1].first - points[i].first) / 2.0;
                if (reduction > best.reduction + 1e-12 && reduction > 0.0) {
                    best.found = true;
                    best.feature = feature;
                    best.threshold = threshold;
                    best.reduction = reduction;
                }
            }
        }
        return best;
    }

    int grow(std::vector<std::size_t> samples, int depth) {
        bool constant = true;
        for (std::size_t i : samples)
            if (data_.targets[i] != data_.targets[samples[0]]) {
                constant = false;
                break;
            }
        if (depth >= cfg_.max_depth || constant ||
            samples.size() < static_cast<std::size_t>(std::max(2, cfg_.min_samples_split)))
            return make_leaf(samples, depth);

        Split split = find_split(samples);
        if (!split.found)
            return make_leaf(samples, depth);

        std::vector<std::size_t> left, right;
        for (std::size_t i : samples) {
            if (data_.features[i][split.feature] <= split.threshold)
                left.push_back(i);
            else
                right.push_back(i);
        }
        if (left.empty() || right.empty())
            return make_leaf(samples, depth);

        TreeNode node;
        node.leaf = false;
        node.feature = static_cast<int>(split.feature);
        node.threshold = split.threshold;
        tree_.nodes.push_back(node);
        int index = static_cast<int>(tree_.nodes.size() - 1);
        samples.clear();
        samples.shrink_to_fit();

        int left_index = grow(std::move(left), depth + 1);
        int right_index = grow(std::move(right), depth + 1);
        tree_.nodes[static_cast<std::size_t>(index)].left = left_index;
        tree_.nodes[static_cast<std::size_t>(index)].right = right_index;
        return index;
    }

    const TrainData& data_;
    const ForestConfig& cfg_;
    std::mt19937_64& rng_;
    RegressionTree tree_;
};

void check_config(const ForestConfig& cfg) {
    if (cfg.n_trees <= 0 || cfg.max_depth <= 0 || cfg.n_features_per_split <= 0 ||
        cfg.cv_folds <= 0 || cfg.min_samples_split <= 0)
        throw InvalidArgument("forest config values must be positive");
}

EvaluationReport evaluate_with_baselines(std::span<const double> predictions,
                                         std::span<const double> actuals,
                                         std::span<const double> baselines) {
    if (predictions.size() != actuals.size() || predictions.size() != baselines.size())
        throw InvalidArgument("prediction/actual length mismatch");
    if (predictions.empty())
        throw InvalidArgument("nothing to evaluate");

    std::size_t n = predictions.size();
    double abs_err = 0.0, sq_err = 0.0, abs_base = 0.0, sq_base = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double err = predictions[i] - actuals[i];
        double base = baselines[i] - actuals[i];
        abs_err += std::abs(err);
        sq_err += err * err;
        abs_base += std::abs(base);
        sq_base += base * base;
    }

    EvaluationReport report;
    report.mae = abs_err / static_cast<double>(n);
    report.rmse = std::sqrt(sq_err / static_cast<double>(n));
    report.rae = abs_base > 0.0 ? 100.0 * abs_err / abs_base : kNan;
    report.rrse = sq_base > 0.0 ? 100.0 * std::sqrt(sq_err / sq_base) : kNan;

    double mean_p = 0.0, mean_a = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_p += predictions[i];
        mean_a += actuals[i];
    }
    mean_p /= static_cast<double>(n);
    mean_a /= static_cast<double>(n);
    double cov = 0.0, var_p = 0.0, var_a = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double dp = predictions[i] - mean_p;
        double da = actuals[i] - mean_a;
        cov += dp * da;
        var_p += dp * dp;
        var_a += da * da;
    }
    report.r = (var_p > 0.0 && var_a > 0.0) ? cov / std::sqrt(var_p * var_a) : kNan;
    return report;
}

std::string format_sig3(double v) {
    if (std::isnan(v)) return "undefined";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    std::string s(buf);
    // %.3g may switch to scientific notation; Table-style reports stay fixed
    // for sane magnitudes.
    if (s.find('e') != std::string::npos && std::abs(v) < 1e9) {
        std::snprintf(buf, sizeof buf, "%.0f", v);
        s = buf;
    }
    return s;
}

} // namespace

double RegressionTree::predict(std::span<const double> features) const {
    if (nodes.empty()) return 0.0;
    std::size_t index = 0;
    while (!nodes[index].leaf) {
        const TreeNode& node = nodes[index];
        double v = features[static_cast<std::size_t>(node.feature)];
        index = static_cast<std::size_t>(v <= node.threshold ? node.left : node.right);
    }
    return nodes[index].value;
}

Forest train_forest(const Dataset& train, const ForestConfig& cfg) {
    check_config(cfg);
    if (train.rows.empty())
        throw InvalidArgument("cannot train on an empty dataset");

    TrainData data = extract(train);
    Forest forest;
    forest.feature_names = train.metric_names;
    forest.trees.reserve(static_cast<std::size_t>(cfg.n_trees));

    std::size_t n = data.targets.size();
    for (int t = 0; t < cfg.n_trees; ++t) {
        auto rng = make_engine(cfg.seed, static_cast<std::uint64_t>(t));
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::vector<std::size_t> bootstrap(n);
        for (std::size_t i = 0; i < n; ++i) bootstrap[i] = pick(rng);

        TreeBuilder builder(data, cfg, rng);
        forest.trees.push_back(builder.build(std::move(bootstrap)));
    }
    return forest;
}

double predict(const Forest& forest, std::span<const double> features) {
    if (forest.trees.empty())
        throw InvalidArgument("empty forest");
    if (features.size() != forest.feature_names.size())
        throw InvalidArgument("feature vector has wrong length");
    double sum = 0.0;
    for (const RegressionTree& tree : forest.trees) sum += tree.predict(features);
    return sum / static_cast<double>(forest.trees.size());
}

EvaluationReport evaluate(std::span<const double> predictions, std::span<const double> actuals,
                          double baseline_mean) {
    std::vector<double> baselines(predictions.size(), baseline_mean);
    return evaluate_with_baselines(predictions, actuals, baselines);
}

std::vector<std::vector<std::size_t>> make_cv_folds(std::size_t n, std::size_t k,
                                                    std::uint64_t seed) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto rng = make_engine(seed, fnv1a64("shuffle"));
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<std::vector<std::size_t>> folds(k);
    std::size_t base = n / k, extra = n % k, cursor = 0;
    for (std::size_t f = 0; f < k; ++f) {
        std::size_t size = base + (f < extra ? 1 : 0);
        for (std::size_t i = 0; i < size; ++i) folds[f].push_back(order[cursor++]);
    }
    return folds;
}

EvaluationReport cross_validate(const Dataset& ds, const ForestConfig& cfg) {
    check_config(cfg);
    std::size_t n = ds.rows.size();
    std::size_t k = static_cast<std::size_t>(cfg.cv_folds);
    if (n < k)
        throw InvalidArgument("dataset smaller than the number of folds");

    auto folds = make_cv_folds(n, k, cfg.seed);

    std::vector<double> predictions, actuals, baselines;
    predictions.reserve(n);
    for (std::size_t f = 0; f < k; ++f) {
        Dataset train;
        train.relation_name = ds.relation_name;
        train.metric_names = ds.metric_names;
        double target_sum = 0.0;
        for (std::size_t g = 0; g < k; ++g) {
            if (g == f) continue;
            for (std::size_t i : folds[g]) {
                train.rows.push_back(ds.rows[i]);
                target_sum += ds.rows[i].fixing_revisions;
            }
        }
        double baseline = target_sum / static_cast<double>(train.rows.size());

        ForestConfig fold_cfg = cfg;
        fold_cfg.seed = mix_seed(cfg.seed, fnv1a64("fold") ^ f);
        Forest forest = train_forest(train, fold_cfg);
        for (std::size_t i : folds[f]) {
            predictions.push_back(predict(forest, ds.rows[i].values));
            actuals.push_back(ds.rows[i].fixing_revisions);
            baselines.push_back(baseline);
        }
    }
    return evaluate_with_baselines(predictions, actuals, baselines);
}

EvaluationReport holdout_evaluate(const Dataset& ds, const ForestConfig& cfg,
                                  double train_fraction) {
    check_config(cfg);
    auto [train, test] = split_dataset(ds, train_fraction, cfg.seed);
    if (test.rows.empty())
        throw InvalidArgument("holdout split left no test rows");

    Forest forest = train_forest(train, cfg);
    double baseline = 0.0;
    for (const auto& row : train.rows) baseline += row.fixing_revisions;
    baseline /= static_cast<double>(train.rows.size());

    std::vector<double> predictions, actuals;
    for (const auto& row : test.rows) {
        predictions.push_back(predict(forest, row.values));
        actuals.push_back(row.fixing_revisions);
    }
    return evaluate(predictions, actuals, baseline);
}

std::string format_report(const EvaluationReport& report) {
    std::string out;
    out += "R=" + format_sig3(report.r);
    out += " MAE=" + format_sig3(report.mae);
    out += " RMSE=" + format_sig3(report.rmse);
    out += " RAE=" + format_sig3(report.rae) + (std::isnan(report.rae) ? "" : "%");
    out += " RRSE=" + format_sig3(report.rrse) + (std::isnan(report.rrse) ? "" : "%");
    return out;
}

} // namespace codemine
