// codemine — mine git repositories of Java projects into class-metric
// datasets, train a random-forest defect predictor and report reference
// statistics. Thin shell over the C API in codemine.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "codemine.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitEmpty = 3;

int exit_code_for(cm_status status) {
    switch (status) {
    case CM_OK: return kExitOk;
    case CM_ERR_EMPTY: return kExitEmpty;
    default: return kExitUsage;
    }
}

int report_failure(cm_status status) {
    std::fprintf(stderr, "codemine: %s: %s\n", cm_status_name(status), cm_last_error());
    return exit_code_for(status);
}

bool write_file(const std::string& path, const char* text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << text;
    return static_cast<bool>(out);
}

struct OwnedString {
    char* value = nullptr;
    ~OwnedString() { cm_string_free(value); }
};

struct OwnedDataset {
    cm_dataset* value = nullptr;
    ~OwnedDataset() { cm_dataset_free(value); }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"git repository mining, class metrics and defect prediction"};
    app.require_subcommand(1);

    std::string manifest, workdir = ".", out;
    long min_commits = 100;
    int jobs = 1;

    cm_forest_config forest_cfg;
    cm_forest_config_init(&forest_cfg);
    unsigned long long seed = 1;
    double split_fraction = 0.9;
    bool holdout = false;
    std::string arff;

    auto add_mining_flags = [&](CLI::App* cmd) {
        cmd->add_option("--manifest", manifest, "project manifest (id<TAB>path-or-url per line)")
            ->required();
        cmd->add_option("--workdir", workdir, "clone cache directory");
        cmd->add_option("--min-commits", min_commits,
                        "keep projects with strictly more commits (default 100)");
        cmd->add_option("--jobs", jobs, "parallel workers across projects");
    };

    CLI::App* select = app.add_subcommand("select", "apply the project selection criteria");
    add_mining_flags(select);
    select->add_option("--out", out, "write the acceptance report here instead of stdout");

    CLI::App* mine = app.add_subcommand("mine", "mine accepted projects into classes.arff");
    add_mining_flags(mine);
    mine->add_option("--out", out, "output directory")->required();

    CLI::App* train = app.add_subcommand("train", "train and evaluate the random forest");
    train->add_option("arff", arff, "dataset produced by `mine`")->required();
    train->add_option("--seed", seed, "random seed (default 1)");
    train->add_option("--trees", forest_cfg.n_trees, "number of trees (default 200)");
    train->add_option("--max-depth", forest_cfg.max_depth, "maximum tree depth (default 12)");
    train->add_option("--features", forest_cfg.n_features_per_split,
                      "features per split (default 12)");
    train->add_option("--folds", forest_cfg.cv_folds, "cross-validation folds (default 10)");
    train->add_option("--split", split_fraction, "train fraction for --holdout (default 0.9)");
    train->add_flag("--holdout", holdout, "evaluate one seeded split instead of cross-validation");

    CLI::App* stats = app.add_subcommand("stats", "reference values and fix distribution");
    stats->add_option("arff", arff, "dataset produced by `mine`")->required();
    stats->add_option("--out", out, "directory for the CSV files (default: print to stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    cm_selection_criteria criteria;
    cm_selection_criteria_init(&criteria);
    criteria.min_commits_exclusive = min_commits;

    if (select->parsed()) {
        OwnedString report;
        cm_status status = cm_run_select(manifest.c_str(), workdir.c_str(), &criteria, jobs,
                                         &report.value);
        if (status != CM_OK) return report_failure(status);
        if (out.empty()) {
            std::fputs(report.value, stdout);
        } else if (!write_file(out, report.value)) {
            std::fprintf(stderr, "codemine: cannot write %s\n", out.c_str());
            return kExitUsage;
        }
        return kExitOk;
    }

    if (mine->parsed()) {
        OwnedString summary;
        cm_status status = cm_run_mine(manifest.c_str(), workdir.c_str(), &criteria, out.c_str(),
                                       jobs, &summary.value);
        if (status != CM_OK) return report_failure(status);
        std::printf("%s\n", summary.value);
        return kExitOk;
    }

    if (train->parsed()) {
        forest_cfg.seed = seed;
        OwnedDataset ds;
        cm_status status = cm_dataset_read_arff(arff.c_str(), &ds.value);
        if (status != CM_OK) return report_failure(status);

        cm_evaluation evaluation;
        status = holdout
                     ? cm_holdout_evaluate(ds.value, &forest_cfg, split_fraction, &evaluation)
                     : cm_cross_validate(ds.value, &forest_cfg, &evaluation);
        if (status != CM_OK) return report_failure(status);

        OwnedString line;
        status = cm_evaluation_format(&evaluation, &line.value);
        if (status != CM_OK) return report_failure(status);
        std::printf("%s\n", line.value);
        return kExitOk;
    }

    if (stats->parsed()) {
        OwnedDataset ds;
        cm_status status = cm_dataset_read_arff(arff.c_str(), &ds.value);
        if (status != CM_OK) return report_failure(status);

        OwnedString reference, distribution;
        status = cm_reference_values_csv(ds.value, &reference.value);
        if (status != CM_OK) return report_failure(status);
        status = cm_fix_distribution_csv(ds.value, &distribution.value);
        if (status != CM_OK) return report_failure(status);

        if (out.empty()) {
            std::fputs(reference.value, stdout);
            std::fputs(distribution.value, stdout);
        } else {
            std::string ref_path = out + "/reference_values.csv";
            std::string dist_path = out + "/fix_distribution.csv";
            if (!write_file(ref_path, reference.value) ||
                !write_file(dist_path, distribution.value)) {
                std::fprintf(stderr, "codemine: cannot write CSVs under %s\n", out.c_str());
                return kExitUsage;
            }
        }
        return kExitOk;
    }

    return kExitUsage;
}
