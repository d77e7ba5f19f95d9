#include "codemine.h"

#include <cstring>
#include <memory>
#include <new>
#include <span>
#include <string>

#include "codemine/dataset.hpp"
#include "codemine/errors.hpp"
#include "codemine/forest.hpp"
#include "codemine/history.hpp"
#include "codemine/manifest.hpp"
#include "codemine/pipeline.hpp"
#include "codemine/stats.hpp"

using namespace codemine;

struct cm_manifest {
    std::vector<ProjectSpec> specs;
};

struct cm_dataset {
    Dataset ds;
};

struct cm_forest {
    Forest forest;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) {
    g_last_error = message;
}

// Maps core exceptions onto C status codes; every API entry funnels here.
template <typename Fn>
cm_status guard(Fn&& fn) {
    try {
        fn();
        return CM_OK;
    } catch (const IoError& e) {
        set_error(e.what());
        return CM_ERR_IO;
    } catch (const FormatError& e) {
        set_error(e.what());
        return CM_ERR_FORMAT;
    } catch (const GitError& e) {
        set_error(e.what());
        return CM_ERR_GIT;
    } catch (const InvalidArgument& e) {
        set_error(e.what());
        return CM_ERR_INVALID;
    } catch (const EmptyResult& e) {
        set_error(e.what());
        return CM_ERR_EMPTY;
    } catch (const DuplicateKey& e) {
        set_error(e.what());
        return CM_ERR_DUPLICATE;
    } catch (const std::exception& e) {
        set_error(e.what());
        return CM_ERR_UNKNOWN;
    } catch (...) {
        set_error("unknown failure");
        return CM_ERR_UNKNOWN;
    }
}

cm_status require(bool ok, const char* message) {
    if (ok) return CM_OK;
    set_error(message);
    return CM_ERR_INVALID;
}

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

SelectionCriteria to_criteria(const cm_selection_criteria* criteria) {
    SelectionCriteria out;
    if (criteria) {
        out.min_commits_exclusive = criteria->min_commits_exclusive;
        out.require_java_source = criteria->require_java_source != 0;
    }
    return out;
}

ForestConfig to_config(const cm_forest_config* cfg) {
    ForestConfig out;
    if (cfg) {
        out.n_trees = cfg->n_trees;
        out.max_depth = cfg->max_depth;
        out.n_features_per_split = cfg->n_features_per_split;
        out.cv_folds = cfg->cv_folds;
        out.min_samples_split = cfg->min_samples_split;
        out.seed = cfg->seed;
    }
    return out;
}

cm_evaluation to_c(const EvaluationReport& report) {
    return {report.r, report.mae, report.rmse, report.rae, report.rrse};
}

} // namespace

extern "C" {

const char* cm_status_name(cm_status status) {
    switch (status) {
    case CM_OK: return "ok";
    case CM_ERR_IO: return "io-error";
    case CM_ERR_FORMAT: return "format-error";
    case CM_ERR_GIT: return "git-error";
    case CM_ERR_INVALID: return "invalid-argument";
    case CM_ERR_EMPTY: return "empty-result";
    case CM_ERR_DUPLICATE: return "duplicate-key";
    case CM_ERR_UNKNOWN: break;
    }
    return "unknown-error";
}

const char* cm_last_error(void) {
    return g_last_error.c_str();
}

const char* cm_version(void) {
    return "0.1.0";
}

void cm_string_free(char* s) {
    delete[] s;
}

cm_status cm_manifest_load(const char* path, cm_manifest** out) {
    if (cm_status s = require(path && out, "path and out must be non-null"); s != CM_OK) return s;
    return guard([&] {
        auto m = std::make_unique<cm_manifest>();
        m->specs = load_manifest(path);
        *out = m.release();
    });
}

void cm_manifest_free(cm_manifest* m) {
    delete m;
}

size_t cm_manifest_count(const cm_manifest* m) {
    return m ? m->specs.size() : 0;
}

const char* cm_manifest_project_id(const cm_manifest* m, size_t index) {
    if (!m || index >= m->specs.size()) return nullptr;
    return m->specs[index].id.c_str();
}

const char* cm_manifest_project_source(const cm_manifest* m, size_t index) {
    if (!m || index >= m->specs.size()) return nullptr;
    return m->specs[index].source.c_str();
}

void cm_selection_criteria_init(cm_selection_criteria* criteria) {
    if (!criteria) return;
    SelectionCriteria defaults;
    criteria->min_commits_exclusive = defaults.min_commits_exclusive;
    criteria->require_java_source = defaults.require_java_source ? 1 : 0;
}

cm_status cm_run_select(const char* manifest_path, const char* workdir,
                        const cm_selection_criteria* criteria, int jobs, char** report_out) {
    if (cm_status s = require(manifest_path && workdir && report_out,
                              "manifest, workdir and report_out must be non-null");
        s != CM_OK)
        return s;
    return guard([&] {
        PipelineOptions opts;
        opts.manifest = manifest_path;
        opts.workdir = workdir;
        opts.criteria = to_criteria(criteria);
        opts.jobs = jobs;
        SelectOutcome outcome = run_select(opts);
        *report_out = dup_string(outcome.report_text);
    });
}

cm_status cm_run_mine(const char* manifest_path, const char* workdir,
                      const cm_selection_criteria* criteria, const char* outdir, int jobs,
                      char** summary_out) {
    if (cm_status s = require(manifest_path && workdir && outdir,
                              "manifest, workdir and outdir must be non-null");
        s != CM_OK)
        return s;
    return guard([&] {
        PipelineOptions opts;
        opts.manifest = manifest_path;
        opts.workdir = workdir;
        opts.outdir = outdir;
        opts.criteria = to_criteria(criteria);
        opts.jobs = jobs;
        MineOutcome outcome = run_mine(opts);
        if (summary_out) *summary_out = dup_string(outcome.summary);
    });
}

int cm_is_fixing_revision(const char* message) {
    return message && is_fixing_revision(message) ? 1 : 0;
}

cm_status cm_dataset_read_arff(const char* path, cm_dataset** out) {
    if (cm_status s = require(path && out, "path and out must be non-null"); s != CM_OK) return s;
    return guard([&] {
        auto ds = std::make_unique<cm_dataset>();
        ds->ds = read_arff(path);
        *out = ds.release();
    });
}

cm_status cm_dataset_write_arff(const cm_dataset* ds, const char* path) {
    if (cm_status s = require(ds && path, "dataset and path must be non-null"); s != CM_OK)
        return s;
    return guard([&] { write_arff(ds->ds, path); });
}

void cm_dataset_free(cm_dataset* ds) {
    delete ds;
}

size_t cm_dataset_row_count(const cm_dataset* ds) {
    return ds ? ds->ds.rows.size() : 0;
}

size_t cm_dataset_metric_count(const cm_dataset* ds) {
    return ds ? ds->ds.metric_count() : 0;
}

const char* cm_dataset_metric_name(const cm_dataset* ds, size_t index) {
    if (!ds || index >= ds->ds.metric_names.size()) return nullptr;
    return ds->ds.metric_names[index].c_str();
}

void cm_forest_config_init(cm_forest_config* cfg) {
    if (!cfg) return;
    ForestConfig defaults;
    cfg->n_trees = defaults.n_trees;
    cfg->max_depth = defaults.max_depth;
    cfg->n_features_per_split = defaults.n_features_per_split;
    cfg->cv_folds = defaults.cv_folds;
    cfg->min_samples_split = defaults.min_samples_split;
    cfg->seed = defaults.seed;
}

cm_status cm_forest_train(const cm_dataset* ds, const cm_forest_config* cfg, cm_forest** out) {
    if (cm_status s = require(ds && out, "dataset and out must be non-null"); s != CM_OK) return s;
    return guard([&] {
        auto forest = std::make_unique<cm_forest>();
        forest->forest = train_forest(ds->ds, to_config(cfg));
        *out = forest.release();
    });
}

void cm_forest_free(cm_forest* forest) {
    delete forest;
}

cm_status cm_forest_predict(const cm_forest* forest, const double* features, size_t n_features,
                            double* prediction_out) {
    if (cm_status s = require(forest && features && prediction_out,
                              "forest, features and prediction_out must be non-null");
        s != CM_OK)
        return s;
    return guard([&] {
        *prediction_out = predict(forest->forest, std::span<const double>(features, n_features));
    });
}

cm_status cm_cross_validate(const cm_dataset* ds, const cm_forest_config* cfg,
                            cm_evaluation* out) {
    if (cm_status s = require(ds && out, "dataset and out must be non-null"); s != CM_OK) return s;
    return guard([&] { *out = to_c(cross_validate(ds->ds, to_config(cfg))); });
}

cm_status cm_holdout_evaluate(const cm_dataset* ds, const cm_forest_config* cfg,
                              double train_fraction, cm_evaluation* out) {
    if (cm_status s = require(ds && out, "dataset and out must be non-null"); s != CM_OK) return s;
    return guard([&] { *out = to_c(holdout_evaluate(ds->ds, to_config(cfg), train_fraction)); });
}

cm_status cm_evaluation_format(const cm_evaluation* report, char** out) {
    if (cm_status s = require(report && out, "report and out must be non-null"); s != CM_OK)
        return s;
    return guard([&] {
        EvaluationReport r{report->r, report->mae, report->rmse, report->rae, report->rrse};
        *out = dup_string(format_report(r));
    });
}

cm_status cm_reference_values_csv(const cm_dataset* ds, char** out) {
    if (cm_status s = require(ds && out, "dataset and out must be non-null"); s != CM_OK) return s;
    return guard([&] { *out = dup_string(reference_values_csv(ds->ds)); });
}

cm_status cm_fix_distribution_csv(const cm_dataset* ds, char** out) {
    if (cm_status s = require(ds && out, "dataset and out must be non-null"); s != CM_OK) return s;
    return guard([&] { *out = dup_string(fix_distribution_csv(ds->ds)); });
}

} // extern "C"
