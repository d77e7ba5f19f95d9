/* codemine — git repository mining, class metrics and defect prediction.
 *
 * C API over the C++ core. All handles are opaque; every function that can
 * fail returns a cm_status and leaves a detailed message retrievable with
 * cm_last_error() (thread-local). Strings returned through char** are heap
 * allocated and must be released with cm_string_free().
 */
#ifndef CODEMINE_H
#define CODEMINE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CM_API __declspec(dllexport)
#else
#define CM_API __attribute__((visibility("default")))
#endif

typedef enum cm_status {
    CM_OK = 0,
    CM_ERR_IO = 1,        /* unreadable or unwritable file */
    CM_ERR_FORMAT = 2,    /* malformed manifest or ARFF */
    CM_ERR_GIT = 3,       /* git failure, missing or corrupt repository */
    CM_ERR_INVALID = 4,   /* precondition violated (bad config, too few rows) */
    CM_ERR_EMPTY = 5,     /* nothing to work with (no accepted projects, ...) */
    CM_ERR_DUPLICATE = 6, /* duplicate id or join key */
    CM_ERR_UNKNOWN = 7
} cm_status;

CM_API const char* cm_status_name(cm_status status);
CM_API const char* cm_last_error(void);
CM_API const char* cm_version(void);
CM_API void cm_string_free(char* s);

/* ---- manifest ---------------------------------------------------------- */

typedef struct cm_manifest cm_manifest;

CM_API cm_status cm_manifest_load(const char* path, cm_manifest** out);
CM_API void cm_manifest_free(cm_manifest* m);
CM_API size_t cm_manifest_count(const cm_manifest* m);
CM_API const char* cm_manifest_project_id(const cm_manifest* m, size_t index);
CM_API const char* cm_manifest_project_source(const cm_manifest* m, size_t index);

/* ---- selection and mining --------------------------------------------- */

typedef struct cm_selection_criteria {
    long min_commits_exclusive; /* keep projects with strictly more commits */
    int require_java_source;    /* nonzero: head snapshot must contain a .java file */
} cm_selection_criteria;

CM_API void cm_selection_criteria_init(cm_selection_criteria* criteria);

/* Applies the selection criteria to every manifest project and returns the
 * acceptance report, one `<id><TAB><accepted|reason>` line per project. */
CM_API cm_status cm_run_select(const char* manifest_path, const char* workdir,
                               const cm_selection_criteria* criteria, int jobs,
                               char** report_out);

/* Mines the accepted projects into `<outdir>/classes.arff` plus per-metric
 * dumps, per-project fix-count dumps, the selection report and the join log.
 * Returns a short human-readable summary. */
CM_API cm_status cm_run_mine(const char* manifest_path, const char* workdir,
                             const cm_selection_criteria* criteria, const char* outdir,
                             int jobs, char** summary_out);

/* The fixing-revision heuristic: 1 when the commit message contains one of
 * the fix/bug keywords as a whole word, else 0. */
CM_API int cm_is_fixing_revision(const char* message);

/* ---- datasets ----------------------------------------------------------- */

typedef struct cm_dataset cm_dataset;

CM_API cm_status cm_dataset_read_arff(const char* path, cm_dataset** out);
CM_API cm_status cm_dataset_write_arff(const cm_dataset* ds, const char* path);
CM_API void cm_dataset_free(cm_dataset* ds);
CM_API size_t cm_dataset_row_count(const cm_dataset* ds);
CM_API size_t cm_dataset_metric_count(const cm_dataset* ds);
CM_API const char* cm_dataset_metric_name(const cm_dataset* ds, size_t index);

/* ---- model -------------------------------------------------------------- */

typedef struct cm_forest_config {
    int n_trees;              /* default 200 */
    int max_depth;            /* default 12 */
    int n_features_per_split; /* default 12, clamped to the feature count */
    int cv_folds;             /* default 10 */
    int min_samples_split;    /* default 2 */
    unsigned long long seed;  /* default 1 */
} cm_forest_config;

CM_API void cm_forest_config_init(cm_forest_config* cfg);

typedef struct cm_evaluation {
    double r;    /* Pearson correlation; NaN when undefined */
    double mae;
    double rmse;
    double rae;  /* percent; NaN when undefined */
    double rrse; /* percent; NaN when undefined */
} cm_evaluation;

typedef struct cm_forest cm_forest;

CM_API cm_status cm_forest_train(const cm_dataset* ds, const cm_forest_config* cfg,
                                 cm_forest** out);
CM_API void cm_forest_free(cm_forest* forest);
CM_API cm_status cm_forest_predict(const cm_forest* forest, const double* features,
                                   size_t n_features, double* prediction_out);

/* Pooled k-fold cross-validation (the default evaluation protocol). */
CM_API cm_status cm_cross_validate(const cm_dataset* ds, const cm_forest_config* cfg,
                                   cm_evaluation* out);

/* The 9:1 holdout protocol with a seeded split. */
CM_API cm_status cm_holdout_evaluate(const cm_dataset* ds, const cm_forest_config* cfg,
                                     double train_fraction, cm_evaluation* out);

/* `R=... MAE=... RMSE=... RAE=...% RRSE=...%`, 3 significant digits. */
CM_API cm_status cm_evaluation_format(const cm_evaluation* report, char** out);

/* ---- reference statistics ----------------------------------------------- */

/* CSV `metric,population,mean,median,stddev` over the whole dataset and the
 * fixes>0 population. */
CM_API cm_status cm_reference_values_csv(const cm_dataset* ds, char** out);

/* CSV `bucket,count,pct` for rows with zero vs more-than-zero fixes. */
CM_API cm_status cm_fix_distribution_csv(const cm_dataset* ds, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CODEMINE_H */
