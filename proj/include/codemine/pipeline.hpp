#ifndef CODEMINE_PIPELINE_HPP
#define CODEMINE_PIPELINE_HPP

#include <filesystem>
#include <string>

#include "codemine/selection.hpp"

namespace codemine {

struct PipelineOptions {
    std::filesystem::path manifest;
    std::filesystem::path workdir = ".";
    std::filesystem::path outdir = ".";
    SelectionCriteria criteria;
    int jobs = 1;
};

struct SelectOutcome {
    std::string report_text; // `<id><TAB><accepted|reason>` per project
    int total = 0;
    int accepted = 0;
};

// Opens every manifest project (projects that fail to open are rejected as
// no-repository) and applies the selection criteria.
SelectOutcome run_select(const PipelineOptions& opts);

struct MineOutcome {
    std::filesystem::path arff_path;
    int projects_mined = 0;
    int row_count = 0;
    std::string summary;
};

// Full mining pass over the accepted projects: metrics + fix counts joined
// into `classes.arff`, one debug dump per metric, per-project ncfix dumps,
// the selection report and the join log, all under opts.outdir.
// Throws EmptyResult when no project is accepted or no row survives.
MineOutcome run_mine(const PipelineOptions& opts);

} // namespace codemine

#endif
