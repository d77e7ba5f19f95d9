#include "codemine/pipeline.hpp"

#include <atomic>
#include <cctype>
#include <fstream>
#include <thread>

#include "codemine/dataset.hpp"
#include "codemine/errors.hpp"
#include "codemine/history.hpp"
#include "codemine/log.hpp"
#include "codemine/metrics.hpp"

namespace codemine {

namespace {

void run_pool(int jobs, std::size_t task_count, const std::function<void(std::size_t)>& task) {
    if (task_count == 0) return;
    int workers = std::max(1, jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= task_count) return;
            task(i);
        }
    };
    if (workers == 1) {
        worker();
        return;
    }
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
}

struct Prepared {
    std::vector<ProjectSpec> specs;
    std::vector<Project> projects;          // successfully opened, manifest order
    std::vector<std::size_t> spec_index;    // projects[i] came from specs[spec_index[i]]
    SelectionResult selection;              // over `projects`
    std::string report_text;                // one line per manifest entry
    int accepted_count = 0;
};

// Loads the manifest, opens every project (failures become no-repository
// rejections) and applies the selection criteria.
Prepared prepare(const PipelineOptions& opts) {
    Prepared prep;
    prep.specs = load_manifest(opts.manifest);

    std::vector<std::optional<Project>> opened(prep.specs.size());
    run_pool(opts.jobs, prep.specs.size(), [&](std::size_t i) {
        try {
            opened[i] = open_project(prep.specs[i], opts.workdir);
        } catch (const std::exception& e) {
            log_info("cannot open " + prep.specs[i].id + ": " + e.what());
        }
    });

    for (std::size_t i = 0; i < opened.size(); ++i) {
        if (opened[i]) {
            prep.projects.push_back(std::move(*opened[i]));
            prep.spec_index.push_back(i);
        }
    }
    prep.selection = select_projects(prep.projects, opts.criteria);
    prep.accepted_count = static_cast<int>(prep.selection.accepted.size());

    SelectionResult merged;
    merged.report.resize(prep.specs.size());
    for (std::size_t i = 0; i < prep.specs.size(); ++i)
        merged.report[i] = {prep.specs[i].id, RejectReason::NoRepository};
    for (std::size_t p = 0; p < prep.projects.size(); ++p)
        merged.report[prep.spec_index[p]] = prep.selection.report[p];
    prep.report_text = format_selection_report(merged);
    return prep;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out)
        throw IoError("short write to " + path.string());
}

std::string sanitize_for_filename(std::string id) {
    for (char& c : id)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.'))
            c = '_';
    return id;
}

} // namespace

SelectOutcome run_select(const PipelineOptions& opts) {
    Prepared prep = prepare(opts);
    SelectOutcome outcome;
    outcome.total = static_cast<int>(prep.specs.size());
    outcome.accepted = prep.accepted_count;
    outcome.report_text = std::move(prep.report_text);
    return outcome;
}

MineOutcome run_mine(const PipelineOptions& opts) {
    Prepared prep = prepare(opts);

    std::filesystem::create_directories(opts.outdir);
    write_text_file(opts.outdir / "select_report.tsv", prep.report_text);

    if (prep.selection.accepted.empty())
        throw EmptyResult("no project passed the selection criteria");

    struct Harvest {
        SnapshotMetrics metrics;
        NcfixResult ncfix;
        std::string error;
    };
    std::vector<Harvest> harvests(prep.selection.accepted.size());
    run_pool(opts.jobs, harvests.size(), [&](std::size_t slot) {
        const Project& project = prep.projects[prep.selection.accepted[slot]];
        try {
            Snapshot snapshot = get_snapshot(project);
            harvests[slot].metrics = compute_all(snapshot, project.spec.id);
            harvests[slot].ncfix = compute_ncfix(project);
        } catch (const std::exception& e) {
            harvests[slot].error = e.what();
            log_info("mining " + project.spec.id + " failed: " + e.what());
        }
    });

    std::vector<MetricsRow> metric_rows;
    std::vector<ClassFix> fix_rows;
    int mined = 0;
    for (std::size_t slot = 0; slot < harvests.size(); ++slot) {
        Harvest& h = harvests[slot];
        if (!h.error.empty()) continue;
        const Project& project = prep.projects[prep.selection.accepted[slot]];
        ++mined;
        for (auto& row : h.metrics.rows) metric_rows.push_back(std::move(row));
        for (auto& row : h.ncfix.rows) fix_rows.push_back(std::move(row));
        write_text_file(opts.outdir / ("ncfix_" + sanitize_for_filename(project.spec.id) + ".tsv"),
                        format_fix_table(h.ncfix.table));
    }

    JoinLog join_log;
    Dataset ds = join_rows(metric_rows, fix_rows, &join_log);
    write_text_file(opts.outdir / "join_log.tsv", join_log.text());

    for (std::string_view metric : kMetricNames)
        write_text_file(opts.outdir / ("metric_" + std::string(metric) + ".tsv"),
                        format_metric_dump(metric_rows, metric));

    if (ds.rows.empty())
        throw EmptyResult("mining produced no dataset rows");

    MineOutcome outcome;
    outcome.arff_path = opts.outdir / "classes.arff";
    write_arff(ds, outcome.arff_path);
    outcome.projects_mined = mined;
    outcome.row_count = static_cast<int>(ds.rows.size());
    outcome.summary = "mined " + std::to_string(mined) + " project(s), " +
                      std::to_string(ds.rows.size()) + " class row(s) -> " +
                      outcome.arff_path.string();
    return outcome;
}

} // namespace codemine
