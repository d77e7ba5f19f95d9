#include <doctest.h>

#include <fstream>
#include <map>
#include <set>

#include "codemine/dataset.hpp"
#include "codemine/errors.hpp"
#include "codemine/metrics.hpp"
#include "codemine/pipeline.hpp"
#include "codemine/text.hpp"
#include "support/fixture_repo.hpp"
#include "support/temp_dir.hpp"

using namespace codemine;
using namespace testsupport;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

std::set<std::string> dump_keys(const std::filesystem::path& path) {
    std::set<std::string> keys;
    std::string text = slurp(path);
    for (std::string_view line : split(text, '\n')) {
        if (line.empty()) continue;
        std::size_t last_tab = line.rfind('\t');
        keys.insert(std::string(line.substr(0, last_tab)));
    }
    return keys;
}

} // namespace

TEST_CASE("select reports every manifest project with default criteria") {
    const Corpus& corpus = shared_corpus();
    TempDir work;

    PipelineOptions opts;
    opts.manifest = corpus.manifest;
    opts.workdir = work / "clones";
    SelectOutcome outcome = run_select(opts);

    CHECK(outcome.total == 10);
    CHECK(outcome.accepted == 1); // only p101 clears 100 commits with java sources
    CHECK(outcome.report_text.find("p101\taccepted") != std::string::npos);
    CHECK(outcome.report_text.find("p100\ttoo-few-commits") != std::string::npos);
    CHECK(outcome.report_text.find("nojava\tnot-java") != std::string::npos);
    CHECK(outcome.report_text.find("missing\tno-repository") != std::string::npos);
    CHECK(outcome.report_text.find("empty\ttoo-few-commits") != std::string::npos);
    CHECK(outcome.report_text.find("basic\ttoo-few-commits") != std::string::npos);
}

TEST_CASE("mine joins metrics with fix counts and writes every dump") {
    const Corpus& corpus = shared_corpus();
    TempDir work;

    PipelineOptions opts;
    opts.manifest = corpus.manifest;
    opts.workdir = work / "clones";
    opts.outdir = work / "out";
    opts.criteria.min_commits_exclusive = 2;
    opts.jobs = 2;

    MineOutcome outcome = run_mine(opts);
    CHECK(outcome.projects_mined == 7); // all but nojava, empty, missing
    CHECK(outcome.row_count > 20);

    Dataset ds = read_arff(outcome.arff_path);
    CHECK(static_cast<int>(ds.rows.size()) == outcome.row_count);
    REQUIRE(ds.metric_names.size() == 12);

    // The rich repository's scripted counts appear in the joined table.
    auto fix_of = [&](const std::string& key) {
        for (const auto& row : ds.rows)
            if (row.class_id == key) return row.fixing_revisions;
        FAIL("missing row " << key);
        return -1.0;
    };
    CHECK(fix_of("rich:src/Basic.java#fixtures.Basic") == 0.0);
    CHECK(fix_of("rich:src/Nesting.java#fixtures.A$B$C") == 1.0);
    CHECK(fix_of("rich:src/EnumRich.java#fixtures.Op$1") == 1.0);
    CHECK(fix_of("basic:src/Beta.java#demo.Beta$Inner") == 2.0);

    // Unparseable files are absent from rows but present in the fix dump.
    for (const auto& row : ds.rows) CHECK(row.class_id.find("Broken.java") == std::string::npos);
    std::string ncfix_rich = slurp(opts.outdir / "ncfix_rich.tsv");
    CHECK(ncfix_rich.find("src/Broken.java\t0") != std::string::npos);

    // Row-count equality: identical key sets across the twelve dumps.
    std::set<std::string> reference = dump_keys(opts.outdir / "metric_NOM.tsv");
    CHECK(reference.size() >= ds.rows.size()); // parse-only rows may exceed joined rows
    for (std::string_view name : kMetricNames) {
        std::set<std::string> keys =
            dump_keys(opts.outdir / ("metric_" + std::string(name) + ".tsv"));
        CHECK(keys == reference);
    }

    // Every ARFF cell agrees with the corresponding dump line.
    for (std::size_t m = 0; m < ds.metric_names.size(); ++m) {
        std::map<std::string, double> dumped;
        std::string text = slurp(opts.outdir / ("metric_" + ds.metric_names[m] + ".tsv"));
        for (std::string_view line : split(text, '\n')) {
            if (line.empty()) continue;
            std::size_t last_tab = line.rfind('\t');
            std::string key(line.substr(0, last_tab));
            key[key.find('\t')] = ':'; // dump key `<project>\t<class>` vs ARFF `<project>:<class>`
            dumped[key] = std::stod(std::string(line.substr(last_tab + 1)));
        }
        for (const auto& row : ds.rows) {
            REQUIRE(dumped.count(row.class_id) == 1);
            CHECK(row.values[m] == dumped.at(row.class_id));
        }
    }

    CHECK(std::filesystem::exists(opts.outdir / "select_report.tsv"));
    CHECK(std::filesystem::exists(opts.outdir / "join_log.tsv"));
}

TEST_CASE("mine fails with an empty result when nothing is accepted") {
    const Corpus& corpus = shared_corpus();
    TempDir work;

    PipelineOptions opts;
    opts.manifest = corpus.manifest;
    opts.workdir = work / "clones";
    opts.outdir = work / "out";
    opts.criteria.min_commits_exclusive = 100000;
    CHECK_THROWS_AS(run_mine(opts), EmptyResult);
}

TEST_CASE("mine fails with an empty result when every file is unparseable") {
    TempDir work;
    std::vector<CommitSpec> commits = {
        {"drop broken sources", {{"A.java", "class A {\n"}, {"B.java", "interface {{{\n"}}},
        {"fix nothing", {{"A.java", "class A {(\n"}}},
        {"still broken", {{"B.java", "enum }\n"}}},
    };
    build_repo(work / "broken", commits);
    std::ofstream(work / "manifest.tsv") << "broken\t" << (work / "broken").string() << "\n";

    PipelineOptions opts;
    opts.manifest = work / "manifest.tsv";
    opts.workdir = work / "clones";
    opts.outdir = work / "out";
    opts.criteria.min_commits_exclusive = 2;
    CHECK_THROWS_AS(run_mine(opts), EmptyResult);
}

TEST_CASE("select on an empty manifest reports nothing and succeeds") {
    TempDir work;
    std::ofstream(work / "manifest.tsv") << "";
    PipelineOptions opts;
    opts.manifest = work / "manifest.tsv";
    opts.workdir = work / "clones";
    SelectOutcome outcome = run_select(opts);
    CHECK(outcome.total == 0);
    CHECK(outcome.accepted == 0);
    CHECK(outcome.report_text.empty());
}
