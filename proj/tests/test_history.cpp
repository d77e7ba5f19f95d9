#include <doctest.h>

#include <algorithm>
#include <set>

#include "codemine/errors.hpp"
#include "codemine/history.hpp"
#include "codemine/project.hpp"
#include "support/fixture_repo.hpp"
#include "support/temp_dir.hpp"

using namespace codemine;
using namespace testsupport;

namespace {

Project open_fixture(const TempDir& dir, const std::string& name,
                     const std::vector<CommitSpec>& commits) {
    build_repo(dir / name, commits);
    return open_project({name, (dir / name).string(), name}, dir / "work");
}

// Independent recount: fixes for a surviving path = fixing revisions that
// Added or Modified it at or after its most recent Added entry.
long brute_force_ncfix(const std::vector<Revision>& revisions, const std::string& path) {
    std::size_t last_added = 0;
    for (std::size_t i = 0; i < revisions.size(); ++i)
        for (const ChangedFile& change : revisions[i].changes)
            if (change.path == path && change.kind == ChangeKind::Added) last_added = i;
    long count = 0;
    for (std::size_t i = last_added; i < revisions.size(); ++i) {
        if (!is_fixing_revision(revisions[i].message)) continue;
        for (const ChangedFile& change : revisions[i].changes)
            if (change.path == path &&
                (change.kind == ChangeKind::Added || change.kind == ChangeKind::Modified))
                ++count;
    }
    return count;
}

void check_against_oracle(const Project& project) {
    FixCountTable table = replay_fix_counts(project.revisions);
    for (const auto& [path, count] : table.entries) {
        INFO(project.spec.id << ":" << path);
        CHECK(count == brute_force_ncfix(project.revisions, path));
    }
}

} // namespace

TEST_CASE("fixing keyword heuristic matches whole words only") {
    CHECK(is_fixing_revision("Fixed NPE in parser"));
    CHECK_FALSE(is_fixing_revision("this patches the overflow")); // "patches" not in the set
    CHECK(is_fixing_revision("patch the overflow"));
    CHECK(is_fixing_revision("BUGFIX: rounding"));
    CHECK(is_fixing_revision("closes a defect"));
    CHECK_FALSE(is_fixing_revision("Add feature X"));
    CHECK_FALSE(is_fixing_revision("prefix refactor"));
    CHECK_FALSE(is_fixing_revision("debug logging"));
    CHECK_FALSE(is_fixing_revision(""));
    CHECK(is_fixing_revision("bug_fix underscore boundary"));   // '_' is a word boundary
    CHECK_FALSE(is_fixing_revision("bugs2 are not words"));     // "bugs2" is one token
}

TEST_CASE("custom keyword sets are honored") {
    std::vector<std::string_view> keywords = {"oops"};
    CHECK(is_fixing_revision("oops, revert", keywords));
    CHECK_FALSE(is_fixing_revision("fixed it", keywords));
}

TEST_CASE("snapshot replays adds and deletes") {
    TempDir dir;
    Project project = open_fixture(dir, "basic", basic_history());

    Snapshot head = get_snapshot(project);
    std::vector<std::string> expected = {"src/Alpha.java", "src/Beta.java", "src/Gamma.java"};
    CHECK(head.files() == expected);

    // Before the README deletion it is still live, with the content as of
    // that revision.
    Snapshot early = get_snapshot(project, project.revisions[0].id);
    std::vector<std::string> expected_early = {"README.md", "src/Alpha.java"};
    CHECK(early.files() == expected_early);
    CHECK(early.read("README.md") == "hello\n");
    CHECK(early.read("src/Alpha.java").find("int a = 1;") != std::string::npos);

    CHECK_THROWS_AS(get_snapshot(project, "0000000000000000000000000000000000000000"),
                    InvalidArgument);
}

TEST_CASE("renames replay as delete plus add") {
    TempDir dir;
    Project project = open_fixture(dir, "rename", rename_history());
    Snapshot head = get_snapshot(project);
    CHECK(head.contains("new/Name.java"));
    CHECK_FALSE(head.contains("old/Name.java"));

    NcfixResult result = compute_ncfix(project);
    REQUIRE(result.table.entries.count("new/Name.java") == 1);
    // Re-added non-fixing, then one fixing modify.
    CHECK(result.table.entries.at("new/Name.java") == 1);
    CHECK(result.table.entries.count("old/Name.java") == 0);
}

TEST_CASE("ncfix replay matches the scripted history") {
    TempDir dir;
    Project project = open_fixture(dir, "basic", basic_history());
    NcfixResult result = compute_ncfix(project);

    CHECK(result.table.entries.at("src/Alpha.java") == 1); // one fixing modify
    CHECK(result.table.entries.at("src/Beta.java") == 2);  // two fixing + one plain modify
    CHECK(result.table.entries.at("src/Gamma.java") == 1); // added by a fixing revision
    CHECK(result.table.entries.count("README.md") == 0);   // deleted at head

    // Every declaration of a file shares the file's count.
    long beta_rows = 0;
    for (const ClassFix& row : result.rows) {
        if (row.class_id.rfind("src/Beta.java#", 0) == 0) {
            ++beta_rows;
            CHECK(row.ncfix == 2);
        }
    }
    CHECK(beta_rows == 2); // Beta and Beta$Inner
}

TEST_CASE("delete then re-add restarts the fix count") {
    TempDir dir;
    Project project = open_fixture(dir, "readd", readd_history());
    NcfixResult result = compute_ncfix(project);
    // Re-added by a non-fixing revision, then one fixing modify.
    CHECK(result.table.entries.at("Widget.java") == 1);
}

TEST_CASE("merge commits count against the first parent") {
    TempDir dir;
    Project project = open_fixture(dir, "merge", merge_history());
    NcfixResult result = compute_ncfix(project);
    CHECK(result.table.entries.at("base.java") == 1);
    CHECK(result.table.entries.at("feature.java") == 0);
}

TEST_CASE("replayed counts equal the brute-force recount on all fixtures") {
    TempDir dir;
    check_against_oracle(open_fixture(dir, "basic", basic_history()));
    check_against_oracle(open_fixture(dir, "rename", rename_history()));
    check_against_oracle(open_fixture(dir, "readd", readd_history()));
    check_against_oracle(open_fixture(dir, "merge", merge_history()));
    check_against_oracle(open_fixture(dir, "p31", boundary_history(31, true)));
}

TEST_CASE("head snapshot and fix table agree on the live set") {
    TempDir dir;
    Project project = open_fixture(dir, "basic", basic_history());
    Snapshot head = get_snapshot(project);
    FixCountTable table = replay_fix_counts(project.revisions);

    std::set<std::string> table_paths;
    for (const auto& [path, count] : table.entries) table_paths.insert(path);
    std::set<std::string> snapshot_paths(head.files().begin(), head.files().end());
    CHECK(table_paths == snapshot_paths);
}

TEST_CASE("fix table dump is sorted by path") {
    FixCountTable table;
    table.entries["b.java"] = 2;
    table.entries["a.java"] = 0;
    CHECK(format_fix_table(table) == "a.java\t0\nb.java\t2\n");
}
