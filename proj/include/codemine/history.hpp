#ifndef CODEMINE_HISTORY_HPP
#define CODEMINE_HISTORY_HPP

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace codemine {

class GitRepo;
struct Project;

enum class ChangeKind { Added, Modified, Deleted };

struct ChangedFile {
    std::string path;
    ChangeKind kind;
};

// One commit of the linearized history. Changes are computed against the
// first parent; the root commit lists all files as Added.
struct Revision {
    std::string id;
    long long timestamp = 0; // seconds since epoch (committer time)
    std::string committer;
    std::string message;
    std::vector<ChangedFile> changes;
};

// The set of files live at a revision after replaying all adds and deletes.
// Content is read lazily from the underlying repository.
class Snapshot {
public:
    Snapshot(std::string at_revision, std::vector<std::string> files,
             std::shared_ptr<const GitRepo> repo);

    const std::string& at_revision() const { return at_revision_; }
    const std::vector<std::string>& files() const { return files_; } // sorted
    bool contains(std::string_view path) const;

    // Reads one blob as of at_revision. Throws GitError when missing.
    std::string read(const std::string& path) const;
    // Batch read; paths absent from the tree are dropped from the result.
    std::map<std::string, std::string> read_all(std::span<const std::string> paths) const;

private:
    std::string at_revision_;
    std::vector<std::string> files_;
    std::shared_ptr<const GitRepo> repo_;
};

struct FixCountTable {
    std::map<std::string, long> entries; // path -> fix count, surviving files only
};

// Keyword heuristic over the commit message: lowercase whole-word match,
// word boundary = any non-alphanumeric neighbor or string edge.
bool is_fixing_revision(std::string_view message);
bool is_fixing_revision(std::string_view message, std::span<const std::string_view> keywords);

// The frozen default keyword set.
std::span<const std::string_view> fixing_keywords();

// Replays adds/modifies/deletes over the linearized history:
// Deleted removes the path, Added inserts with 1 (fixing) or 0, Modified
// increments by 1 when the revision is fixing.
FixCountTable replay_fix_counts(std::span<const Revision> revisions);

std::optional<std::size_t> find_revision(std::span<const Revision> revisions, std::string_view id);

// Snapshot at `at` (a commit id) or at the last revision when `at` is "HEAD".
// Throws InvalidArgument when `at` is not in the linearized history.
Snapshot get_snapshot(const Project& project, std::string_view at = "HEAD");

struct ClassFix {
    std::string project_id;
    std::string class_id; // `<file_path>#<qualified_id>`
    long ncfix = 0;
};

struct NcfixResult {
    FixCountTable table;
    std::vector<ClassFix> rows;                // one per declaration in surviving parseable files
    std::vector<std::string> skipped_files;    // surviving .java files that failed to parse
};

// Steps 1-6 of the fix-count algorithm: replay the history, then parse every
// surviving .java file and emit one row per declaration with its file's count.
NcfixResult compute_ncfix(const Project& project);

// Debug dump: `<path><TAB><ncfix>` lines sorted by path.
std::string format_fix_table(const FixCountTable& table);

} // namespace codemine

#endif
