#ifndef CODEMINE_GIT_REPO_HPP
#define CODEMINE_GIT_REPO_HPP

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "codemine/history.hpp"

namespace codemine {

// Access to one git repository through the git command line.
class GitRepo {
public:
    // Opens an existing repository. Throws GitError when dir is not one.
    static GitRepo open(const std::filesystem::path& dir);

    // Clones `url` into a cache directory under workdir (keyed by a hash of
    // the URL); an already-populated cache entry is reused without cloning.
    static GitRepo clone_or_open(const std::string& url, const std::filesystem::path& workdir);

    const std::filesystem::path& dir() const { return dir_; }

    bool has_commits() const;
    std::string head_id() const;

    // All commits reachable from HEAD in ascending commit-time order, ties
    // broken by hash. Changes are diffed against the first parent with
    // renames split into delete + add.
    std::vector<Revision> list_revisions() const;

    // Reads one blob at `rev:path`. Throws GitError when absent.
    std::string read_blob(const std::string& rev, const std::string& path) const;

    // Batch blob read through one `git cat-file --batch` run; paths missing
    // from the tree at `rev` are omitted from the result.
    std::map<std::string, std::string> read_blobs(const std::string& rev,
                                                  std::span<const std::string> paths) const;

private:
    explicit GitRepo(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::string run(const std::vector<std::string>& args) const;

    std::filesystem::path dir_;
};

} // namespace codemine

#endif
