#ifndef CODEMINE_PROJECT_HPP
#define CODEMINE_PROJECT_HPP

#include <filesystem>
#include <memory>
#include <vector>

#include "codemine/git_repo.hpp"
#include "codemine/manifest.hpp"

namespace codemine {

// A repository under study: its spec, the opened repository and the
// linearized revision list.
struct Project {
    ProjectSpec spec;
    std::shared_ptr<const GitRepo> repo; // null when the source has no repository
    std::vector<Revision> revisions;

    std::size_t revision_count() const { return revisions.size(); }
};

// Opens a local repository in place or clones a remote source into workdir
// (cached by URL). The revision list is linearized eagerly.
// Throws GitError on missing/corrupt repositories and clone failures.
Project open_project(const ProjectSpec& spec, const std::filesystem::path& workdir);

} // namespace codemine

#endif
