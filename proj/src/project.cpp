#include "codemine/project.hpp"

#include "codemine/errors.hpp"
#include "codemine/log.hpp"

namespace codemine {

Project open_project(const ProjectSpec& spec, const std::filesystem::path& workdir) {
    Project project;
    project.spec = spec;
    project.repo = std::make_shared<const GitRepo>(GitRepo::clone_or_open(spec.source, workdir));
    project.revisions = project.repo->list_revisions();
    log_debug("opened " + spec.id + " with " + std::to_string(project.revisions.size()) +
              " revisions");
    return project;
}

} // namespace codemine
