#include "codemine/selection.hpp"

#include <set>

#include "codemine/log.hpp"
#include "codemine/text.hpp"

namespace codemine {

const char* reject_reason_name(RejectReason reason) {
    switch (reason) {
    case RejectReason::Accepted: return "accepted";
    case RejectReason::NoRepository: return "no-repository";
    case RejectReason::TooFewCommits: return "too-few-commits";
    case RejectReason::NotJava: return "not-java";
    }
    return "unknown";
}

bool detect_language(const Project& project, const std::string& language) {
    if (!project.repo || project.revisions.empty())
        return false;
    std::string extension = "." + to_lower(language);

    // Live set at HEAD by replaying adds/deletes; no tree walk needed.
    std::set<std::string> live;
    for (const Revision& rev : project.revisions) {
        for (const ChangedFile& change : rev.changes) {
            if (change.kind == ChangeKind::Deleted)
                live.erase(change.path);
            else
                live.insert(change.path);
        }
    }
    for (const auto& path : live)
        if (ends_with(to_lower(path), extension)) return true;
    return false;
}

bool detect_java(const Project& project) {
    return detect_language(project, "java");
}

SelectionResult select_projects(std::span<const Project> projects, const SelectionCriteria& criteria) {
    SelectionResult result;
    for (std::size_t i = 0; i < projects.size(); ++i) {
        const Project& project = projects[i];
        RejectReason reason = RejectReason::Accepted;
        if (!project.repo)
            reason = RejectReason::NoRepository;
        else if (static_cast<long>(project.revision_count()) <= criteria.min_commits_exclusive)
            reason = RejectReason::TooFewCommits;
        else if (criteria.require_java_source &&
                 !detect_language(project, criteria.required_language))
            reason = RejectReason::NotJava;

        result.report.push_back({project.spec.id, reason});
        if (reason == RejectReason::Accepted)
            result.accepted.push_back(i);
        else
            log_info("rejected " + project.spec.id + ": " + reject_reason_name(reason));
    }
    return result;
}

std::string format_selection_report(const SelectionResult& result) {
    std::string out;
    for (const SelectionEntry& entry : result.report) {
        out += entry.project_id;
        out += '\t';
        out += reject_reason_name(entry.reason);
        out += '\n';
    }
    return out;
}

} // namespace codemine
