#ifndef CODEMINE_SELECTION_HPP
#define CODEMINE_SELECTION_HPP

#include <string>
#include <vector>

#include "codemine/project.hpp"

namespace codemine {

struct SelectionCriteria {
    long min_commits_exclusive = 100;    // keep projects with strictly more commits
    std::string required_language = "java";
    bool require_java_source = true;
};

enum class RejectReason { Accepted, NoRepository, TooFewCommits, NotJava };

const char* reject_reason_name(RejectReason reason);

struct SelectionEntry {
    std::string project_id;
    RejectReason reason = RejectReason::Accepted;
};

struct SelectionResult {
    std::vector<std::size_t> accepted; // indices into the input list, order preserved
    std::vector<SelectionEntry> report; // one entry per input project
};

// True iff the head snapshot contains at least one file with the language's
// extension (".java" for "java"). False for projects without commits.
bool detect_language(const Project& project, const std::string& language);
bool detect_java(const Project& project);

// Keeps projects whose revision count strictly exceeds the threshold and
// which qualify as the required language. Output order preserved; every
// rejected project gets exactly one reason.
SelectionResult select_projects(std::span<const Project> projects, const SelectionCriteria& criteria);

// Rejection report: one line per project, `<id><TAB><accepted|reason>`.
std::string format_selection_report(const SelectionResult& result);

} // namespace codemine

#endif
