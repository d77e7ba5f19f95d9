#include "codemine/history.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "codemine/errors.hpp"
#include "codemine/git_repo.hpp"
#include "codemine/java_ast.hpp"
#include "codemine/log.hpp"
#include "codemine/project.hpp"
#include "codemine/text.hpp"

namespace codemine {

namespace {

constexpr std::array<std::string_view, 13> kFixingKeywords = {
    "fix",    "fixes",    "fixed",   "fixing",  "bug",   "bugs",    "bugfix",
    "bugfixes", "defect", "defects", "patch",   "patched", "patching",
};

bool is_word_char(unsigned char c) {
    return std::isalnum(c) != 0;
}

} // namespace

std::span<const std::string_view> fixing_keywords() {
    return kFixingKeywords;
}

bool is_fixing_revision(std::string_view message, std::span<const std::string_view> keywords) {
    std::size_t i = 0;
    while (i < message.size()) {
        if (!is_word_char(static_cast<unsigned char>(message[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < message.size() && is_word_char(static_cast<unsigned char>(message[i])))
            ++i;
        std::string word = to_lower(message.substr(start, i - start));
        for (std::string_view k : keywords)
            if (word == k) return true;
    }
    return false;
}

bool is_fixing_revision(std::string_view message) {
    return is_fixing_revision(message, fixing_keywords());
}

Snapshot::Snapshot(std::string at_revision, std::vector<std::string> files,
                   std::shared_ptr<const GitRepo> repo)
    : at_revision_(std::move(at_revision)), files_(std::move(files)), repo_(std::move(repo)) {
    std::sort(files_.begin(), files_.end());
}

bool Snapshot::contains(std::string_view path) const {
    return std::binary_search(files_.begin(), files_.end(), path);
}

std::string Snapshot::read(const std::string& path) const {
    return repo_->read_blob(at_revision_, path);
}

std::map<std::string, std::string> Snapshot::read_all(std::span<const std::string> paths) const {
    return repo_->read_blobs(at_revision_, paths);
}

FixCountTable replay_fix_counts(std::span<const Revision> revisions) {
    FixCountTable table;
    for (const Revision& rev : revisions) {
        bool fixing = is_fixing_revision(rev.message);
        for (const ChangedFile& change : rev.changes) {
            switch (change.kind) {
            case ChangeKind::Deleted:
                table.entries.erase(change.path);
                break;
            case ChangeKind::Added:
                table.entries[change.path] = fixing ? 1 : 0;
                break;
            case ChangeKind::Modified: {
                auto [it, inserted] = table.entries.try_emplace(change.path, 0);
                if (fixing) it->second += 1;
                break;
            }
            }
        }
    }
    return table;
}

std::optional<std::size_t> find_revision(std::span<const Revision> revisions, std::string_view id) {
    for (std::size_t i = 0; i < revisions.size(); ++i)
        if (revisions[i].id == id) return i;
    return std::nullopt;
}

Snapshot get_snapshot(const Project& project, std::string_view at) {
    if (!project.repo)
        throw InvalidArgument("project " + project.spec.id + " has no repository");

    std::size_t end;
    if (at == "HEAD") {
        end = project.revisions.size();
    } else {
        auto idx = find_revision(project.revisions, at);
        if (!idx)
            throw InvalidArgument("unknown revision id: " + std::string(at));
        end = *idx + 1;
    }

    std::set<std::string> live;
    for (std::size_t i = 0; i < end; ++i) {
        for (const ChangedFile& change : project.revisions[i].changes) {
            if (change.kind == ChangeKind::Deleted)
                live.erase(change.path);
            else
                live.insert(change.path);
        }
    }

    std::string rev = end == 0 ? std::string("HEAD")
                               : project.revisions[end - 1].id;
    return Snapshot(std::move(rev), std::vector<std::string>(live.begin(), live.end()),
                    project.repo);
}

NcfixResult compute_ncfix(const Project& project) {
    NcfixResult result;
    result.table = replay_fix_counts(project.revisions);
    if (project.revisions.empty())
        return result;

    Snapshot snapshot = get_snapshot(project);

    std::vector<std::string> java_files;
    for (const auto& [path, count] : result.table.entries)
        if (ends_with(path, ".java")) java_files.push_back(path);

    auto contents = snapshot.read_all(java_files);
    for (const auto& path : java_files) {
        auto it = contents.find(path);
        if (it == contents.end()) {
            log_info("ncfix: " + path + " not readable at " + snapshot.at_revision());
            result.skipped_files.push_back(path);
            continue;
        }
        java::ParseOutcome outcome = java::parse_compilation_unit(it->second, path);
        if (!outcome.ok()) {
            log_info("ncfix: skipping unparseable " + path + ": " + outcome.error->message);
            result.skipped_files.push_back(path);
            continue;
        }
        long count = result.table.entries.at(path);
        for (const java::Declaration* decl : java::enumerate_class_declarations(*outcome.unit))
            result.rows.push_back({project.spec.id, path + "#" + decl->qualified_id, count});
    }
    return result;
}

std::string format_fix_table(const FixCountTable& table) {
    std::string out;
    for (const auto& [path, count] : table.entries) {
        out += path;
        out += '\t';
        out += std::to_string(count);
        out += '\n';
    }
    return out;
}

} // namespace codemine
