#ifndef CODEMINE_MANIFEST_HPP
#define CODEMINE_MANIFEST_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace codemine {

// One repository under study, as declared in the manifest.
struct ProjectSpec {
    std::string id;     // nonempty, unique within a manifest
    std::string source; // local path or clone URL
    std::string name;   // display string, defaults to id
};

// Manifest format: one entry per line, `<id><TAB><path-or-url>`.
// Lines starting with '#' are comments; blank lines are skipped.
// Throws IoError on unreadable files, FormatError on malformed entries,
// DuplicateKey on repeated ids.
std::vector<ProjectSpec> load_manifest(const std::filesystem::path& path);

} // namespace codemine

#endif
