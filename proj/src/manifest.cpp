#include "codemine/manifest.hpp"

#include <fstream>
#include <set>

#include "codemine/errors.hpp"
#include "codemine/text.hpp"

namespace codemine {

std::vector<ProjectSpec> load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read manifest: " + path.string());

    std::vector<ProjectSpec> specs;
    std::set<std::string, std::less<>> seen;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view view = line;
        if (trim(view).empty() || trim(view).front() == '#') continue;

        std::size_t tab = view.find('\t');
        if (tab == std::string_view::npos)
            throw FormatError("manifest entry needs `<id><TAB><path-or-url>`", line_no);

        ProjectSpec spec;
        spec.id = std::string(trim(view.substr(0, tab)));
        spec.source = std::string(trim(view.substr(tab + 1)));
        spec.name = spec.id;
        if (spec.id.empty())
            throw FormatError("manifest entry has an empty id", line_no);
        if (spec.source.empty())
            throw FormatError("manifest entry has an empty source", line_no);
        if (!seen.insert(spec.id).second)
            throw DuplicateKey("duplicate project id \"" + spec.id + "\" in manifest");
        specs.push_back(std::move(spec));
    }
    return specs;
}

} // namespace codemine
