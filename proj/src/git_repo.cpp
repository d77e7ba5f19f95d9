#include "codemine/git_repo.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>

#include "codemine/errors.hpp"
#include "codemine/log.hpp"
#include "codemine/text.hpp"

namespace codemine {

namespace {

struct CommandResult {
    int status = -1;
    std::string output;
};

// Runs a shell command capturing stdout (binary safe). stderr is inherited.
CommandResult run_shell(const std::string& command) {
    CommandResult result;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe)
        throw GitError("cannot spawn: " + command);
    std::array<char, 65536> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), n);
    int rc = ::pclose(pipe);
    result.status = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
    return result;
}

std::string build_git_command(const std::filesystem::path* dir, const std::vector<std::string>& args,
                              const std::filesystem::path* stdin_file) {
    std::string cmd = "git";
    if (dir) {
        cmd += " -C ";
        cmd += shell_quote(dir->string());
    }
    for (const auto& a : args) {
        cmd += ' ';
        cmd += shell_quote(a);
    }
    if (stdin_file) {
        cmd += " < ";
        cmd += shell_quote(stdin_file->string());
    } else {
        cmd += " < /dev/null";
    }
    return cmd;
}

std::string run_git_checked(const std::filesystem::path* dir, const std::vector<std::string>& args,
                            const std::filesystem::path* stdin_file = nullptr) {
    std::string cmd = build_git_command(dir, args, stdin_file);
    CommandResult r = run_shell(cmd);
    if (r.status != 0)
        throw GitError("git failed (" + std::to_string(r.status) + "): " + cmd);
    return std::move(r.output);
}

int run_git_status(const std::filesystem::path& dir, const std::vector<std::string>& args) {
    CommandResult r = run_shell(build_git_command(&dir, args, nullptr) + " 2> /dev/null");
    return r.status;
}

// git quotes unusual paths C-style (core.quotepath); undo that.
std::string unquote_git_path(std::string_view raw) {
    if (raw.size() < 2 || raw.front() != '"' || raw.back() != '"')
        return std::string(raw);
    std::string out;
    out.reserve(raw.size());
    for (std::size_t i = 1; i + 1 < raw.size(); ++i) {
        char c = raw[i];
        if (c != '\\') {
            out.push_back(c);
            continue;
        }
        ++i;
        if (i + 1 > raw.size() - 1) break;
        char e = raw[i];
        switch (e) {
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        case 'r': out.push_back('\r'); break;
        case '\\': out.push_back('\\'); break;
        case '"': out.push_back('"'); break;
        default:
            if (e >= '0' && e <= '7' && i + 2 <= raw.size() - 2 && raw[i + 1] >= '0' &&
                raw[i + 1] <= '7' && raw[i + 2] >= '0' && raw[i + 2] <= '7') {
                int v = (e - '0') * 64 + (raw[i + 1] - '0') * 8 + (raw[i + 2] - '0');
                out.push_back(static_cast<char>(v));
                i += 2;
            } else {
                out.push_back(e);
            }
        }
    }
    return out;
}

void parse_name_status_line(std::string_view line, std::vector<ChangedFile>& changes) {
    // `<status>\t<path>` or `<status>\t<src>\t<dst>` for copies/renames.
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) return;
    std::string_view status = line.substr(0, tab);
    if (status.empty()) return;
    auto rest = line.substr(tab + 1);

    char code = status[0];
    if (code == 'R' || code == 'C') {
        // Renames are suppressed with --no-renames, but keep the
        // delete+add interpretation in case one slips through.
        std::size_t tab2 = rest.find('\t');
        std::string src = unquote_git_path(tab2 == std::string_view::npos ? rest : rest.substr(0, tab2));
        std::string dst = tab2 == std::string_view::npos ? src : unquote_git_path(rest.substr(tab2 + 1));
        if (code == 'R') changes.push_back({std::move(src), ChangeKind::Deleted});
        changes.push_back({std::move(dst), ChangeKind::Added});
        return;
    }

    std::string path = unquote_git_path(rest);
    switch (code) {
    case 'A': changes.push_back({std::move(path), ChangeKind::Added}); break;
    case 'D': changes.push_back({std::move(path), ChangeKind::Deleted}); break;
    case 'M':
    case 'T':
    default: changes.push_back({std::move(path), ChangeKind::Modified}); break;
    }
}

bool looks_remote(const std::string& source) {
    return source.find("://") != std::string::npos || source.rfind("git@", 0) == 0;
}

class TempFile {
public:
    explicit TempFile(const std::string& contents) {
        char name[] = "/tmp/codemine-req-XXXXXX";
        int fd = ::mkstemp(name);
        if (fd < 0)
            throw IoError("cannot create temp file");
        path_ = name;
        FILE* f = ::fdopen(fd, "wb");
        if (!f)
            throw IoError("cannot open temp file");
        std::fwrite(contents.data(), 1, contents.size(), f);
        std::fclose(f);
    }
    ~TempFile() { std::error_code ec; std::filesystem::remove(path_, ec); }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

} // namespace

GitRepo GitRepo::open(const std::filesystem::path& dir) {
    if (!std::filesystem::exists(dir))
        throw GitError("repository path does not exist: " + dir.string());
    if (run_git_status(dir, {"rev-parse", "--git-dir"}) != 0)
        throw GitError("not a git repository: " + dir.string());
    return GitRepo(std::filesystem::absolute(dir));
}

GitRepo GitRepo::clone_or_open(const std::string& url, const std::filesystem::path& workdir) {
    if (!looks_remote(url))
        return open(url);

    std::filesystem::create_directories(workdir);
    std::filesystem::path cache = workdir / ("clone-" + hex64(fnv1a64(url)));
    if (std::filesystem::exists(cache / ".git") || std::filesystem::exists(cache / "HEAD")) {
        log_debug("reusing cached clone for " + url);
        return open(cache);
    }
    log_info("cloning " + url);
    run_git_checked(nullptr, {"clone", "--quiet", url, cache.string()});
    return open(cache);
}

std::string GitRepo::run(const std::vector<std::string>& args) const {
    return run_git_checked(&dir_, args);
}

bool GitRepo::has_commits() const {
    return run_git_status(dir_, {"rev-parse", "--verify", "HEAD"}) == 0;
}

std::string GitRepo::head_id() const {
    std::string out = run({"rev-parse", "HEAD"});
    return std::string(trim(out));
}

std::vector<Revision> GitRepo::list_revisions() const {
    if (!has_commits())
        return {};

    // One pass: \x01 starts a record, \x1f separates header fields, \x1e
    // ends the header; name-status lines follow until the next record.
    std::string out = run({"log", "HEAD", "--no-renames", "--diff-merges=first-parent",
                           "--name-status", "--pretty=format:%x01%H%x1f%ct%x1f%cn%x1f%B%x1e"});

    std::vector<Revision> revisions;
    std::size_t pos = 0;
    while (true) {
        std::size_t start = out.find('\x01', pos);
        if (start == std::string::npos) break;
        std::size_t next = out.find('\x01', start + 1);
        std::string_view record(out.data() + start + 1,
                                (next == std::string::npos ? out.size() : next) - start - 1);
        pos = start + 1;

        std::size_t header_end = record.find('\x1e');
        if (header_end == std::string_view::npos)
            throw GitError("unparseable git log record in " + dir_.string());
        auto fields = split(record.substr(0, header_end), '\x1f');
        if (fields.size() != 4)
            throw GitError("unexpected git log header in " + dir_.string());

        Revision rev;
        rev.id = std::string(fields[0]);
        rev.timestamp = std::strtoll(std::string(fields[1]).c_str(), nullptr, 10);
        rev.committer = std::string(fields[2]);
        rev.message = std::string(fields[3]);

        for (std::string_view line : split(record.substr(header_end + 1), '\n')) {
            line = trim(line);
            if (line.empty()) continue;
            parse_name_status_line(line, rev.changes);
        }
        revisions.push_back(std::move(rev));
    }

    std::stable_sort(revisions.begin(), revisions.end(), [](const Revision& a, const Revision& b) {
        if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
        return a.id < b.id;
    });
    return revisions;
}

std::string GitRepo::read_blob(const std::string& rev, const std::string& path) const {
    return run_git_checked(&dir_, {"show", rev + ":" + path});
}

std::map<std::string, std::string> GitRepo::read_blobs(const std::string& rev,
                                                       std::span<const std::string> paths) const {
    std::map<std::string, std::string> blobs;
    if (paths.empty()) return blobs;

    std::string requests;
    for (const auto& p : paths) {
        requests += rev;
        requests += ':';
        requests += p;
        requests += '\n';
    }
    TempFile req(requests);
    std::string out = run_git_checked(&dir_, {"cat-file", "--batch"}, &req.path());

    // Responses arrive in request order: `<sha> <type> <size>\n<bytes>\n`
    // or `<spec> missing\n`.
    std::size_t pos = 0;
    for (const auto& p : paths) {
        std::size_t eol = out.find('\n', pos);
        if (eol == std::string::npos)
            throw GitError("truncated cat-file output for " + dir_.string());
        std::string_view header(out.data() + pos, eol - pos);
        pos = eol + 1;
        if (ends_with(header, " missing") || ends_with(header, " ambiguous"))
            continue;

        auto fields = split(header, ' ');
        if (fields.size() < 3)
            throw GitError("unexpected cat-file header: " + std::string(header));
        std::size_t size = std::strtoull(std::string(fields[2]).c_str(), nullptr, 10);
        if (pos + size > out.size())
            throw GitError("truncated cat-file payload for " + p);
        blobs.emplace(p, out.substr(pos, size));
        pos += size + 1; // payload + trailing newline
    }
    return blobs;
}

} // namespace codemine
