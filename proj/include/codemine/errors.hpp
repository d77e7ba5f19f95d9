#ifndef CODEMINE_ERRORS_HPP
#define CODEMINE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace codemine {

// Base for all failures raised by the mining core.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable or unwritable files and directories.
class IoError : public Error {
public:
    using Error::Error;
};

// Malformed input (manifest, ARFF); carries a 1-based line number when known.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& what, int line = 0)
        : Error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

// git invocation failed or repository is missing/corrupt.
class GitError : public Error {
public:
    using Error::Error;
};

// Precondition violated by the caller (bad config, too few rows, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A step produced nothing to work with (no accepted projects, empty population).
class EmptyResult : public Error {
public:
    using Error::Error;
};

// Duplicate key where uniqueness is required (manifest ids, join keys).
class DuplicateKey : public Error {
public:
    using Error::Error;
};

} // namespace codemine

#endif
