#include "codemine/log.hpp"

#include <cstdio>
#include <cstdlib>

#include "codemine/text.hpp"

namespace codemine {

LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("CODEMINE_LOG");
        if (!env) return LogLevel::Quiet;
        std::string v = to_lower(env);
        if (v == "debug" || v == "2") return LogLevel::Debug;
        if (v == "info" || v == "1") return LogLevel::Info;
        return LogLevel::Quiet;
    }();
    return level;
}

void log_info(const std::string& message) {
    if (log_level() >= LogLevel::Info)
        std::fprintf(stderr, "codemine: %s\n", message.c_str());
}

void log_debug(const std::string& message) {
    if (log_level() >= LogLevel::Debug)
        std::fprintf(stderr, "codemine: %s\n", message.c_str());
}

} // namespace codemine
