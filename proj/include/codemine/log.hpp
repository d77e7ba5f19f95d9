#ifndef CODEMINE_LOG_HPP
#define CODEMINE_LOG_HPP

#include <string>

namespace codemine {

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

// Level comes from the CODEMINE_LOG environment variable: quiet|info|debug.
LogLevel log_level();

void log_info(const std::string& message);
void log_debug(const std::string& message);

} // namespace codemine

#endif
