#pragma once

#include <string_view>

namespace kansei::log {

enum class Level { Error = 0, Info = 1, Debug = 2 };

// Level comes from the KANSEI_LOG environment variable (error|info|debug),
// read once on first use. Unknown or unset values mean "error".
Level level();

void error(std::string_view message);
void info(std::string_view message);
void debug(std::string_view message);

} // namespace kansei::log
