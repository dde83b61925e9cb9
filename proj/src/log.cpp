#include "kansei/log.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

namespace kansei::log {

namespace {

Level read_level_from_env() {
    const char* raw = std::getenv("KANSEI_LOG");
    if (raw == nullptr) return Level::Error;
    std::string value(raw);
    if (value == "debug") return Level::Debug;
    if (value == "info") return Level::Info;
    return Level::Error;
}

void emit(const char* tag, std::string_view message) {
    std::cerr << "kansei [" << tag << "] " << message << "\n";
}

} // namespace

Level level() {
    static const Level lvl = read_level_from_env();
    return lvl;
}

void error(std::string_view message) {
    emit("error", message);
}

void info(std::string_view message) {
    if (level() >= Level::Info) emit("info", message);
}

void debug(std::string_view message) {
    if (level() >= Level::Debug) emit("debug", message);
}

} // namespace kansei::log
