#include "kansei/project.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace kansei {

using ordered_json = nlohmann::ordered_json;

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoFailure, "cannot open \"" + path.string() + "\" for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw Error(ErrorCode::IoFailure, "failed while reading \"" + path.string() + "\"");
    }
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw Error(ErrorCode::IoFailure,
                        "cannot create directory \"" + path.parent_path().string() + "\": " + ec.message());
        }
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::IoFailure, "cannot open \"" + path.string() + "\" for writing");
    }
    out << content;
    if (!out) {
        throw Error(ErrorCode::IoFailure, "failed while writing \"" + path.string() + "\"");
    }
}

void check_settings(const Settings& settings) {
    if (settings.top_n < 1) {
        throw Error(ErrorCode::InvalidSetting, "top_n must be at least 1");
    }
    if (settings.top_samples < 1) {
        throw Error(ErrorCode::InvalidSetting, "top_samples must be at least 1");
    }
    if (!(settings.min_share > 0.0 && settings.min_share <= 1.0)) {
        throw Error(ErrorCode::InvalidSetting, "min_share must be in (0, 1]");
    }
    if (settings.component_names.empty()) {
        throw Error(ErrorCode::InvalidSetting, "component_names must not be empty");
    }
    for (const std::string& name : settings.component_names) {
        if (name.empty()) {
            throw Error(ErrorCode::InvalidSetting, "component names must be nonempty");
        }
    }
}

Project load_project(const std::filesystem::path& project_file) {
    const std::string text = read_text_file(project_file);
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::IoFailure,
                    "project file \"" + project_file.string() + "\" is not valid JSON: " + e.what());
    }

    Project project;
    const std::filesystem::path base = project_file.has_parent_path()
                                           ? project_file.parent_path()
                                           : std::filesystem::path(".");
    auto resolve = [&](const char* key) -> std::filesystem::path {
        if (!doc.contains(key) || !doc[key].is_string()) {
            throw Error(ErrorCode::InvalidValue,
                        "project file is missing the \"" + std::string(key) + "\" path");
        }
        std::filesystem::path p = doc[key].get<std::string>();
        return p.is_absolute() ? p : base / p;
    };
    project.lexicon_file = resolve("lexicon");
    project.responses_file = resolve("responses");
    project.catalog_file = resolve("catalog");
    project.colors_file = resolve("colors");

    if (doc.contains("settings")) {
        const auto& s = doc["settings"];
        Settings& out = project.settings;
        if (s.contains("top_n")) out.top_n = s["top_n"].get<std::size_t>();
        if (s.contains("top_samples")) out.top_samples = s["top_samples"].get<std::size_t>();
        if (s.contains("min_share")) out.min_share = s["min_share"].get<double>();
        if (s.contains("impute_mean")) out.impute_mean = s["impute_mean"].get<bool>();
        if (s.contains("correlation")) out.correlation = s["correlation"].get<bool>();
        if (s.contains("arrow_scale_mode")) {
            const std::string mode = s["arrow_scale_mode"].get<std::string>();
            if (mode == "loading") {
                out.arrow_scale_mode = ArrowScaleMode::Loading;
            } else if (mode == "correlation") {
                out.arrow_scale_mode = ArrowScaleMode::Correlation;
            } else {
                throw Error(ErrorCode::InvalidSetting,
                            "arrow_scale_mode must be \"loading\" or \"correlation\"");
            }
        }
        if (s.contains("component_names")) {
            out.component_names = s["component_names"].get<std::vector<std::string>>();
        }
    }
    check_settings(project.settings);
    return project;
}

} // namespace kansei
