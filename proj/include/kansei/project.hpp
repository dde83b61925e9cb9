#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "kansei/error.hpp"
#include "kansei/pca.hpp"

namespace kansei {

struct Settings {
    std::size_t top_n = 3;          // defining words per component
    std::size_t top_samples = 3;    // ranking rows fed into common_attributes
    double min_share = 2.0 / 3.0;   // consensus threshold for feature extraction
    ArrowScaleMode arrow_scale_mode = ArrowScaleMode::Loading;
    bool impute_mean = false;
    bool correlation = false;
    // One name per interpreted component, in component order.
    std::vector<std::string> component_names = {"PC1", "PC2"};
};

// The project file: where the four inputs live plus analysis settings.
// Paths are resolved against the project file's directory.
struct Project {
    std::filesystem::path lexicon_file;
    std::filesystem::path responses_file;
    std::filesystem::path catalog_file;
    std::filesystem::path colors_file;
    Settings settings;
};

Project load_project(const std::filesystem::path& project_file);

// Validates setting ranges; used after CLI overrides are applied.
void check_settings(const Settings& settings);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

} // namespace kansei
