#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "kansei/catalog.hpp"
#include "kansei/colorvote.hpp"
#include "kansei/interpret.hpp"
#include "kansei/lexicon.hpp"
#include "kansei/project.hpp"
#include "kansei/survey.hpp"

namespace kansei {

// Stable process exit codes for the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 2;
inline constexpr int kExitIoError = 3;
inline constexpr int kExitUsageError = 4;

// Everything the analysis commands need, loaded and validated.
struct LoadedProject {
    Project config;
    Lexicon lexicon;
    AttributeCatalog catalog;
    RatingMatrix ratings;
    std::vector<ColorBallot> ballots;
};

LoadedProject load_inputs(const Project& project);

// Scans every input and prints one line per schema violation plus a summary.
// Returns the number of issues found. I/O failures throw.
std::size_t run_validate(const Project& project, std::ostream& out);

struct AnalysisOutput {
    PcaResult pca;
    InterpretationReport interpretation;
    TallyResult colors;
};

AnalysisOutput analyze(const LoadedProject& loaded);

// Writes pca.json, interpretation.json and colors.json into out_dir.
void run_analyze(const LoadedProject& loaded, const std::filesystem::path& out_dir);

// Writes "<kind>.svg" into out_dir. kind is one of scree, cumulative,
// biplot, heatmap, box; box_word picks the pair for box plots (defaults to
// the first declared pair).
std::filesystem::path run_plot(const LoadedProject& loaded, const std::string& kind,
                               const std::filesystem::path& out_dir,
                               const std::optional<std::string>& box_word = std::nullopt);

// Analyze, all plots, the color swatch sheet, and a report.md index.
void run_report(const LoadedProject& loaded, const std::filesystem::path& out_dir);

} // namespace kansei
