#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "kansei/log.hpp"
#include "kansei/pipeline.hpp"

namespace {

struct CliOptions {
    std::string project_file;
    std::string out_dir = ".";
    std::string kind;
    std::optional<std::string> box_word;
    std::optional<std::size_t> top_n;
    std::optional<double> min_share;
    std::optional<std::string> arrow_scale;
    bool correlation = false;
    bool impute_mean = false;
};

void apply_overrides(kansei::Project& project, const CliOptions& options) {
    if (options.top_n) project.settings.top_n = *options.top_n;
    if (options.min_share) project.settings.min_share = *options.min_share;
    if (options.correlation) project.settings.correlation = true;
    if (options.impute_mean) project.settings.impute_mean = true;
    if (options.arrow_scale) {
        if (*options.arrow_scale == "loading") {
            project.settings.arrow_scale_mode = kansei::ArrowScaleMode::Loading;
        } else if (*options.arrow_scale == "correlation") {
            project.settings.arrow_scale_mode = kansei::ArrowScaleMode::Correlation;
        } else {
            throw kansei::Error(kansei::ErrorCode::InvalidSetting,
                                "--arrow-scale must be loading or correlation");
        }
    }
    kansei::check_settings(project.settings);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kansei engineering survey analysis"};
    app.require_subcommand(1);

    CliOptions options;
    std::string command;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--project", options.project_file, "Project JSON file")->required();
        sub->add_option("--out", options.out_dir, "Output directory");
        sub->add_option("--top-n", options.top_n, "Defining words per component");
        sub->add_option("--min-share", options.min_share, "Feature consensus threshold in (0,1]");
        sub->add_option("--arrow-scale", options.arrow_scale, "Biplot arrow scale: loading|correlation");
        sub->add_flag("--correlation", options.correlation, "Use the correlation matrix");
        sub->add_flag("--impute-mean", options.impute_mean, "Fill missing ratings with column means");
        sub->callback([&, sub] { command = sub->get_name(); });
    };

    add_common(app.add_subcommand("validate", "Check all project inputs and list schema violations"));
    add_common(app.add_subcommand("analyze", "Run the pipeline and write JSON outputs"));
    CLI::App* plot = app.add_subcommand("plot", "Render one SVG chart");
    add_common(plot);
    plot->add_option("--kind", options.kind, "scree|cumulative|biplot|heatmap|box|swatches")->required();
    plot->add_option("--word", options.box_word, "Bipolar pair for box plots (positive word)");
    add_common(app.add_subcommand("report", "Analyze plus every plot and a markdown summary"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kansei::kExitUsageError;
    }

    try {
        kansei::Project project = kansei::load_project(options.project_file);
        apply_overrides(project, options);

        if (command == "validate") {
            const std::size_t issues = kansei::run_validate(project, std::cout);
            return issues == 0 ? kansei::kExitOk : kansei::kExitDomainError;
        }
        kansei::LoadedProject loaded = kansei::load_inputs(project);
        if (command == "analyze") {
            kansei::run_analyze(loaded, options.out_dir);
        } else if (command == "plot") {
            kansei::run_plot(loaded, options.kind, options.out_dir, options.box_word);
        } else if (command == "report") {
            kansei::run_report(loaded, options.out_dir);
        }
        return kansei::kExitOk;
    } catch (const kansei::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == kansei::ErrorCode::IoFailure ? kansei::kExitIoError
                                                        : kansei::kExitDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kansei::kExitDomainError;
    }
}
