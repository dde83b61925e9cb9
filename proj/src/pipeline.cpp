#include "kansei/pipeline.hpp"

#include <cstdio>
#include <ostream>

#include "kansei/log.hpp"
#include "kansei/plots.hpp"

namespace kansei {

namespace {

std::vector<ProductSample> catalog_samples(const AttributeCatalog& catalog) {
    return catalog.samples();
}

std::string fmt2(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
}

} // namespace

LoadedProject load_inputs(const Project& project) {
    LoadedProject loaded;
    loaded.config = project;
    loaded.lexicon = lexicon_from_json(read_text_file(project.lexicon_file), nullptr,
                                       project.lexicon_file.string());
    loaded.catalog = parse_catalog(read_text_file(project.catalog_file), default_features(), nullptr,
                                   project.catalog_file.string());
    if (loaded.lexicon.pairs().empty()) {
        throw Error(ErrorCode::InvalidValue,
                    project.lexicon_file.string() + ": lexicon declares no bipolar pairs");
    }
    ParseOptions options;
    options.impute_mean = project.settings.impute_mean;
    loaded.ratings = parse_responses(read_text_file(project.responses_file), loaded.lexicon.pairs(),
                                     catalog_samples(loaded.catalog), options, nullptr,
                                     project.responses_file.string());
    loaded.ballots = parse_colors(read_text_file(project.colors_file), nullptr,
                                  project.colors_file.string());
    return loaded;
}

std::size_t run_validate(const Project& project, std::ostream& out) {
    Diagnostics diag;

    const std::string lexicon_text = read_text_file(project.lexicon_file);
    Lexicon lexicon = lexicon_from_json(lexicon_text, &diag, project.lexicon_file.string());

    const std::string catalog_text = read_text_file(project.catalog_file);
    AttributeCatalog catalog =
        parse_catalog(catalog_text, default_features(), &diag, project.catalog_file.string());

    if (lexicon.pairs().empty()) {
        diag.add(project.lexicon_file.string(), 0, ErrorCode::InvalidValue,
                 "lexicon declares no bipolar pairs");
    }
    if (catalog.samples().empty()) {
        diag.add(project.catalog_file.string(), 0, ErrorCode::MissingCell,
                 "catalog declares no samples");
    }

    const std::string responses_text = read_text_file(project.responses_file);
    if (!lexicon.pairs().empty() && !catalog.samples().empty()) {
        ParseOptions options;
        options.impute_mean = project.settings.impute_mean;
        parse_responses(responses_text, lexicon.pairs(), catalog_samples(catalog), options, &diag,
                        project.responses_file.string());
    }

    const std::string colors_text = read_text_file(project.colors_file);
    std::vector<ColorBallot> ballots = parse_colors(colors_text, &diag, project.colors_file.string());
    if (ballots.empty()) {
        diag.add(project.colors_file.string(), 0, ErrorCode::EmptyBallots, "no color ballots");
    }

    for (const Diagnostic& item : diag.items()) {
        out << item.file << ":" << item.line << ": " << to_string(item.code) << ": " << item.message
            << "\n";
    }
    out << diag.size() << (diag.size() == 1 ? " issue" : " issues") << "\n";
    return diag.size();
}

AnalysisOutput analyze(const LoadedProject& loaded) {
    const Settings& settings = loaded.config.settings;
    check_settings(settings);

    AnalysisOutput output;
    ObservationMatrix observations = flatten(loaded.ratings);
    PcaOptions pca_options;
    pca_options.correlation = settings.correlation;
    output.pca = pca(observations.x, observations.labels, pca_options);

    const MeanTable table = mean_ratings(loaded.ratings);
    const std::size_t component_count =
        std::min(settings.component_names.size(), output.pca.eigenvalues.size());
    if (component_count < settings.component_names.size()) {
        log::info("fewer components than names; extra names ignored");
    }

    for (std::size_t k = 0; k < component_count; ++k) {
        auto weights = word_weights(output.pca, k);
        ComponentProfile profile =
            define_component(weights, settings.top_n, settings.component_names[k], k);
        SampleRanking ranking = rank_samples(table, profile.defining_words, k);

        std::vector<std::string> top;
        for (std::size_t i = 0; i < ranking.rows.size() && i < settings.top_samples; ++i) {
            top.push_back(ranking.rows[i].first);
        }
        for (const FeatureMatch& match : common_attributes(loaded.catalog, top, settings.min_share)) {
            output.interpretation.features.emplace_back(k, match);
        }
        output.interpretation.components.push_back(std::move(profile));
        output.interpretation.rankings.push_back(std::move(ranking));
    }

    output.colors = tally(loaded.ballots);
    return output;
}

namespace {

void write_analysis(const AnalysisOutput& output, const std::filesystem::path& out_dir) {
    write_text_file(out_dir / "pca.json", pca_result_to_json(output.pca));
    write_text_file(out_dir / "interpretation.json", interpretation_to_json(output.interpretation));
    write_text_file(out_dir / "colors.json", tally_to_json(output.colors));
}

} // namespace

void run_analyze(const LoadedProject& loaded, const std::filesystem::path& out_dir) {
    write_analysis(analyze(loaded), out_dir);
    log::info("analysis written to " + out_dir.string());
}

std::filesystem::path run_plot(const LoadedProject& loaded, const std::string& kind,
                               const std::filesystem::path& out_dir,
                               const std::optional<std::string>& box_word) {
    const Settings& settings = loaded.config.settings;
    std::string svg;
    if (kind == "scree" || kind == "cumulative" || kind == "biplot") {
        ObservationMatrix observations = flatten(loaded.ratings);
        PcaOptions pca_options;
        pca_options.correlation = settings.correlation;
        PcaResult result = pca(observations.x, observations.labels, pca_options);
        if (kind == "scree") {
            svg = plot_scree(result);
        } else if (kind == "cumulative") {
            svg = plot_cumulative(result);
        } else {
            svg = plot_biplot(result, 0, 1, settings.arrow_scale_mode);
        }
    } else if (kind == "heatmap") {
        svg = plot_heatmap(mean_ratings(loaded.ratings));
    } else if (kind == "box") {
        std::size_t pair_index = 0;
        if (box_word) {
            auto index = loaded.ratings.pair_index_of(*box_word);
            if (!index) {
                throw Error(ErrorCode::UnknownWord,
                            "word \"" + *box_word + "\" is not a declared bipolar pair");
            }
            pair_index = *index;
        }
        svg = plot_box(loaded.ratings, pair_index);
    } else if (kind == "swatches") {
        svg = plot_swatches(tally(loaded.ballots));
    } else {
        throw Error(ErrorCode::BadPlotKind,
                    "unknown plot kind \"" + kind +
                        "\" (expected scree, cumulative, biplot, heatmap, box or swatches)");
    }
    const std::filesystem::path path = out_dir / (kind + ".svg");
    write_text_file(path, svg);
    return path;
}

void run_report(const LoadedProject& loaded, const std::filesystem::path& out_dir) {
    const AnalysisOutput output = analyze(loaded);
    write_analysis(output, out_dir);
    for (const char* kind : {"scree", "cumulative", "biplot", "heatmap", "box", "swatches"}) {
        run_plot(loaded, kind, out_dir);
    }

    std::string md;
    md += "# Kansei Analysis Report\n\n";
    md += "## Principal Components\n\n";
    for (const ComponentProfile& component : output.interpretation.components) {
        md += "### PC" + std::to_string(component.pc_index + 1) + ": " + component.name + "\n\n";
        md += "Defining words:";
        for (const std::string& word : component.defining_words) md += " " + word;
        md += "\n\nExplained variance: " +
              fmt2(output.pca.explained_ratio[component.pc_index] * 100.0) + "%\n\n";
    }
    md += "## Sample Rankings\n\n";
    for (const SampleRanking& ranking : output.interpretation.rankings) {
        md += "PC" + std::to_string(ranking.pc_index + 1) + ":";
        for (const auto& [sample, mean] : ranking.rows) {
            md += " " + sample + "=" + fmt2(mean);
        }
        md += "\n\n";
    }
    md += "## Shared Design Features\n\n";
    for (const auto& [pc_index, match] : output.interpretation.features) {
        md += "- PC" + std::to_string(pc_index + 1) + ": " + std::string(to_string(match.feature)) +
              " = " + match.value + " (" + std::to_string(match.support) + " of top samples)\n";
    }
    md += "\n## Color Votes\n\n";
    for (const RankedBallot& entry : output.colors.entries) {
        md += "- rank " + std::to_string(entry.rank) + ": " + entry.ballot.name + " (" +
              std::to_string(entry.ballot.votes) + " votes)\n";
    }
    md += "\nPlots: scree.svg, cumulative.svg, biplot.svg, heatmap.svg, box.svg, swatches.svg\n";
    write_text_file(out_dir / "report.md", md);
}

} // namespace kansei
